#pragma once

#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "okubo/katz.hpp"
#include "okubo/system.hpp"

namespace okubo {

/// Which transcription of the printed coefficient displays to evaluate.
/// Literal follows the displays character by character (free indices bound
/// as documented in the registry); Corrected is the variant that passes the
/// numeric oracle under the calibrated branch convention.
enum class Variant { Literal, Corrected };

/// Connection coefficients C_ij (n_i x n_j, i != j) of a canonical solution
/// matrix. Blocks left undetermined by a recurrence step hold NaN entries.
struct ConnectionTable {
  std::vector<int> partition;
  std::map<std::pair<int, int>, CMatrix> blocks;

  const CMatrix& at(int i, int j) const;
  CMatrix& at(int i, int j);
  bool complete() const;  // no NaN entries, all off-diagonal blocks present
};

/// One suspect display and how its variants fared; used for provenance
/// reports and the typo-ledger acceptance check.
struct RegistryEntry {
  std::string id;      // e.g. "II*.C21"
  std::string note;    // what differs between literal and corrected
};

const std::vector<RegistryEntry>& formula_registry();

/// Closed-form table for the chart's family (II*, III*, IV, IV*; III*3 is
/// evaluated as III* at n = 1).
ConnectionTable closed_form(const ExponentChart& chart,
                            const BranchConvention& branch,
                            Variant variant = Variant::Corrected);

/// The two scalar seeds (C12)_11 and (C13)_1 of the 3x3 case plus the table
/// completed from them. The literal variant reproduces the standalone seed
/// displays (t-power orientation differs from the family closed form).
struct SeedCoefficients {
  Complex c12_11;
  Complex c13_1;
  ConnectionTable completed;
};
SeedCoefficients seed_iii3_coeffs(const ExponentChart& chart,
                                  const BranchConvention& branch,
                                  Variant variant = Variant::Corrected);

/// One Katz-step update of a connection table (pure arithmetic).
/// Returns the target-shaped table with the new slot's row/column NaN
/// (those are fixed by exponent symmetry, not by the recurrence).
ConnectionTable recurrence_step(const ConnectionTable& table,
                                const OkuboSystem& source,
                                const KatzStep& step,
                                const BranchConvention& branch);

/// Fills NaN entries of `partial` from `reference`.
ConnectionTable complete_from(ConnectionTable partial,
                              const ConnectionTable& reference);

/// Chain the recurrence from the (III*)_3 seed up to `target`, completing
/// each step's undetermined slot by symmetry (closed-form values). Reports
/// the largest deviation of the recurrence-determined entries from the
/// closed forms along the way.
struct ChainResult {
  ConnectionTable table;
  double max_step_deviation = 0.0;
};
ChainResult chain_connection_table(const ExponentChart& target,
                                   const BranchConvention& branch);

/// Exponent transposition with its conjugation data (Lemma-4.1 style).
struct SymmetryAction {
  enum class Kind { Alpha, Beta, Gamma } kind;
  int i = 0, j = 0;  // 0-based indices of the exchanged exponents
};

ExponentChart apply_sigma(const ExponentChart& chart, const SymmetryAction& a);

/// diag entries d_1..d_6 of the alpha_1 <-> alpha_4 conjugator for type IV.
std::vector<Complex> iv_d14(const ExponentChart& chart);

/// diag entries of the gamma_1 <-> gamma_2 conjugator for type IV*.
std::vector<Complex> iv_star_dgamma(const ExponentChart& chart);

/// Rebuilds every block entry from the (1,1)-type seeds via the exponent
/// symmetries: entry (i,j) of a block is the seed evaluated on the
/// sigma-permuted chart, times the registered conjugator factors (the D14 /
/// Dgamma corrections for IV and IV*). `seed` maps a chart to the
/// (1,1)-entries of all blocks.
using SeedFn =
    std::function<std::map<std::pair<int, int>, Complex>(const ExponentChart&)>;
ConnectionTable symmetry_complete(const ExponentChart& chart,
                                  const SeedFn& seed);

/// Default seed: (1,1)-entries of the corrected closed forms.
SeedFn closed_form_seed(const BranchConvention& branch,
                        Variant variant = Variant::Corrected);

}  // namespace okubo
