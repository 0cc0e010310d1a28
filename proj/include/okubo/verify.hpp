#pragma once

#include <cstdint>

#include "okubo/json_io.hpp"
#include "okubo/oracle.hpp"
#include "okubo/sampling.hpp"

namespace okubo {

struct Tolerances {
  double monodromy = 1e-6;   // formula vs loop monodromy, entrywise
  double connection = 1e-6;  // closed form vs oracle extraction
  double chain = 1e-9;       // recurrence telescoping vs closed forms
  double katz = 1e-10;       // katz chains vs canonical constructors
  double spectra = 1e-10;    // Fuchs trace identity
  double product = 1e-8;     // ordered product relation residual
  double eigen = 1e-6;       // eigenvalue multiset matching

  /// Scales every tolerance by the OKUBO_TOL environment value, if set.
  static Tolerances from_env();
};

/// Oracle cross-check of one seeded system: connection blocks, monodromy,
/// product relation, spectra, rigidity.
Json verify_sample(const ExponentChart& chart,
                   const std::vector<Complex>& points,
                   const BranchConvention& branch, const Tolerances& tol);

/// `samples` seeded charts of one family.
Json verify_type(ChartType type, int n, int samples, std::uint64_t seed,
                 const Tolerances& tol);

/// Literal vs corrected variants of every registry display against the
/// oracle (>= 5 samples per family instance).
Json registry_report(int samples, std::uint64_t seed, const Tolerances& tol);

/// Katz-chain reconstruction of the canonical constructors (pure algebra).
Json katz_report(int samples, std::uint64_t seed, const Tolerances& tol);

/// Recurrence telescoping from the 3x3 seed (pure arithmetic, no ODE).
Json chain_report(int samples, std::uint64_t seed, const Tolerances& tol);

/// Gamma identities, e(mu) periodicity, series truncation stability.
Json numerics_report(std::uint64_t seed);

/// Eigenvalue multiset distance (greedy matching; exact for well-separated
/// clusters).
double eigenvalue_multiset_distance(std::vector<Complex> a,
                                    std::vector<Complex> b);

}  // namespace okubo
