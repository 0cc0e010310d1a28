#pragma once

#include <string>
#include <vector>

#include "okubo/chart.hpp"
#include "okubo/numerics.hpp"

namespace okubo {

/// (x - T) Y' = A Y with T = diag(t_1 I_{n_1}, ..., t_r I_{n_r}).
struct OkuboSystem {
  std::vector<int> partition;
  std::vector<Complex> points;
  CMatrix A;

  int n() const { return static_cast<int>(A.rows()); }
  int r() const { return static_cast<int>(partition.size()); }
  int block_start(int i) const;
  CMatrix block(int i, int j) const;
  /// Diagonal entries of A_kk (the local exponents at t_k).
  std::vector<Complex> block_diagonal(int k) const;

  void check_shape() const;
};

/// Schlesinger residues: A_k keeps block row k of A and is zero elsewhere.
struct ResidueTuple {
  std::vector<CMatrix> A;
};

struct ValidationReport {
  std::vector<std::string> violations;
  std::vector<std::string> warnings;
  double fuchs_residual = 0.0;
  bool ok() const { return violations.empty(); }
};

/// Non-resonance checks: within each block, no exponent is an integer and no
/// two exponents differ by a nonzero integer (tolerance 1e-8); values within
/// `margin` of a violation are reported as warnings. Also reports the
/// Fuchs-relation residual trace(A) - sum of local exponents.
ValidationReport validate(const OkuboSystem& system, double margin = 0.05);

ResidueTuple residues(const OkuboSystem& system);
OkuboSystem from_residues(const ResidueTuple& tuple,
                          const std::vector<int>& partition,
                          const std::vector<Complex>& points);

struct SpectralData {
  std::vector<std::vector<Complex>> local_exponents;
  std::vector<Complex> rho;
  std::vector<int> multiplicities;
};

/// Checks the declared global spectrum: for each rho_i of the chart,
/// m_i = n - rank(A - rho_i) must match the family's multiplicity table,
/// and the block partition must match the family's. Throws
/// MultiplicityMismatch otherwise.
SpectralData spectral(const OkuboSystem& system, const ExponentChart& expected);

}  // namespace okubo
