#pragma once

#include <string>
#include <vector>

#include "okubo/numerics.hpp"

namespace okubo {

enum class ChartType { II_star, III_star, IV, IV_star, III_star_3 };

std::string to_string(ChartType t);
ChartType chart_type_from_string(const std::string& s);

/// Characteristic exponents of one canonical family member. alpha/beta/gamma
/// are the nontrivial local exponents of the diagonal blocks, rho the
/// eigenvalues of A (without multiplicity; multiplicities come from the
/// family's partition table).
struct ExponentChart {
  ChartType type = ChartType::III_star_3;
  std::vector<Complex> alpha;
  std::vector<Complex> beta;
  std::vector<Complex> gamma;
  std::vector<Complex> rho;

  /// Family parameter: n for II*_{2n} / III*_{2n+1}, fixed for IV, IV*.
  int family_n() const;
  int rank() const;
  std::vector<int> partition() const;
  std::vector<int> multiplicities() const;

  /// Local exponent lists in block order.
  std::vector<std::vector<Complex>> block_exponents() const;

  void check_shape() const;  // throws BadInput on wrong list lengths
};

/// Sum of local exponents minus sum of rho_i with multiplicity.
Complex fuchs_residual(const ExponentChart& chart);

/// Solves the last rho from the others so the Fuchs relation holds.
ExponentChart fill_last_rho(ExponentChart chart);

/// h_{ijk} = alpha_i + beta_j + gamma_k - 2 rho_1 - rho_2 (IV* only),
/// 1-based indices.
Complex h_tensor(const ExponentChart& chart, int i, int j, int k);

ExponentChart swap_alpha(ExponentChart c, int i, int j);
ExponentChart swap_beta(ExponentChart c, int i, int j);
ExponentChart swap_gamma(ExponentChart c, int i, int j);

}  // namespace okubo
