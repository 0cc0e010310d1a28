#pragma once

#include <cstdint>

#include "okubo/chart.hpp"

namespace okubo {

/// Deterministic RNG: identical seeds give identical draws on every
/// platform (no implementation-defined distributions).
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed ? seed : 0x9e3779b97f4a7c15ULL) {}

  std::uint64_t next();
  /// uniform in [0, 1)
  double uniform();
  /// uniform in [lo, hi)
  double uniform(double lo, double hi);

 private:
  std::uint64_t state_;
};

/// Draws a generic chart of the requested family: local exponents with
/// |z| <= 1, imaginary parts bounded away from 0, the last rho solved from
/// the Fuchs relation, and every quantity the formulas divide by (or feed
/// to Gamma near a pole) kept at least `margin` away from degeneracy.
/// Rejection-samples until all checks pass.
ExponentChart sample_chart(ChartType type, int n, Rng& rng,
                           double margin = 0.05);

/// True when the chart keeps clear of resonances, confluences and the
/// Gamma poles of the coefficient formulas.
bool chart_is_generic(const ExponentChart& chart, double margin);

}  // namespace okubo
