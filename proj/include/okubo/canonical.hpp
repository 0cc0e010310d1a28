#pragma once

#include "okubo/chart.hpp"
#include "okubo/system.hpp"

namespace okubo {

/// Canonical 3x3 system of type (III*)_3. Identical to build_iii_star at
/// n = 1 (the mc construction conjugated by diag(1,1,rho1+rho2-a1-b1)).
OkuboSystem build_iii3(const ExponentChart& chart,
                       const std::vector<Complex>& points);

OkuboSystem build_ii_star(const ExponentChart& chart,
                          const std::vector<Complex>& points);

OkuboSystem build_iii_star(const ExponentChart& chart,
                           const std::vector<Complex>& points);

OkuboSystem build_iv(const ExponentChart& chart,
                     const std::vector<Complex>& points);

OkuboSystem build_iv_star(const ExponentChart& chart,
                          const std::vector<Complex>& points);

/// Dispatch on chart.type. `points` must have as many entries as the
/// partition has blocks (default (0,1,2) / (0,1)).
OkuboSystem build_canonical(const ExponentChart& chart,
                            const std::vector<Complex>& points);

std::vector<Complex> default_points(ChartType type);

}  // namespace okubo
