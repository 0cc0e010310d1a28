#include "okubo/chart.hpp"

#include <algorithm>

namespace okubo {

std::string to_string(ChartType t) {
  switch (t) {
    case ChartType::II_star: return "II*";
    case ChartType::III_star: return "III*";
    case ChartType::IV: return "IV";
    case ChartType::IV_star: return "IV*";
    case ChartType::III_star_3: return "III*3";
  }
  return "?";
}

ChartType chart_type_from_string(const std::string& s) {
  if (s == "II*") return ChartType::II_star;
  if (s == "III*") return ChartType::III_star;
  if (s == "IV") return ChartType::IV;
  if (s == "IV*") return ChartType::IV_star;
  if (s == "III*3") return ChartType::III_star_3;
  throw Error(ErrorCode::BadInput, "unknown chart type '" + s + "'");
}

int ExponentChart::family_n() const {
  switch (type) {
    case ChartType::II_star:
    case ChartType::III_star:
      return static_cast<int>(alpha.size());
    case ChartType::IV:
    case ChartType::IV_star:
      return 0;
    case ChartType::III_star_3:
      return 1;
  }
  return 0;
}

int ExponentChart::rank() const {
  switch (type) {
    case ChartType::II_star: return 2 * family_n();
    case ChartType::III_star: return 2 * family_n() + 1;
    case ChartType::IV:
    case ChartType::IV_star: return 6;
    case ChartType::III_star_3: return 3;
  }
  return 0;
}

std::vector<int> ExponentChart::partition() const {
  int n = family_n();
  switch (type) {
    case ChartType::II_star: return {n, n - 1, 1};
    case ChartType::III_star: return {n, n, 1};
    case ChartType::IV: return {4, 2};
    case ChartType::IV_star: return {2, 2, 2};
    case ChartType::III_star_3: return {1, 1, 1};
  }
  return {};
}

std::vector<int> ExponentChart::multiplicities() const {
  int n = family_n();
  switch (type) {
    case ChartType::II_star: return {n, n};
    case ChartType::III_star: return {n + 1, n};
    case ChartType::IV: return {2, 2, 2};
    case ChartType::IV_star: return {4, 2};
    case ChartType::III_star_3: return {2, 1};
  }
  return {};
}

std::vector<std::vector<Complex>> ExponentChart::block_exponents() const {
  if (type == ChartType::IV) return {alpha, beta};
  return {alpha, beta, gamma};
}

void ExponentChart::check_shape() const {
  auto need = [&](size_t a, size_t b, size_t g, size_t r) {
    if (alpha.size() != a || beta.size() != b || gamma.size() != g ||
        rho.size() != r) {
      throw Error(ErrorCode::BadInput,
                  "chart '" + to_string(type) + "' has wrong exponent counts");
    }
  };
  int n = family_n();
  switch (type) {
    case ChartType::II_star:
      if (n < 2) throw Error(ErrorCode::BadInput, "II* needs n >= 2");
      need(n, n - 1, 1, 2);
      break;
    case ChartType::III_star:
      if (n < 1) throw Error(ErrorCode::BadInput, "III* needs n >= 1");
      need(n, n, 1, 2);
      break;
    case ChartType::IV: need(4, 2, 0, 3); break;
    case ChartType::IV_star: need(2, 2, 2, 2); break;
    case ChartType::III_star_3: need(1, 1, 1, 2); break;
  }
}

Complex fuchs_residual(const ExponentChart& chart) {
  Complex s = 0.0;
  for (const auto& blk : chart.block_exponents())
    for (Complex v : blk) s += v;
  auto m = chart.multiplicities();
  for (size_t i = 0; i < chart.rho.size(); ++i)
    s -= static_cast<double>(m[i]) * chart.rho[i];
  return s;
}

ExponentChart fill_last_rho(ExponentChart chart) {
  auto m = chart.multiplicities();
  if (chart.rho.size() != m.size()) chart.rho.resize(m.size(), Complex(0.0));
  chart.rho.back() = 0.0;
  Complex res = fuchs_residual(chart);
  chart.rho.back() = res / static_cast<double>(m.back());
  return chart;
}

Complex h_tensor(const ExponentChart& chart, int i, int j, int k) {
  if (chart.type != ChartType::IV_star) {
    throw Error(ErrorCode::BadInput, "h_tensor is defined for IV* charts");
  }
  return chart.alpha.at(i - 1) + chart.beta.at(j - 1) + chart.gamma.at(k - 1) -
         2.0 * chart.rho[0] - chart.rho[1];
}

ExponentChart swap_alpha(ExponentChart c, int i, int j) {
  std::swap(c.alpha.at(i), c.alpha.at(j));
  return c;
}
ExponentChart swap_beta(ExponentChart c, int i, int j) {
  std::swap(c.beta.at(i), c.beta.at(j));
  return c;
}
ExponentChart swap_gamma(ExponentChart c, int i, int j) {
  std::swap(c.gamma.at(i), c.gamma.at(j));
  return c;
}

}  // namespace okubo
