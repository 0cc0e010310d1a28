#include "okubo/canonical.hpp"

#include <cmath>

namespace okubo {

namespace {

constexpr double kConfluence = 1e-8;

void require_distinct(const std::vector<Complex>& v, const char* what) {
  for (size_t i = 0; i < v.size(); ++i)
    for (size_t j = i + 1; j < v.size(); ++j)
      if (std::abs(v[i] - v[j]) < kConfluence)
        throw Error(ErrorCode::ConfluentExponents,
                    std::string("confluent ") + what + " exponents");
}

/// prod over k != j of (v_j - v_k)
Complex diff_prod(const std::vector<Complex>& v, size_t j) {
  Complex p = 1.0;
  for (size_t k = 0; k < v.size(); ++k)
    if (k != j) p *= v[j] - v[k];
  return p;
}

}  // namespace

std::vector<Complex> default_points(ChartType type) {
  if (type == ChartType::IV) return {Complex(0.0), Complex(1.0)};
  return {Complex(0.0), Complex(1.0), Complex(2.0)};
}

OkuboSystem build_iii3(const ExponentChart& chart,
                       const std::vector<Complex>& points) {
  chart.check_shape();
  Complex a1 = chart.alpha[0], b1 = chart.beta[0], g = chart.gamma[0];
  Complex r1 = chart.rho[0], r2 = chart.rho[1];
  Complex w = r1 + r2 - a1 - b1;
  if (std::abs(w) < kConfluence) {
    throw Error(ErrorCode::DegenerateDenominator,
                "rho1 + rho2 - alpha1 - beta1 vanishes");
  }
  OkuboSystem sys;
  sys.partition = {1, 1, 1};
  sys.points = points;
  sys.A = CMatrix(3, 3);
  sys.A << a1, b1 - r1, Complex(1.0),
      a1 - r1, b1, Complex(1.0),
      (a1 - r1) * w, (b1 - r1) * w, g;
  sys.check_shape();
  return sys;
}

OkuboSystem build_ii_star(const ExponentChart& chart,
                          const std::vector<Complex>& points) {
  chart.check_shape();
  const auto& a = chart.alpha;
  const auto& b = chart.beta;
  Complex g = chart.gamma[0];
  Complex r1 = chart.rho[0], r2 = chart.rho[1];
  Complex rs = r1 + r2;
  int n = chart.family_n();
  require_distinct(a, "alpha");
  require_distinct(b, "beta");

  OkuboSystem sys;
  sys.partition = {n, n - 1, 1};
  sys.points = points;
  int N = 2 * n;
  sys.A = CMatrix::Zero(N, N);
  for (int i = 0; i < n; ++i) sys.A(i, i) = a[i];
  for (int i = 0; i < n - 1; ++i) sys.A(n + i, n + i) = b[i];
  sys.A(N - 1, N - 1) = g;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n - 1; ++j) {
      Complex num = 1.0;
      for (int k = 0; k < n; ++k)
        if (k != i) num *= b[j] + a[k] - rs;
      sys.A(i, n + j) = num / diff_prod(b, j);
    }
    sys.A(i, N - 1) = 1.0;
  }
  for (int i = 0; i < n - 1; ++i) {
    for (int j = 0; j < n; ++j) {
      Complex num = (a[j] - r1) * (a[j] - r2);
      for (int k = 0; k < n - 1; ++k)
        if (k != i) num *= a[j] + b[k] - rs;
      sys.A(n + i, j) = num / diff_prod(a, j);
    }
    sys.A(n + i, N - 1) = 1.0;
  }
  for (int j = 0; j < n; ++j) {
    Complex num = -(a[j] - r1) * (a[j] - r2);
    for (int k = 0; k < n - 1; ++k) num *= a[j] + b[k] - rs;
    sys.A(N - 1, j) = num / diff_prod(a, j);
  }
  for (int j = 0; j < n - 1; ++j) {
    Complex num = -1.0;
    for (int k = 0; k < n; ++k) num *= b[j] + a[k] - rs;
    sys.A(N - 1, n + j) = num / diff_prod(b, j);
  }
  sys.check_shape();
  return sys;
}

OkuboSystem build_iii_star(const ExponentChart& chart,
                           const std::vector<Complex>& points) {
  chart.check_shape();
  const auto& a = chart.alpha;
  const auto& b = chart.beta;
  Complex g = chart.gamma[0];
  Complex r1 = chart.rho[0], r2 = chart.rho[1];
  Complex rs = r1 + r2;
  int n = chart.family_n();
  require_distinct(a, "alpha");
  require_distinct(b, "beta");

  OkuboSystem sys;
  sys.partition = {n, n, 1};
  sys.points = points;
  int N = 2 * n + 1;
  sys.A = CMatrix::Zero(N, N);
  for (int i = 0; i < n; ++i) {
    sys.A(i, i) = a[i];
    sys.A(n + i, n + i) = b[i];
  }
  sys.A(N - 1, N - 1) = g;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      Complex num12 = b[j] - r1;
      Complex num21 = a[j] - r1;
      for (int k = 0; k < n; ++k) {
        if (k != i) {
          num12 *= b[j] + a[k] - rs;
          num21 *= a[j] + b[k] - rs;
        }
      }
      sys.A(i, n + j) = num12 / diff_prod(b, j);
      sys.A(n + i, j) = num21 / diff_prod(a, j);
    }
    sys.A(i, N - 1) = 1.0;
    sys.A(n + i, N - 1) = 1.0;
  }
  for (int j = 0; j < n; ++j) {
    Complex num31 = -(a[j] - r1);
    Complex num32 = -(b[j] - r1);
    for (int k = 0; k < n; ++k) {
      num31 *= a[j] + b[k] - rs;
      num32 *= b[j] + a[k] - rs;
    }
    sys.A(N - 1, j) = num31 / diff_prod(a, j);
    sys.A(N - 1, n + j) = num32 / diff_prod(b, j);
  }
  sys.check_shape();
  return sys;
}

OkuboSystem build_iv(const ExponentChart& chart,
                     const std::vector<Complex>& points) {
  chart.check_shape();
  const auto& a = chart.alpha;
  const auto& b = chart.beta;
  const auto& rho = chart.rho;
  Complex rs = rho[0] + rho[1] + rho[2];
  require_distinct(a, "alpha");
  require_distinct(b, "beta");

  OkuboSystem sys;
  sys.partition = {4, 2};
  sys.points = points;
  sys.A = CMatrix::Zero(6, 6);
  for (int i = 0; i < 4; ++i) sys.A(i, i) = a[i];
  for (int i = 0; i < 2; ++i) sys.A(4 + i, 4 + i) = b[i];
  for (int j = 0; j < 2; ++j) {
    Complex den = diff_prod(b, j);
    for (int i = 0; i < 3; ++i) {
      Complex num = 1.0;
      for (int k = 0; k < 3; ++k)
        if (k != i) num *= a[k] + a[3] + b[j] - rs;
      sys.A(i, 4 + j) = num / den;
    }
    sys.A(3, 4 + j) = 1.0 / den;
  }
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 3; ++j) {
      Complex num = (a[j] - rho[0]) * (a[j] - rho[1]) * (a[j] - rho[2]);
      for (int k = 0; k < 2; ++k)
        if (k != i) num *= a[j] + a[3] + b[k] - rs;
      sys.A(4 + i, j) = num / diff_prod(a, j);
    }
    Complex num = (a[3] - rho[0]) * (a[3] - rho[1]) * (a[3] - rho[2]);
    for (int k = 0; k < 3; ++k)
      for (int l = 0; l < 2; ++l)
        if (l != i) num *= a[k] + a[3] + b[l] - rs;
    sys.A(4 + i, 3) = num / diff_prod(a, 3);
  }
  sys.check_shape();
  return sys;
}

OkuboSystem build_iv_star(const ExponentChart& chart,
                          const std::vector<Complex>& points) {
  chart.check_shape();
  const auto& a = chart.alpha;
  const auto& b = chart.beta;
  const auto& g = chart.gamma;
  Complex r1 = chart.rho[0];
  require_distinct(a, "alpha");
  require_distinct(b, "beta");
  require_distinct(g, "gamma");

  auto h = [&](int i, int j, int k) { return h_tensor(chart, i, j, k); };
  CMatrix H(6, 6);
  H << a[0], 0, h(2, 1, 2), h(2, 2, 2), 1, h(2, 1, 2) * h(2, 2, 2),
      0, a[1], h(1, 1, 2), h(1, 2, 2), 1, h(1, 1, 2) * h(1, 2, 2),
      h(1, 2, 2), h(2, 2, 2), b[0], 0, 1, -h(1, 2, 2) * h(2, 2, 2),
      h(1, 1, 2), h(2, 1, 2), 0, b[1], 1, -h(1, 1, 2) * h(2, 1, 2),
      -h(1, 1, 2) * h(1, 2, 2), -h(2, 1, 2) * h(2, 2, 2),
      -h(1, 1, 2) * h(2, 1, 2), -h(1, 2, 2) * h(2, 2, 2), g[0], 0,
      -1, -1, 1, 1, 0, g[1];
  std::vector<Complex> d(6);
  for (int j = 0; j < 2; ++j) {
    d[j] = (a[j] - r1) / (a[j] - a[1 - j]);
    d[2 + j] = (b[j] - r1) / (b[j] - b[1 - j]);
    d[4 + j] = (g[j] - r1) / (g[j] - g[1 - j]);
  }
  // off-diagonal blocks column-scaled by D; diagonal keeps the exponents
  OkuboSystem sys;
  sys.partition = {2, 2, 2};
  sys.points = points;
  sys.A = CMatrix(6, 6);
  for (int i = 0; i < 6; ++i)
    for (int j = 0; j < 6; ++j) sys.A(i, j) = H(i, j) * d[j];
  for (int i = 0; i < 6; ++i) sys.A(i, i) = H(i, i);
  sys.check_shape();
  return sys;
}

OkuboSystem build_canonical(const ExponentChart& chart,
                            const std::vector<Complex>& points) {
  switch (chart.type) {
    case ChartType::II_star: return build_ii_star(chart, points);
    case ChartType::III_star: return build_iii_star(chart, points);
    case ChartType::IV: return build_iv(chart, points);
    case ChartType::IV_star: return build_iv_star(chart, points);
    case ChartType::III_star_3: return build_iii3(chart, points);
  }
  throw Error(ErrorCode::BadInput, "unknown chart type");
}

}  // namespace okubo
