#include "okubo/sampling.hpp"

#include <cmath>

namespace okubo {

std::uint64_t Rng::next() {
  // splitmix64
  std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

double Rng::uniform() {
  return static_cast<double>(next() >> 11) * 0x1.0p-53;
}

double Rng::uniform(double lo, double hi) {
  return lo + (hi - lo) * uniform();
}

namespace {

double dist_to_integers(Complex z) {
  return std::abs(z - Complex(std::round(z.real()), 0.0));
}

double dist_to_nonpositive_integers(Complex z) {
  double k = std::min(std::round(z.real()), 0.0);
  return std::abs(z - Complex(k, 0.0));
}

bool pairwise_ok(const std::vector<Complex>& v, double margin) {
  for (size_t i = 0; i < v.size(); ++i)
    for (size_t j = i + 1; j < v.size(); ++j) {
      if (std::abs(v[i] - v[j]) < margin) return false;
      if (dist_to_integers(v[i] - v[j]) < margin &&
          std::abs((v[i] - v[j]).real()) > 0.5)
        return false;
    }
  return true;
}

}  // namespace

bool chart_is_generic(const ExponentChart& chart, double margin) {
  auto blocks = chart.block_exponents();
  for (const auto& blk : blocks) {
    for (Complex z : blk) {
      if (std::abs(z) > 1.0) return false;
      if (dist_to_integers(z) < margin) return false;
    }
    if (!pairwise_ok(blk, margin)) return false;
  }
  for (Complex r : chart.rho)
    if (std::abs(r) > 1.0) return false;
  if (!pairwise_ok(chart.rho, margin)) return false;
  if (std::abs(fuchs_residual(chart)) > 1e-12) return false;

  // every Gamma argument appearing in the closed forms must stay away from
  // non-positive integers; the arguments are combinations of the shapes
  // below (chain parameters included via rho sums)
  std::vector<Complex> args;
  auto add = [&](Complex z) { args.push_back(z); };
  const auto& a = chart.alpha;
  const auto& b = chart.beta;
  const auto& g = chart.gamma;
  const auto& rho = chart.rho;
  Complex rs = rho[0] + rho[1];
  if (chart.type == ChartType::IV) rs += rho[2];
  if (chart.type == ChartType::IV_star) rs = 2.0 * rho[0] + rho[1];
  for (Complex x : a) {
    add(-x);
    add(x + 1.0);
    for (Complex r : rho) {
      add(1.0 + r - x);
      add(x - r);
    }
  }
  for (Complex x : b) {
    add(-x);
    add(x + 1.0);
    for (Complex r : rho) {
      add(1.0 + r - x);
      add(x - r);
    }
  }
  for (Complex x : g) {
    add(-x);
    add(x + 1.0);
    for (Complex r : rho) {
      add(1.0 + r - x);
      add(x - r);
    }
  }
  auto cross = [&](const std::vector<Complex>& u,
                   const std::vector<Complex>& v) {
    for (Complex x : u)
      for (Complex y : v) {
        if (chart.type == ChartType::IV) {
          add(x + y + a[3] - rs);
          add(1.0 + rs - x - y - a[3]);
        } else if (chart.type == ChartType::IV_star) {
          for (Complex z : g) {
            add(x + y + z - rs);
            add(1.0 + rs - x - y - z);
          }
        } else {
          add(x + y - rs);
          add(1.0 + rs - x - y);
        }
      }
  };
  cross(a, b);
  if (chart.type == ChartType::IV) {
    // pair sums alpha_i + alpha_k enter through the conjugator diagonals
    for (size_t i = 0; i < a.size(); ++i)
      for (size_t k = 0; k < a.size(); ++k)
        for (Complex y : b)
          if (i != k) add(a[i] + a[k] + y - rs);
  }
  for (Complex z : args)
    if (dist_to_nonpositive_integers(z) < margin) return false;
  return true;
}

ExponentChart sample_chart(ChartType type, int n, Rng& rng, double margin) {
  for (int attempt = 0; attempt < 4000; ++attempt) {
    ExponentChart ch;
    ch.type = type;
    auto draw = [&](int count, std::vector<Complex>& out) {
      out.clear();
      for (int i = 0; i < count; ++i) {
        double re = rng.uniform(-0.30, 0.30);
        double im = rng.uniform(0.07, 0.28);
        if (rng.uniform() < 0.5) im = -im;
        out.emplace_back(re, im);
      }
    };
    switch (type) {
      case ChartType::II_star:
        draw(n, ch.alpha);
        draw(n - 1, ch.beta);
        draw(1, ch.gamma);
        draw(2, ch.rho);
        break;
      case ChartType::III_star:
        draw(n, ch.alpha);
        draw(n, ch.beta);
        draw(1, ch.gamma);
        draw(2, ch.rho);
        break;
      case ChartType::III_star_3:
        draw(1, ch.alpha);
        draw(1, ch.beta);
        draw(1, ch.gamma);
        draw(2, ch.rho);
        break;
      case ChartType::IV:
        draw(4, ch.alpha);
        draw(2, ch.beta);
        draw(3, ch.rho);
        break;
      case ChartType::IV_star:
        draw(2, ch.alpha);
        draw(2, ch.beta);
        draw(2, ch.gamma);
        draw(2, ch.rho);
        break;
    }
    ch = fill_last_rho(ch);
    if (chart_is_generic(ch, margin)) return ch;
  }
  throw Error(ErrorCode::BadInput, "chart sampling failed to find a generic "
                                   "parameter point");
}

}  // namespace okubo
