#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "okubo/canonical.hpp"
#include "okubo/sampling.hpp"
#include "okubo/connection.hpp"
#include "okubo/verify.hpp"

using namespace okubo;

namespace {

const std::vector<Complex> kPts3 = {Complex(0.0), Complex(1.0), Complex(2.0)};

ExponentChart chart_iii3(Complex a, Complex b, Complex g, Complex r1) {
  ExponentChart ch;
  ch.type = ChartType::III_star_3;
  ch.alpha = {a};
  ch.beta = {b};
  ch.gamma = {g};
  ch.rho = {r1, a + b + g - 2.0 * r1};
  return ch;
}

void check_spectrum(const ExponentChart& chart, const OkuboSystem& sys) {
  std::vector<Complex> expect;
  auto m = chart.multiplicities();
  for (size_t i = 0; i < chart.rho.size(); ++i)
    for (int q = 0; q < m[i]; ++q) expect.push_back(chart.rho[i]);
  double err =
      eigenvalue_multiset_distance(eigenvalues(sys.A), expect);
  CHECK(err < 1e-10);
}

}  // namespace

TEST_CASE("III*3: hand-evaluated matrix for a fixed chart") {
  // alpha=0.21, beta=0.34, gamma=0.47, rho1=0.1 => rho2=0.82, w=0.37
  auto ch = chart_iii3(0.21, 0.34, 0.47, 0.1);
  CHECK(std::abs(ch.rho[1] - Complex(0.82)) < 1e-15);
  auto sys = build_iii3(ch, kPts3);
  CMatrix want(3, 3);
  want << Complex(0.21), Complex(0.24), Complex(1.0),
      Complex(0.11), Complex(0.34), Complex(1.0),
      Complex(0.11 * 0.37), Complex(0.24 * 0.37), Complex(0.47);
  CHECK(inf_norm(sys.A - want) < 1e-15);
  // the gamma entry is the chart gamma exactly
  CHECK(sys.A(2, 2) == Complex(0.47));
  check_spectrum(ch, sys);
}

TEST_CASE("III*3: alpha1 = rho1 zeroes the first column below the diagonal") {
  auto ch = chart_iii3(Complex(0.1), Complex(0.34, 0.1), Complex(0.47, -0.2),
                       Complex(0.1));
  auto sys = build_iii3(ch, kPts3);
  CHECK(std::abs(sys.A(1, 0)) < 1e-15);
  CHECK(std::abs(sys.A(2, 0)) < 1e-15);
}

TEST_CASE("III*3: degenerate denominator throws") {
  ExponentChart ch;
  ch.type = ChartType::III_star_3;
  ch.alpha = {Complex(0.21)};
  ch.beta = {Complex(0.34)};
  ch.gamma = {Complex(0.55)};
  ch.rho = {Complex(0.25), Complex(0.3)};  // rho1+rho2 = alpha+beta
  CHECK_THROWS_AS(build_iii3(ch, kPts3), Error);
}

TEST_CASE("II*: unit third-column blocks and vanishing rows at alpha = rho") {
  Rng rng(41);
  auto ch = sample_chart(ChartType::II_star, 3, rng);
  auto sys = build_ii_star(ch, kPts3);
  for (int i = 0; i < 5; ++i) CHECK(sys.A(i, 5) == Complex(1.0));
  check_spectrum(ch, sys);
  auto spec = spectral(sys, ch);
  CHECK(spec.multiplicities == std::vector<int>{3, 3});

  // alpha_2 -> rho_1: row 2 of A21 and entry 2 of A31 vanish (the factor
  // (alpha_j - rho_1)(alpha_j - rho_2) does not need the Fuchs relation)
  auto ch2 = ch;
  ch2.alpha[1] = ch2.rho[0];
  auto sys2 = build_ii_star(ch2, kPts3);
  for (int i = 0; i < 2; ++i) CHECK(std::abs(sys2.A(3 + i, 1)) < 1e-12);
  CHECK(std::abs(sys2.A(5, 1)) < 1e-12);
}

TEST_CASE("III*: unit blocks and vanishing column at beta = rho1") {
  Rng rng(42);
  auto ch = sample_chart(ChartType::III_star, 2, rng);
  auto sys = build_iii_star(ch, kPts3);
  for (int i = 0; i < 4; ++i) CHECK(sys.A(i, 4) == Complex(1.0));
  check_spectrum(ch, sys);

  auto ch2 = ch;
  ch2.beta[0] = ch2.rho[0];
  auto sys2 = build_iii_star(ch2, kPts3);
  // column 1 of A12 and entry 1 of A32 carry the factor beta_1 - rho_1
  CHECK(std::abs(sys2.A(0, 2)) < 1e-12);
  CHECK(std::abs(sys2.A(1, 2)) < 1e-12);
  CHECK(std::abs(sys2.A(4, 2)) < 1e-12);
}

TEST_CASE("III*: n = 1 equals the 3x3 constructor") {
  Rng rng(43);
  auto ch = sample_chart(ChartType::III_star, 1, rng);
  auto a = build_iii_star(ch, kPts3);
  auto ch3 = ch;
  ch3.type = ChartType::III_star_3;
  auto b = build_iii3(ch3, kPts3);
  CHECK(inf_norm(a.A - b.A) < 1e-14);
}

TEST_CASE("IV: row-4 reciprocal entries and spectral multiplicities") {
  Rng rng(44);
  auto ch = sample_chart(ChartType::IV, 0, rng);
  auto pts = default_points(ChartType::IV);
  auto sys = build_iv(ch, pts);
  for (int j = 0; j < 2; ++j) {
    Complex den = ch.beta[j] - ch.beta[1 - j];
    CHECK(std::abs(sys.A(3, 4 + j) - 1.0 / den) < 1e-12);
  }
  check_spectrum(ch, sys);
  auto spec = spectral(sys, ch);
  CHECK(spec.multiplicities == std::vector<int>{2, 2, 2});

  // alpha_j = rho_k kills row j of A21
  for (int k = 0; k < 3; ++k) {
    auto ch2 = ch;
    ch2.alpha[1] = ch2.rho[k];
    auto sys2 = build_iv(ch2, pts);
    CHECK(std::abs(sys2.A(4, 1)) < 1e-10);
    CHECK(std::abs(sys2.A(5, 1)) < 1e-10);
  }
}

TEST_CASE("IV*: diagonal keeps the chart exponents; zero corner block") {
  Rng rng(45);
  auto ch = sample_chart(ChartType::IV_star, 0, rng);
  auto sys = build_iv_star(ch, kPts3);
  CHECK(sys.A(0, 0) == ch.alpha[0]);
  CHECK(sys.A(1, 1) == ch.alpha[1]);
  CHECK(sys.A(2, 2) == ch.beta[0]);
  CHECK(sys.A(3, 3) == ch.beta[1]);
  CHECK(sys.A(4, 4) == ch.gamma[0]);
  CHECK(sys.A(5, 5) == ch.gamma[1]);
  CHECK(sys.A(4, 5) == Complex(0.0));
  CHECK(sys.A(5, 4) == Complex(0.0));
  check_spectrum(ch, sys);
  auto spec = spectral(sys, ch);
  CHECK(spec.multiplicities == std::vector<int>{4, 2});
}

TEST_CASE("confluent exponents are rejected") {
  Rng rng(46);
  auto ch = sample_chart(ChartType::IV_star, 0, rng);
  ch.alpha[1] = ch.alpha[0];
  CHECK_THROWS_AS(build_iv_star(ch, kPts3), Error);
}

TEST_CASE("partial-fraction identity behind the chain construction") {
  // residual entry at the gamma slot of (III*)_{2n-1} with rho = rho_2
  // equals prod(beta_k - rho_1) / prod(rho_2 - alpha_k)
  Rng rng(47);
  for (int n : {2, 3}) {
    auto target = sample_chart(ChartType::II_star, n, rng);
    ChainStep cs = chain_source(target);
    auto src = build_canonical(cs.source, kPts3);
    Complex rho = cs.step.rho;
    int m = src.n();
    CMatrix A11 = src.block(0, 0);
    CMatrix inv = mat_inv(
        CMatrix(A11 - rho * CMatrix::Identity(A11.rows(), A11.cols())));
    Complex lhs = src.A(m - 1, m - 1) - rho -
                  (src.block(2, 0) * inv * src.block(0, 2))(0, 0);
    // the printed identity drops a -(rho2 - rho1) factor; the residual is
    // -(rho2-rho1) prod(beta_k - rho1) / prod(rho2 - alpha_k)
    Complex rhs = -(cs.source.rho[1] - cs.source.rho[0]);
    for (size_t k = 0; k < cs.source.beta.size(); ++k)
      rhs *= (cs.source.beta[k] - cs.source.rho[0]) /
             (cs.source.rho[1] - cs.source.alpha[k]);
    CHECK(std::abs(lhs - rhs) < 1e-10 * std::max(1.0, std::abs(rhs)));
  }
}

TEST_CASE("every constructor passes validate and spectral") {
  Rng rng(48);
  for (auto [type, n] : {std::pair<ChartType, int>{ChartType::III_star_3, 1},
                         {ChartType::II_star, 2},
                         {ChartType::III_star, 2},
                         {ChartType::II_star, 3},
                         {ChartType::III_star, 3},
                         {ChartType::IV, 0},
                         {ChartType::IV_star, 0}}) {
    auto ch = sample_chart(type, n, rng);
    auto sys = build_canonical(ch, default_points(type));
    CHECK(validate(sys).ok());
    CHECK_NOTHROW(spectral(sys, ch));
  }
}

TEST_CASE("constructor symmetry relations with the printed conjugators") {
  Rng rng(49);
  SUBCASE("III*: Ad(diag(S_1i, S_1j, 1)) of the sigma-permuted matrix") {
    auto ch = sample_chart(ChartType::III_star, 3, rng);
    auto A = build_iii_star(ch, kPts3).A;
    for (int i : {1, 2}) {
      for (int j : {1, 2}) {
        auto perm = swap_beta(swap_alpha(ch, 0, i), 0, j);
        auto B = build_iii_star(perm, kPts3).A;
        int n = 3;
        CMatrix S = CMatrix::Zero(2 * n + 1, 2 * n + 1);
        for (int q = 0; q < 2 * n + 1; ++q) S(q, q) = 1.0;
        S(0, 0) = S(i, i) = 0.0;
        S(0, i) = S(i, 0) = 1.0;
        S(n, n) = S(n + j, n + j) = 0.0;
        S(n, n + j) = S(n + j, n) = 1.0;
        CHECK(inf_norm(S * B * S - A) < 1e-12 * std::max(1.0, inf_norm(A)));
      }
    }
  }
  SUBCASE("IV: Ad(D14) of the alpha_1/alpha_4 exchange") {
    auto ch = sample_chart(ChartType::IV, 0, rng);
    auto pts = default_points(ChartType::IV);
    auto A = build_iv(ch, pts).A;
    auto B = build_iv(swap_alpha(ch, 0, 3), pts).A;
    auto d = iv_d14(ch);
    CMatrix D = CMatrix::Zero(6, 6);
    D(0, 3) = d[0];  // diag(d) * S14 on the alpha block
    D(1, 1) = d[1];
    D(2, 2) = d[2];
    D(3, 0) = d[3];
    D(4, 4) = d[4];
    D(5, 5) = d[5];
    CHECK(inf_norm(D * B * mat_inv(D) - A) <
          1e-10 * std::max(1.0, inf_norm(A)));
  }
  SUBCASE("IV*: Ad(Dgamma) of the gamma exchange") {
    auto ch = sample_chart(ChartType::IV_star, 0, rng);
    auto A = build_iv_star(ch, kPts3).A;
    auto B = build_iv_star(swap_gamma(ch, 0, 1), kPts3).A;
    auto d = iv_star_dgamma(ch);
    CMatrix D = CMatrix::Zero(6, 6);
    for (int q = 0; q < 4; ++q) D(q, q) = d[q];
    D(4, 5) = d[4];  // diag(d) * diag(I,I,S12)
    D(5, 4) = d[5];
    CHECK(inf_norm(D * B * mat_inv(D) - A) <
          1e-10 * std::max(1.0, inf_norm(A)));
  }
  SUBCASE("IV*: Ad(diag(S12,S12,I)) of the alpha+beta exchange") {
    auto ch = sample_chart(ChartType::IV_star, 0, rng);
    auto A = build_iv_star(ch, kPts3).A;
    auto B = build_iv_star(swap_beta(swap_alpha(ch, 0, 1), 0, 1), kPts3).A;
    CMatrix S = CMatrix::Zero(6, 6);
    S(0, 1) = S(1, 0) = S(2, 3) = S(3, 2) = 1.0;
    S(4, 4) = S(5, 5) = 1.0;
    CHECK(inf_norm(S * B * S - A) < 1e-12 * std::max(1.0, inf_norm(A)));
  }
}
