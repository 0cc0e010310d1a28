#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "okubo/canonical.hpp"
#include "okubo/katz.hpp"
#include "okubo/sampling.hpp"

using namespace okubo;

namespace {
const std::vector<Complex> kPts3 = {Complex(0.0), Complex(1.0), Complex(2.0)};
}

TEST_CASE("add: zero shift, round trip, single-block effect") {
  Rng rng(51);
  auto ch = sample_chart(ChartType::III_star_3, 1, rng);
  auto sys = build_iii3(ch, kPts3);

  auto same = add_shift(sys, {Complex(0.0), Complex(0.0), Complex(0.0)});
  CHECK(inf_norm(same.A - sys.A) == 0.0);

  Complex c(0.37, -0.21);
  auto fwd = add_shift(sys, {c, Complex(0.0), Complex(0.0)});
  auto back = add_shift(fwd, {-c, Complex(0.0), Complex(0.0)});
  CHECK(inf_norm(back.A - sys.A) < 1e-15);

  CMatrix diff = fwd.A - sys.A;
  CHECK(std::abs(diff(0, 0) - c) < 1e-15);
  diff(0, 0) = 0.0;
  CHECK(inf_norm(diff) == 0.0);
}

TEST_CASE("factor_xi_eta: all residuals zero gives xi = eta = 0") {
  OkuboSystem sys;
  sys.partition = {1, 1};
  sys.points = {Complex(0.0), Complex(1.0)};
  Complex rho(0.4, 0.2);
  sys.A = CMatrix::Zero(2, 2);
  sys.A(0, 0) = Complex(0.7, -0.3);
  sys.A(1, 1) = rho;  // residual A_22 - rho - 0 = 0
  auto fe = factor_xi_eta(sys, 0, rho);
  CHECK(fe.xi.norm() == 0.0);
  CHECK(fe.eta.norm() == 0.0);
}

TEST_CASE("factor_xi_eta: rank-one reconstruction of the residual stack") {
  Rng rng(52);
  auto target = sample_chart(ChartType::III_star, 2, rng);
  ChainStep cs = chain_source(target);
  auto src = build_canonical(cs.source, kPts3);
  auto fe = factor_xi_eta(src, cs.step.k, cs.step.rho);
  // rebuild the stacked residual and compare entrywise
  int k = cs.step.k;
  CMatrix Akk = src.block(k, k);
  CMatrix inv = mat_inv(CMatrix(
      Akk - cs.step.rho * CMatrix::Identity(Akk.rows(), Akk.cols())));
  int row = 0;
  for (int i = 0; i < src.r(); ++i) {
    if (i == k) continue;
    int col = 0;
    for (int j = 0; j < src.r(); ++j) {
      if (j == k) continue;
      CMatrix blk =
          src.block(i, j) - src.block(i, k) * inv * src.block(k, j);
      if (i == j)
        blk -= cs.step.rho *
               CMatrix::Identity(src.partition[i], src.partition[j]);
      for (int p = 0; p < src.partition[i]; ++p)
        for (int q = 0; q < src.partition[j]; ++q)
          CHECK(std::abs(fe.xi(row + p) * fe.eta(col + q) - blk(p, q)) <
                1e-10);
      col += src.partition[j];
    }
    row += src.partition[i];
  }
}

TEST_CASE("katz chains reproduce the canonical constructors") {
  Rng rng(53);
  for (auto [type, n] : {std::pair<ChartType, int>{ChartType::II_star, 2},
                         {ChartType::III_star, 2},
                         {ChartType::II_star, 3},
                         {ChartType::III_star, 3}}) {
    auto target = sample_chart(type, n, rng);
    ChainStep cs = chain_source(target);
    auto src = build_canonical(cs.source, kPts3);
    auto [got, map] = katz_apply(src, cs.step, cs.norm);
    auto want = build_canonical(target, kPts3);
    CHECK(got.partition == want.partition);
    CHECK(inf_norm(got.A - want.A) < 1e-10);
    CHECK(map.grown_block == cs.step.k);
    CHECK(validate(got).ok());
  }
}

TEST_CASE("IV* from (III*)_5 with the registered normalization") {
  Rng rng(54);
  auto target = sample_chart(ChartType::IV_star, 0, rng);
  ChainStep cs = chain_source(target);
  CHECK(cs.step.k == 2);
  auto src = build_canonical(cs.source, kPts3);
  auto [got, map] = katz_apply(src, cs.step, cs.norm, &target);
  auto want = build_canonical(target, kPts3);
  CHECK(got.partition == std::vector<int>{2, 2, 2});
  CHECK(inf_norm(got.A - want.A) < 1e-10);
}

TEST_CASE("block growth is one and Fuchs is preserved") {
  Rng rng(55);
  auto target = sample_chart(ChartType::II_star, 3, rng);
  ChainStep cs = chain_source(target);
  auto src = build_canonical(cs.source, kPts3);
  auto [got, map] = katz_apply(src, cs.step, cs.norm);
  CHECK(map.new_partition[cs.step.k] == map.old_partition[cs.step.k] + 1);
  CHECK(validate(got).ok());
  // other diagonal blocks shift by -(rho+c); block k keeps its exponents
  Complex s = cs.step.rho + cs.step.c;
  for (int q = 0; q < src.partition[1]; ++q)
    CHECK(std::abs(got.A(got.block_start(1) + q, got.block_start(1) + q) -
                   (src.A(src.block_start(1) + q, src.block_start(1) + q) -
                    s)) < 1e-12);
  CHECK(std::abs(got.A(got.block_start(0), got.block_start(0)) -
                 src.A(0, 0)) < 1e-12);
  // the new slot carries rho
  int nc = map.new_column;
  CHECK(std::abs(got.A(nc, nc) - cs.step.rho) < 1e-12);
}

TEST_CASE("degenerate parameters are rejected") {
  Rng rng(56);
  auto target = sample_chart(ChartType::II_star, 2, rng);
  ChainStep cs = chain_source(target);
  auto src = build_canonical(cs.source, kPts3);

  KatzStep bad = cs.step;
  bad.c = -bad.rho;  // rho + c = 0
  CHECK_THROWS_AS(katz_apply(src, bad, cs.norm), Error);

  KatzStep kernel = cs.step;
  kernel.rho = src.A(0, 0);  // Ker(A_kk - rho) != 0
  CHECK_THROWS_AS(katz_apply(src, kernel, cs.norm), Error);

  KatzStep generic = cs.step;
  generic.rho = Complex(0.123, 0.456);  // not an eigenvalue: growth != 1
  CHECK_THROWS_AS(katz_apply(src, generic, cs.norm), Error);
}

TEST_CASE("chain_from_seed walks down to the 3x3 seed") {
  Rng rng(57);
  auto target = sample_chart(ChartType::III_star, 3, rng);
  auto steps = chain_from_seed(target);
  REQUIRE(steps.size() == 4);  // 3 -> 4 -> 5 -> 6 -> 7
  CHECK(steps.front().source.rank() == 3);
  auto sys = build_canonical(steps.front().source, kPts3);
  for (const auto& cs : steps) {
    auto [next, map] = katz_apply(sys, cs.step, cs.norm);
    sys = next;
  }
  auto want = build_canonical(target, kPts3);
  CHECK(inf_norm(sys.A - want.A) < 1e-9);
}
