#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "okubo/canonical.hpp"
#include "okubo/json_io.hpp"
#include "okubo/sampling.hpp"
#include "okubo/system.hpp"

using namespace okubo;

namespace {

OkuboSystem two_block_example() {
  OkuboSystem sys;
  sys.partition = {1, 1};
  sys.points = {Complex(0.0), Complex(1.0)};
  sys.A = CMatrix(2, 2);
  sys.A << Complex(0.3), Complex(0.9), Complex(-0.4), Complex(0.7);
  return sys;
}

}  // namespace

TEST_CASE("validate accepts non-resonant diagonals") {
  auto sys = two_block_example();
  auto rep = validate(sys);
  CHECK(rep.ok());
  CHECK(rep.fuchs_residual < 1e-12);
}

TEST_CASE("validate flags integer differences within a block") {
  OkuboSystem sys;
  sys.partition = {2, 1};
  sys.points = {Complex(0.0), Complex(1.0)};
  sys.A = CMatrix::Zero(3, 3);
  sys.A(0, 0) = 0.3;
  sys.A(1, 1) = 1.3;  // differs from 0.3 by 1
  sys.A(2, 2) = 0.7;
  auto rep = validate(sys);
  CHECK_FALSE(rep.ok());
}

TEST_CASE("validate warns near the resonance margin") {
  OkuboSystem sys = two_block_example();
  sys.A(0, 0) = Complex(0.01);  // within margin 0.05 of the integer 0
  auto rep = validate(sys, 0.05);
  CHECK(rep.ok());
  CHECK_FALSE(rep.warnings.empty());
}

TEST_CASE("canonical III*3 passes validation with tiny Fuchs residual") {
  Rng rng(31);
  auto chart = sample_chart(ChartType::III_star_3, 1, rng);
  auto sys = build_iii3(chart, default_points(chart.type));
  auto rep = validate(sys);
  CHECK(rep.ok());
  CHECK(rep.fuchs_residual <= 1e-12);
}

TEST_CASE("residues: single block returns A") {
  OkuboSystem sys;
  sys.partition = {2};
  sys.points = {Complex(0.0)};
  sys.A = CMatrix(2, 2);
  sys.A << Complex(0.4), Complex(1.0), Complex(0.0), Complex(-0.3);
  auto tuple = residues(sys);
  REQUIRE(tuple.A.size() == 1);
  CHECK(inf_norm(tuple.A[0] - sys.A) == 0.0);
}

TEST_CASE("residues: block-row support and exact reconstruction") {
  auto sys = two_block_example();
  auto tuple = residues(sys);
  CHECK(tuple.A[0](1, 0) == Complex(0.0));
  CHECK(tuple.A[0](1, 1) == Complex(0.0));
  CHECK(tuple.A[1](0, 0) == Complex(0.0));
  auto back = from_residues(tuple, sys.partition, sys.points);
  CHECK(inf_norm(back.A - sys.A) == 0.0);

  Rng rng(32);
  auto chart = sample_chart(ChartType::IV_star, 0, rng);
  auto sys6 = build_iv_star(chart, default_points(chart.type));
  auto t6 = residues(sys6);
  CMatrix sum = CMatrix::Zero(6, 6);
  for (const auto& Ak : t6.A) sum += Ak;
  CHECK(inf_norm(sum - sys6.A) == 0.0);
}

TEST_CASE("spectral matches the partition tables") {
  Rng rng(33);
  SUBCASE("II*_4: partitions (2,1,1) and (2,2)") {
    auto chart = sample_chart(ChartType::II_star, 2, rng);
    auto sys = build_ii_star(chart, default_points(chart.type));
    auto spec = spectral(sys, chart);
    CHECK(spec.multiplicities == std::vector<int>{2, 2});
    CHECK(sys.partition == std::vector<int>{2, 1, 1});
  }
  SUBCASE("IV_6: (4,2) and (2,2,2)") {
    auto chart = sample_chart(ChartType::IV, 0, rng);
    auto sys = build_iv(chart, default_points(chart.type));
    auto spec = spectral(sys, chart);
    CHECK(spec.multiplicities == std::vector<int>{2, 2, 2});
  }
  SUBCASE("III*3: rank(A - rho1) = 1 so m1 = 2") {
    auto chart = sample_chart(ChartType::III_star_3, 1, rng);
    auto sys = build_iii3(chart, default_points(chart.type));
    CMatrix shifted = sys.A - chart.rho[0] * CMatrix::Identity(3, 3);
    CHECK(numeric_rank(shifted) == 1);
    auto spec = spectral(sys, chart);
    CHECK(spec.multiplicities == std::vector<int>{2, 1});
  }
}

TEST_CASE("spectral throws on a wrong declaration") {
  Rng rng(34);
  auto chart = sample_chart(ChartType::III_star_3, 1, rng);
  auto sys = build_iii3(chart, default_points(chart.type));
  auto wrong = chart;
  std::swap(wrong.rho[0], wrong.rho[1]);  // multiplicities (2,1) -> (1,2)
  CHECK_THROWS_AS(spectral(sys, wrong), Error);
}

TEST_CASE("trace equals multiplicity-weighted global exponents") {
  Rng rng(35);
  for (auto [type, n] : {std::pair<ChartType, int>{ChartType::II_star, 3},
                         {ChartType::III_star, 2},
                         {ChartType::IV, 0},
                         {ChartType::IV_star, 0}}) {
    auto chart = sample_chart(type, n, rng);
    auto sys = build_canonical(chart, default_points(type));
    Complex want = 0.0;
    auto m = chart.multiplicities();
    for (size_t i = 0; i < chart.rho.size(); ++i)
      want += double(m[i]) * chart.rho[i];
    CHECK(std::abs(sys.A.trace() - want) < 1e-10);
  }
}

TEST_CASE("system json round trip") {
  auto sys = two_block_example();
  Json j = to_json(sys);
  auto back = system_from_json(j);
  CHECK(back.partition == sys.partition);
  CHECK(inf_norm(back.A - sys.A) == 0.0);
  CHECK(to_json(back).dump() == j.dump());
}

TEST_CASE("chart json round trip and fuchs helper") {
  Rng rng(36);
  auto chart = sample_chart(ChartType::II_star, 2, rng);
  Json j = to_json(chart);
  auto back = chart_from_json(j);
  CHECK(std::abs(fuchs_residual(back)) < 1e-12);
  CHECK(to_json(back).dump() == j.dump());

  auto moved = chart;
  moved.rho[1] += 0.37;
  CHECK(std::abs(fuchs_residual(moved)) > 0.1);
  CHECK(std::abs(fuchs_residual(fill_last_rho(moved))) < 1e-12);
}
