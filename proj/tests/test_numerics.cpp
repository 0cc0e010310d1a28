#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "okubo/numerics.hpp"
#include "okubo/sampling.hpp"

using namespace okubo;

namespace {
double rel(Complex a, Complex b) { return std::abs(a - b) / std::abs(b); }
}  // namespace

TEST_CASE("e_of basic values") {
  CHECK(std::abs(e_of(Complex(0.0)) - Complex(1.0)) < 1e-15);
  CHECK(std::abs(e_of(Complex(0.5)) - Complex(-1.0)) < 1e-15);
  CHECK(std::abs(e_of(Complex(0.25)) - Complex(0.0, 1.0)) < 1e-15);
}

TEST_CASE("e_of periodicity") {
  Rng rng(2024);
  for (int i = 0; i < 200; ++i) {
    Complex mu(rng.uniform(-3, 3), rng.uniform(-3, 3));
    CHECK(std::abs(e_of(mu + 1.0) - e_of(mu)) / std::abs(e_of(mu)) < 1e-14);
  }
}

TEST_CASE("gamma analytic values") {
  CHECK(rel(cgamma(Complex(1.0)), Complex(1.0)) < 1e-14);
  CHECK(rel(cgamma(Complex(0.5)), Complex(std::sqrt(kPi))) < 1e-13);
  CHECK(rel(cgamma(Complex(5.0)), Complex(24.0)) < 1e-13);
}

TEST_CASE("gamma recurrence self-check at 2.3+1.1i") {
  Complex z(2.3, 1.1);
  CHECK(rel(cgamma(z + 1.0), z * cgamma(z)) < 1e-12);
}

TEST_CASE("gamma pole throws") {
  CHECK_THROWS_AS(cgamma(Complex(0.0)), Error);
  CHECK_THROWS_AS(cgamma(Complex(-3.0, 1e-14)), Error);
  CHECK_NOTHROW(cgamma(Complex(-3.0, 1e-3)));
}

TEST_CASE("gamma recurrence on seeded grid") {
  Rng rng(7);
  double worst = 0.0;
  int count = 0;
  while (count < 1000) {
    Complex z(rng.uniform(-20, 20), rng.uniform(-20, 20));
    if (std::abs(z - Complex(std::round(z.real()), 0.0)) < 0.05) continue;
    if (std::abs(z) < 0.05) continue;
    ++count;
    worst = std::max(worst, rel(cgamma(z + 1.0), z * cgamma(z)));
  }
  CHECK(worst < 1e-12);
}

TEST_CASE("gamma reflection on seeded grid") {
  Rng rng(8);
  double worst = 0.0;
  int count = 0;
  while (count < 1000) {
    Complex z(rng.uniform(-10, 10), rng.uniform(-10, 10));
    if (std::abs(z - Complex(std::round(z.real()), 0.0)) < 0.05) continue;
    ++count;
    Complex v = cgamma(z) * cgamma(1.0 - z) * std::sin(kPi * z) / kPi;
    worst = std::max(worst, std::abs(v - 1.0));
  }
  CHECK(worst < 1e-11);
}

TEST_CASE("cpow basics and integer powers") {
  CHECK(std::abs(cpow(Complex(1.0), Complex(0.37, 0.11), 0.0) -
                 Complex(1.0)) < 1e-15);
  CHECK(std::abs(cpow(Complex(-1.0), Complex(0.5), kPi) - Complex(0.0, 1.0)) <
        1e-15);
  Complex expect = std::exp(Complex(0.3, 0.2) * std::log(2.0));
  CHECK(std::abs(cpow(Complex(2.0), Complex(0.3, 0.2), 0.0) - expect) < 1e-15);
  CHECK_THROWS_AS(cpow(Complex(0.0), Complex(1.0), 0.0), Error);

  // repeated multiplication for integer exponents, any consistent arg
  Rng rng(9);
  for (int trial = 0; trial < 50; ++trial) {
    Complex b(rng.uniform(-2, 2), rng.uniform(-2, 2));
    if (std::abs(b) < 0.1) continue;
    double arg = std::arg(b) + 2.0 * kPi * std::floor(rng.uniform(-2, 3));
    for (int m = -5; m <= 5; ++m) {
      Complex direct = 1.0;
      for (int q = 0; q < std::abs(m); ++q) direct *= (m > 0) ? b : 1.0 / b;
      CHECK(std::abs(cpow(b, Complex(double(m)), arg) - direct) <
            1e-12 * std::max(1.0, std::abs(direct)));
    }
  }
}

TEST_CASE("branch convention default and consistency") {
  auto bc = BranchConvention::default_for(
      {Complex(0.0), Complex(1.0), Complex(2.0)});
  CHECK(bc.consistent());
  CHECK(bc.arg(1, 0) == 0.0);
  CHECK(bc.arg(0, 1) == -kPi);
  // (t2-t1)^1 = 1 with arg 0
  CHECK(std::abs(bc.power(1, 0, Complex(1.0)) - Complex(1.0)) < 1e-15);
  // (t1-t2)^0.5 with arg -pi: exp(0.5*(-i pi)) = -i
  CHECK(std::abs(bc.power(0, 1, Complex(0.5)) - Complex(0.0, -1.0)) < 1e-15);
  bc.set_arg(0, 1, kPi);
  CHECK(bc.consistent());
}

TEST_CASE("matrix ops: identity, diagonal inverse, residual") {
  Rng rng(11);
  CMatrix A(3, 3);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      A(i, j) = Complex(rng.uniform(-1, 1), rng.uniform(-1, 1));
  CMatrix I3 = CMatrix::Identity(3, 3);
  CHECK(inf_norm(mat_mul(I3, A) - A) == 0.0);

  CMatrix D = CMatrix::Zero(4, 4);
  for (int i = 0; i < 4; ++i)
    D(i, i) = Complex(rng.uniform(0.5, 2.0), rng.uniform(-1, 1));
  CMatrix Dinv = mat_inv(D);
  for (int i = 0; i < 4; ++i)
    CHECK(std::abs(Dinv(i, i) - 1.0 / D(i, i)) < 1e-14);

  CMatrix B(6, 6);
  for (int i = 0; i < 6; ++i)
    for (int j = 0; j < 6; ++j)
      B(i, j) = Complex(rng.uniform(-1, 1), rng.uniform(-1, 1));
  CMatrix Binv = mat_inv(B);
  CHECK(inf_norm(B * Binv - CMatrix::Identity(6, 6)) < 1e-10);

  CHECK_THROWS_AS(mat_mul(CMatrix::Zero(2, 3), CMatrix::Zero(2, 3)), Error);
  CMatrix S = CMatrix::Zero(2, 2);
  S(0, 0) = 1.0;
  CHECK_THROWS_AS(mat_inv(S), Error);
}

TEST_CASE("numeric rank with threshold") {
  CMatrix A = CMatrix::Zero(4, 4);
  A(0, 0) = 2.0;
  A(1, 1) = 1e-3;
  CHECK(numeric_rank(A) == 2);
  A(1, 1) = 1e-12;  // below 1e-8 * |A|
  CHECK(numeric_rank(A) == 1);
  // rank-1 outer product
  CVector u(4), v(4);
  for (int i = 0; i < 4; ++i) {
    u(i) = Complex(i + 1.0, 0.3 * i);
    v(i) = Complex(1.0 - 0.2 * i, 0.1);
  }
  CMatrix R = u * v.transpose();
  CHECK(numeric_rank(R) == 1);
}

TEST_CASE("ill-conditioned inverse sets the warning") {
  CMatrix D = CMatrix::Zero(2, 2);
  D(0, 0) = 1.0;
  D(1, 1) = 1e-13;
  bool ill = false;
  CMatrix inv = mat_inv(D, &ill);
  CHECK(ill);
  CHECK(std::abs(inv(1, 1) - 1e13) < 1.0);
  ill = true;
  mat_inv(CMatrix::Identity(3, 3), &ill);
  CHECK_FALSE(ill);
}

TEST_CASE("default branch table rejects unsorted or complex points") {
  CHECK_THROWS_AS(BranchConvention::default_for(
                      {Complex(1.0), Complex(0.0), Complex(2.0)}),
                  Error);
  CHECK_THROWS_AS(BranchConvention::default_for(
                      {Complex(0.0), Complex(1.0, 0.5)}),
                  Error);
}
