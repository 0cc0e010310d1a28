#pragma once

#include <complex>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Dense>

namespace okubo {

using Complex = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;

enum class ErrorCode {
  PoleAtNonPositiveInteger,
  ZeroBase,
  SingularMatrix,
  MultiplicityMismatch,
  DegenerateDenominator,
  ConfluentExponents,
  KernelConditionViolated,
  RankExceedsOne,
  DegenerateRhoPlusC,
  GammaPole,
  BranchUndefined,
  ZeroConjugatorEntry,
  IncompleteTable,
  ResonanceDivisor,
  StepUnderflow,
  ClearanceViolated,
  FrameIllConditioned,
  TestPointDisagreement,
  BadInput,
};

/// Domain error carrying a machine-readable code alongside the message.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& msg)
      : std::runtime_error(msg), code_(code) {}
  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

constexpr double kPi = 3.14159265358979323846264338327950288;

/// e(mu) = exp(2 pi i mu).
Complex e_of(Complex mu);

/// Complex Gamma via Lanczos (g = 7, 9 coefficients) with the reflection
/// formula for Re z < 1/2. Throws GammaPole near non-positive integers.
Complex cgamma(Complex z);

/// base^exponent with an explicitly assigned argument for the base:
/// exp(exponent * (log|base| + i*assigned_arg)). The argument is never
/// recomputed from the base.
Complex cpow(Complex base, Complex exponent, double assigned_arg);

/// Argument assignments for the pairwise differences t_i - t_j of the
/// singular points. The table is runtime-configurable; the default for
/// real increasing points is arg(t_i - t_j) = 0 for i > j and -pi for
/// i < j (calibrated against the numeric oracle).
class BranchConvention {
 public:
  BranchConvention() = default;
  explicit BranchConvention(std::vector<Complex> points);

  static BranchConvention default_for(std::vector<Complex> points);

  void set_arg(int i, int j, double arg);
  double arg(int i, int j) const;

  /// (t_i - t_j)^mu under the assigned argument.
  Complex power(int i, int j, Complex mu) const;

  const std::vector<Complex>& points() const { return points_; }
  int count() const { return static_cast<int>(points_.size()); }

  /// Checks that arg(t_i-t_j) and arg(t_j-t_i) differ by +-pi.
  bool consistent(double tol = 1e-12) const;

 private:
  std::vector<Complex> points_;
  std::map<std::pair<int, int>, double> args_;
};

double inf_norm(const CMatrix& a);

CMatrix mat_mul(const CMatrix& a, const CMatrix& b);

/// Solve a x = b by LU with partial pivoting; the residual
/// |a x - b|_inf <= 1e-10 |b|_inf is enforced.
CMatrix mat_solve(const CMatrix& a, const CMatrix& b);

/// Inverse with a condition estimate |A| |A^-1|; estimates above 1e12 set
/// *ill_conditioned instead of failing.
CMatrix mat_inv(const CMatrix& a, bool* ill_conditioned = nullptr);

/// Numeric rank by column-pivoted elimination, threshold rel_tol * |a|_inf.
int numeric_rank(CMatrix a, double rel_tol = 1e-8);

std::vector<Complex> eigenvalues(const CMatrix& a);

}  // namespace okubo
