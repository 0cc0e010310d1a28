#include "okubo/numerics.hpp"

#include <cmath>

namespace okubo {

Complex e_of(Complex mu) {
  return std::exp(Complex(0.0, 2.0 * kPi) * mu);
}

namespace {

// Lanczos coefficients, g = 7.
const double kLanczos[9] = {
    0.99999999999980993,     676.5203681218851,    -1259.1392167224028,
    771.32342877765313,      -176.61502916214059,  12.507343278686905,
    -0.13857109526572012,    9.9843695780195716e-6, 1.5056327351493116e-7};

Complex lanczos_core(Complex z) {
  // valid for Re z >= 0.5
  z -= 1.0;
  Complex x = kLanczos[0];
  for (int i = 1; i < 9; ++i) x += kLanczos[i] / (z + static_cast<double>(i));
  Complex t = z + 7.5;
  return std::sqrt(2.0 * kPi) * std::pow(t, z + 0.5) * std::exp(-t) * x;
}

}  // namespace

Complex cgamma(Complex z) {
  double nearest = std::round(z.real());
  if (nearest <= 0.0 &&
      std::abs(z - Complex(nearest, 0.0)) < 1e-12) {
    throw Error(ErrorCode::PoleAtNonPositiveInteger,
                "gamma pole at non-positive integer near z = (" +
                    std::to_string(z.real()) + ", " + std::to_string(z.imag()) + ")");
  }
  if (z.real() < 0.5) {
    // reflection: Gamma(z) Gamma(1-z) = pi / sin(pi z)
    return kPi / (std::sin(kPi * z) * lanczos_core(1.0 - z));
  }
  return lanczos_core(z);
}

Complex cpow(Complex base, Complex exponent, double assigned_arg) {
  double mag = std::abs(base);
  if (mag == 0.0) {
    throw Error(ErrorCode::ZeroBase, "cpow: zero base");
  }
  return std::exp(exponent * Complex(std::log(mag), assigned_arg));
}

BranchConvention::BranchConvention(std::vector<Complex> points)
    : points_(std::move(points)) {}

BranchConvention BranchConvention::default_for(std::vector<Complex> points) {
  // the calibrated table assumes real, strictly increasing points; anything
  // else needs explicit argument assignments
  for (size_t i = 0; i + 1 < points.size(); ++i) {
    if (points[i].imag() != 0.0 || points[i + 1].imag() != 0.0 ||
        !(points[i].real() < points[i + 1].real())) {
      throw Error(ErrorCode::BranchUndefined,
                  "default branch table requires real increasing points");
    }
  }
  BranchConvention bc(std::move(points));
  int r = bc.count();
  for (int i = 0; i < r; ++i) {
    for (int j = 0; j < r; ++j) {
      if (i == j) continue;
      if (i > j) {
        bc.args_[{i, j}] = 0.0;
      } else {
        bc.args_[{i, j}] = -kPi;
      }
    }
  }
  return bc;
}

void BranchConvention::set_arg(int i, int j, double arg) {
  args_[{i, j}] = arg;
}

double BranchConvention::arg(int i, int j) const {
  auto it = args_.find({i, j});
  if (it == args_.end()) {
    throw Error(ErrorCode::BranchUndefined,
                "no argument assigned for pair (" + std::to_string(i) + "," +
                    std::to_string(j) + ")");
  }
  return it->second;
}

Complex BranchConvention::power(int i, int j, Complex mu) const {
  return cpow(points_.at(i) - points_.at(j), mu, arg(i, j));
}

bool BranchConvention::consistent(double tol) const {
  int r = count();
  for (int i = 0; i < r; ++i) {
    for (int j = i + 1; j < r; ++j) {
      double d = std::abs(std::abs(arg(i, j) - arg(j, i)) - kPi);
      if (d > tol) return false;
    }
  }
  return true;
}

double inf_norm(const CMatrix& a) {
  double best = 0.0;
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    double s = 0.0;
    for (Eigen::Index j = 0; j < a.cols(); ++j) s += std::abs(a(i, j));
    if (std::isnan(s)) return s;  // propagate instead of max-swallowing
    best = std::max(best, s);
  }
  return best;
}

CMatrix mat_mul(const CMatrix& a, const CMatrix& b) {
  if (a.cols() != b.rows()) {
    throw Error(ErrorCode::BadInput, "mat_mul: dimension mismatch");
  }
  return a * b;
}

CMatrix mat_solve(const CMatrix& a, const CMatrix& b) {
  if (a.rows() != a.cols() || a.rows() != b.rows()) {
    throw Error(ErrorCode::BadInput, "mat_solve: dimension mismatch");
  }
  Eigen::PartialPivLU<CMatrix> lu(a);
  CMatrix x = lu.solve(b);
  x += lu.solve(b - a * x);  // one refinement step
  double res = inf_norm(a * x - b);
  double scale = std::max(inf_norm(b), 1e-300);
  if (!(res <= 1e-10 * scale)) {
    throw Error(ErrorCode::SingularMatrix, "mat_solve: residual too large");
  }
  return x;
}

CMatrix mat_inv(const CMatrix& a, bool* ill_conditioned) {
  CMatrix inv = mat_solve(a, CMatrix::Identity(a.rows(), a.cols()));
  if (ill_conditioned != nullptr) {
    *ill_conditioned = inf_norm(a) * inf_norm(inv) > 1e12;
  }
  return inv;
}

int numeric_rank(CMatrix a, double rel_tol) {
  double tol = rel_tol * std::max(inf_norm(a), 1e-300);
  int rank = 0;
  Eigen::Index rows = a.rows(), cols = a.cols();
  Eigen::Index row = 0;
  for (Eigen::Index step = 0; step < std::min(rows, cols); ++step) {
    // full pivot among remaining rows/cols
    Eigen::Index pi = row, pj = step;
    double best = 0.0;
    for (Eigen::Index i = row; i < rows; ++i)
      for (Eigen::Index j = step; j < cols; ++j)
        if (std::abs(a(i, j)) > best) {
          best = std::abs(a(i, j));
          pi = i;
          pj = j;
        }
    if (best <= tol) break;
    a.row(row).swap(a.row(pi));
    a.col(step).swap(a.col(pj));
    for (Eigen::Index i = row + 1; i < rows; ++i) {
      Complex f = a(i, step) / a(row, step);
      a.row(i).tail(cols - step) -= f * a.row(row).tail(cols - step);
    }
    ++rank;
    ++row;
  }
  return rank;
}

std::vector<Complex> eigenvalues(const CMatrix& a) {
  Eigen::ComplexEigenSolver<CMatrix> es(a, /*computeEigenvectors=*/false);
  std::vector<Complex> out(a.rows());
  for (Eigen::Index i = 0; i < a.rows(); ++i) out[i] = es.eigenvalues()(i);
  return out;
}

}  // namespace okubo
