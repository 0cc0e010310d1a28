#include "okubo/system.hpp"

#include <cmath>
#include <numeric>

namespace okubo {

int OkuboSystem::block_start(int i) const {
  int s = 0;
  for (int k = 0; k < i; ++k) s += partition[k];
  return s;
}

CMatrix OkuboSystem::block(int i, int j) const {
  return A.block(block_start(i), block_start(j), partition[i], partition[j]);
}

std::vector<Complex> OkuboSystem::block_diagonal(int k) const {
  std::vector<Complex> out(partition[k]);
  int s = block_start(k);
  for (int i = 0; i < partition[k]; ++i) out[i] = A(s + i, s + i);
  return out;
}

void OkuboSystem::check_shape() const {
  int total = std::accumulate(partition.begin(), partition.end(), 0);
  if (total != n() || A.rows() != A.cols() ||
      points.size() != partition.size()) {
    throw Error(ErrorCode::BadInput, "inconsistent system shape");
  }
  for (size_t i = 0; i < points.size(); ++i)
    for (size_t j = i + 1; j < points.size(); ++j)
      if (std::abs(points[i] - points[j]) < 1e-9)
        throw Error(ErrorCode::BadInput, "singular points too close");
}

namespace {

double dist_to_integer(Complex z) {
  return std::abs(z - Complex(std::round(z.real()), 0.0));
}

double dist_to_nonzero_integer(Complex z) {
  double ni = std::round(z.real());
  if (ni == 0.0) ni = z.real() >= 0.0 ? 1.0 : -1.0;
  return std::abs(z - Complex(ni, 0.0));
}

}  // namespace

ValidationReport validate(const OkuboSystem& system, double margin) {
  system.check_shape();
  ValidationReport rep;
  for (int k = 0; k < system.r(); ++k) {
    auto d = system.block_diagonal(k);
    for (size_t i = 0; i < d.size(); ++i) {
      double di = dist_to_integer(d[i]);
      if (di < 1e-8) {
        rep.violations.push_back("block " + std::to_string(k + 1) +
                                 ": integer exponent");
      } else if (di < margin) {
        rep.warnings.push_back("block " + std::to_string(k + 1) +
                               ": exponent within margin of an integer");
      }
      for (size_t j = i + 1; j < d.size(); ++j) {
        double dd = dist_to_nonzero_integer(d[i] - d[j]);
        if (dd < 1e-8) {
          rep.violations.push_back("block " + std::to_string(k + 1) +
                                   ": exponents differ by a nonzero integer");
        } else if (dd < margin) {
          rep.warnings.push_back("block " + std::to_string(k + 1) +
                                 ": resonance margin low");
        }
        if (std::abs(d[i] - d[j]) < 1e-8) {
          rep.violations.push_back("block " + std::to_string(k + 1) +
                                   ": repeated exponent");
        }
      }
    }
  }
  // Fuchs: trace(A) = sum of all local exponents happens by construction;
  // report the residual against the global spectrum instead.
  Complex tr = system.A.trace();
  Complex loc = 0.0;
  for (int k = 0; k < system.r(); ++k)
    for (Complex v : system.block_diagonal(k)) loc += v;
  rep.fuchs_residual = std::abs(tr - loc);
  if (rep.fuchs_residual > 1e-10) {
    rep.violations.push_back("trace does not match local exponents");
  }
  return rep;
}

ResidueTuple residues(const OkuboSystem& system) {
  ResidueTuple out;
  for (int k = 0; k < system.r(); ++k) {
    CMatrix Ak = CMatrix::Zero(system.n(), system.n());
    int s = system.block_start(k);
    Ak.block(s, 0, system.partition[k], system.n()) =
        system.A.block(s, 0, system.partition[k], system.n());
    out.A.push_back(std::move(Ak));
  }
  return out;
}

OkuboSystem from_residues(const ResidueTuple& tuple,
                          const std::vector<int>& partition,
                          const std::vector<Complex>& points) {
  OkuboSystem sys;
  sys.partition = partition;
  sys.points = points;
  sys.A = CMatrix::Zero(tuple.A.at(0).rows(), tuple.A.at(0).cols());
  for (const auto& Ak : tuple.A) sys.A += Ak;
  sys.check_shape();
  return sys;
}

SpectralData spectral(const OkuboSystem& system, const ExponentChart& expected) {
  SpectralData out;
  for (int k = 0; k < system.r(); ++k)
    out.local_exponents.push_back(system.block_diagonal(k));
  out.rho = expected.rho;

  if (system.partition != expected.partition()) {
    throw Error(ErrorCode::MultiplicityMismatch,
                "block partition does not match type " +
                    to_string(expected.type));
  }
  auto want = expected.multiplicities();
  int n = system.n();
  for (size_t i = 0; i < expected.rho.size(); ++i) {
    CMatrix shifted = system.A - expected.rho[i] * CMatrix::Identity(n, n);
    int m = n - numeric_rank(shifted);
    out.multiplicities.push_back(m);
    if (m != want[i]) {
      throw Error(ErrorCode::MultiplicityMismatch,
                  "eigenvalue rho_" + std::to_string(i + 1) +
                      " has multiplicity " + std::to_string(m) +
                      ", expected " + std::to_string(want[i]));
    }
  }
  return out;
}

}  // namespace okubo
