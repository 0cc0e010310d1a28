#pragma once

#include <vector>

#include "okubo/monodromy.hpp"
#include "okubo/system.hpp"

namespace okubo {

/// One Frobenius column: y(x) = sum_m f_m (x - t_j)^(exponent + m).
struct FrobeniusColumn {
  Complex exponent;            // alpha_{jl} for singular columns, 0 otherwise
  std::vector<CVector> coeff;  // f_0 .. f_N
};

/// Series frame at a singular point: the n_j singular columns first (the
/// canonical Psi_j block, f_0 = unit vectors), then n - n_j holomorphic
/// columns spanning the exponent-zero solutions.
struct LocalFrame {
  int base = 0;
  int order = 0;
  Complex point;
  std::vector<FrobeniusColumn> columns;

  /// Frame value at x with arg(x - t_base) = theta.
  CMatrix value(Complex x, double theta) const;
};

LocalFrame frobenius(const OkuboSystem& system, int j, int order = 48);

/// Polyline in the x-plane.
struct ContinuationPath {
  std::vector<Complex> waypoints;

  double clearance(const std::vector<Complex>& points) const;
  /// Accumulated winding number around `center` (must close up for loops).
  double winding(Complex center) const;
};

struct IntegratorStats {
  int steps = 0;
  int rejected = 0;
  double error_estimate = 0.0;  // accumulated local error bound
};

/// Continues the columns of `value` along the path by integrating
/// Y' = sum_k A_k / (x - t_k) Y with an adaptive embedded RK (DOP853
/// coefficients), local tolerance `tol`, step capped at 0.25x the distance
/// to the nearest singular point.
CMatrix continue_path(const OkuboSystem& system, const CMatrix& value,
                      const ContinuationPath& path, double tol = 1e-12,
                      IntegratorStats* stats = nullptr);

/// Ground-truth machinery for one system: germs of every local frame at a
/// common base point, connection extraction and loop monodromy.
class Oracle {
 public:
  explicit Oracle(const OkuboSystem& system, int order = 48,
                  double tol = 1e-12);

  const OkuboSystem& system() const { return sys_; }
  Complex base_point() const { return p0_; }
  const LocalFrame& frame(int j) const { return frames_[j]; }

  /// Germ at the base point of the full frame of t_j (n x n).
  const CMatrix& germ(int j) const { return germs_[j]; }

  /// C_ij: coefficients of Psi_j along Psi_i at t_i (n_i x n_j), with a
  /// cross-check at a second base point (TestPointDisagreement if off).
  CMatrix connection(int i, int j) const;

  ConnectionTable connection_table() const;

  /// Monodromy of the counterclockwise loop around t_i on the canonical
  /// basis.
  CMatrix loop_monodromy_matrix(int i) const;
  MonodromyTuple loop_monodromy() const;

  /// Monodromy of one counterclockwise loop around all finite points.
  CMatrix big_loop_monodromy() const;

  ContinuationPath loop_path(int i, int segments = 28) const;

 private:
  OkuboSystem sys_;
  double tol_;
  Complex p0_, p1_;  // base point and the cross-check base point
  double min_gap_ = 0.0;
  std::vector<double> radius_;
  std::vector<LocalFrame> frames_;
  std::vector<CMatrix> germs_;   // at p0
  std::vector<CMatrix> germs2_;  // at p1
  CMatrix psi0_;                 // canonical frame at p0
};

}  // namespace okubo
