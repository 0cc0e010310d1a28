#include "okubo/oracle.hpp"

#include <algorithm>
#include <cmath>

namespace okubo {

// --------------------------------------------------------------------------
// Frobenius series
// --------------------------------------------------------------------------

CMatrix LocalFrame::value(Complex x, double theta) const {
  const int n = static_cast<int>(columns.at(0).coeff.at(0).size());
  Complex w = x - point;
  double mag = std::abs(w);
  CMatrix out(n, static_cast<int>(columns.size()));
  for (size_t c = 0; c < columns.size(); ++c) {
    const auto& col = columns[c];
    CVector acc = CVector::Zero(n);
    Complex wp = 1.0;
    for (const auto& f : col.coeff) {
      acc += f * wp;
      wp *= w;
    }
    Complex head = std::exp(col.exponent * Complex(std::log(mag), theta));
    out.col(static_cast<int>(c)) = acc * head;
  }
  return out;
}

LocalFrame frobenius(const OkuboSystem& system, int j, int order) {
  system.check_shape();
  const int n = system.n();
  const int r = system.r();
  const int sj = system.block_start(j);
  const int nj = system.partition[j];
  LocalFrame frame;
  frame.base = j;
  frame.order = order;
  frame.point = system.points[j];

  auto push_column = [&](Complex lam, CVector f0) {
    FrobeniusColumn col;
    col.exponent = lam;
    col.coeff.push_back(f0);
    for (int m = 0; m < order; ++m) {
      const CVector& fm = col.coeff.back();
      CVector nxt = CVector::Zero(n);
      CVector Af = system.A * fm;
      for (int i = 0; i < r; ++i) {
        if (i == j) continue;
        int si = system.block_start(i);
        Complex den =
            (system.points[j] - system.points[i]) * (lam + double(m + 1));
        if (std::abs(den) < 1e-10)
          throw Error(ErrorCode::ResonanceDivisor, "series divisor vanishes");
        for (int q = 0; q < system.partition[i]; ++q)
          nxt(si + q) = (Af(si + q) - (lam + double(m)) * fm(si + q)) / den;
      }
      // block j rows: (A_jj - (lam+m+1)) f_{m+1,j} = -sum A_ji f_{m+1,i}
      CVector rhs = CVector::Zero(nj);
      for (int i = 0; i < r; ++i) {
        if (i == j) continue;
        int si = system.block_start(i);
        rhs -= system.A.block(sj, si, nj, system.partition[i]) *
               nxt.segment(si, system.partition[i]);
      }
      for (int q = 0; q < nj; ++q) {
        Complex den = system.A(sj + q, sj + q) - (lam + double(m + 1));
        if (std::abs(den) < 1e-10)
          throw Error(ErrorCode::ResonanceDivisor,
                      "resonant exponent in series recursion");
        nxt(sj + q) = rhs(q) / den;
      }
      col.coeff.push_back(std::move(nxt));
    }
    frame.columns.push_back(std::move(col));
  };

  // singular columns: exponents alpha_{jl}, f_0 the unit vectors of block j
  for (int l = 0; l < nj; ++l) {
    CVector f0 = CVector::Zero(n);
    f0(sj + l) = 1.0;
    push_column(system.A(sj + l, sj + l), f0);
  }
  // holomorphic columns: exponent 0, off-block unit seeds, block-j part
  // solved from A_jj f_{0,j} = -sum A_ji f_{0,i}
  for (int c = 0; c < n; ++c) {
    if (c >= sj && c < sj + nj) continue;
    CVector f0 = CVector::Zero(n);
    f0(c) = 1.0;
    CVector rhs = CVector::Zero(nj);
    for (int i = 0; i < r; ++i) {
      if (i == j) continue;
      int si = system.block_start(i);
      rhs -= system.A.block(sj, si, nj, system.partition[i]) *
             f0.segment(si, system.partition[i]);
    }
    for (int q = 0; q < nj; ++q) {
      Complex den = system.A(sj + q, sj + q);
      if (std::abs(den) < 1e-10)
        throw Error(ErrorCode::ResonanceDivisor,
                    "zero local exponent in holomorphic seed");
      f0(sj + q) = rhs(q) / den;
    }
    push_column(Complex(0.0), f0);
  }
  return frame;
}

// --------------------------------------------------------------------------
// paths
// --------------------------------------------------------------------------

double ContinuationPath::clearance(const std::vector<Complex>& pts) const {
  double best = 1e300;
  for (size_t s = 0; s + 1 < waypoints.size(); ++s) {
    Complex a = waypoints[s], b = waypoints[s + 1];
    Complex d = b - a;
    double len2 = std::norm(d);
    for (Complex t : pts) {
      double u = len2 > 0.0
                     ? std::clamp((std::conj(d) * (t - a)).real() / len2, 0.0,
                                  1.0)
                     : 0.0;
      best = std::min(best, std::abs(a + u * d - t));
    }
  }
  return best;
}

double ContinuationPath::winding(Complex center) const {
  double acc = 0.0;
  for (size_t s = 0; s + 1 < waypoints.size(); ++s) {
    Complex a = waypoints[s] - center, b = waypoints[s + 1] - center;
    acc += std::arg(b / a);
  }
  return acc / (2.0 * kPi);
}

// --------------------------------------------------------------------------
// DOP853 (Hairer--Norsett--Wanner constants), complex state
// --------------------------------------------------------------------------

namespace {

struct Dop853 {
  // c nodes
  static constexpr double c2 = 0.526001519587677318785587544488e-01,
                          c3 = 0.789002279381515978178381316732e-01,
                          c4 = 0.118350341907227396726757197510e+00,
                          c5 = 0.281649658092772603273242802490e+00,
                          c6 = 0.333333333333333333333333333333e+00,
                          c7 = 0.25e+00,
                          c8 = 0.307692307692307692307692307692e+00,
                          c9 = 0.651282051282051282051282051282e+00,
                          c10 = 0.6e+00,
                          c11 = 0.857142857142857142857142857142e+00;
  static constexpr double b1 = 5.42937341165687622380535766363e-2,
                          b6 = 4.45031289275240888144113950566e0,
                          b7 = 1.89151789931450038304281599044e0,
                          b8 = -5.8012039600105847814672114227e0,
                          b9 = 3.1116436695781989440891606237e-1,
                          b10 = -1.52160949662516078556178806805e-1,
                          b11 = 2.01365400804030348374776537501e-1,
                          b12 = 4.47106157277725905176885569043e-2;
  static constexpr double bhh1 = 0.244094488188976377952755905512e+00,
                          bhh2 = 0.733846688281611857341361741547e+00,
                          bhh3 = 0.220588235294117647058823529412e-01;
  static constexpr double er1 = 0.1312004499419488073250102996e-01,
                          er6 = -0.1225156446376204440720569753e+01,
                          er7 = -0.4957589496572501915214079952e+00,
                          er8 = 0.1664377182454986536961530415e+01,
                          er9 = -0.3503288487499736816886487290e+00,
                          er10 = 0.3341791187130174790297318841e+00,
                          er11 = 0.8192320648511571246570742613e-01,
                          er12 = -0.2235530786388629525884427845e-01;
  static constexpr double a21 = 5.26001519587677318785587544488e-2,
                          a31 = 1.97250569845378994544595329183e-2,
                          a32 = 5.91751709536136983633785987549e-2,
                          a41 = 2.95875854768068491816892993775e-2,
                          a43 = 8.87627564304205475450678981324e-2,
                          a51 = 2.41365134159266685502369798665e-1,
                          a53 = -8.84549479328286085344864962717e-1,
                          a54 = 9.24834003261792003115737966543e-1,
                          a61 = 3.7037037037037037037037037037e-2,
                          a64 = 1.70828608729473871279604482173e-1,
                          a65 = 1.25467687566822425016691814123e-1,
                          a71 = 3.7109375e-2,
                          a74 = 1.70252211019544039314978060272e-1,
                          a75 = 6.02165389804559606850219397283e-2,
                          a76 = -1.7578125e-2;
  static constexpr double a81 = 3.70920001185047927108779319836e-2,
                          a84 = 1.70383925712239993810214054705e-1,
                          a85 = 1.07262030446373284651809199168e-1,
                          a86 = -1.53194377486244017527936158236e-2,
                          a87 = 8.27378916381402288758473766002e-3,
                          a91 = 6.24110958716075717114429577812e-1,
                          a94 = -3.36089262944694129406857109825e0,
                          a95 = -8.68219346841726006818189891453e-1,
                          a96 = 2.75920996994467083049415600797e1,
                          a97 = 2.01540675504778934086186788979e1,
                          a98 = -4.34898841810699588477366255144e1,
                          a101 = 4.77662536438264365890433908527e-1,
                          a104 = -2.48811461997166764192642586468e0,
                          a105 = -5.90290826836842996371446475743e-1,
                          a106 = 2.12300514481811942347288949897e1,
                          a107 = 1.52792336328824235832596922938e1,
                          a108 = -3.32882109689848629194453265587e1,
                          a109 = -2.03312017085086261358222928593e-2;
  static constexpr double a111 = -9.3714243008598732571704021658e-1,
                          a114 = 5.18637242884406370830023853209e0,
                          a115 = 1.09143734899672957818500254654e0,
                          a116 = -8.14978701074692612513997267357e0,
                          a117 = -1.85200656599969598641566180701e1,
                          a118 = 2.27394870993505042818970056734e1,
                          a119 = 2.49360555267965238987089396762e0,
                          a1110 = -3.0467644718982195003823669022e0,
                          a121 = 2.27331014751653820792359768449e0,
                          a124 = -1.05344954667372501984066689879e1,
                          a125 = -2.00087205822486249909675718444e0,
                          a126 = -1.79589318631187989172765950534e1,
                          a127 = 2.79488845294199600508499808837e1,
                          a128 = -2.85899827713502369474065508674e0,
                          a129 = -8.87285693353062954433549289258e0,
                          a1210 = 1.23605671757943030647266201528e1,
                          a1211 = 6.43392746015763530355970484046e-1;
};

}  // namespace

CMatrix continue_path(const OkuboSystem& system, const CMatrix& value,
                      const ContinuationPath& path, double tol,
                      IntegratorStats* stats) {
  system.check_shape();
  const auto& pts = system.points;
  double min_gap = 1e300;
  for (size_t i = 0; i < pts.size(); ++i)
    for (size_t j = i + 1; j < pts.size(); ++j)
      min_gap = std::min(min_gap, std::abs(pts[i] - pts[j]));
  if (pts.size() < 2) min_gap = 1.0;
  if (path.clearance(pts) < 0.1 * min_gap - 1e-12)
    throw Error(ErrorCode::ClearanceViolated,
                "path comes too close to a singular point");

  const int n = system.n();
  const int cols = static_cast<int>(value.cols());
  CMatrix Y = value;

  // block-row scaled RHS: dY = (sum_k A_k / (x - t_k)) Y
  auto rhs_at = [&](Complex x, const CMatrix& U, CMatrix& out) {
    out.resize(n, cols);
    for (int k = 0; k < system.r(); ++k) {
      int sk = system.block_start(k);
      out.block(sk, 0, system.partition[k], cols) =
          system.A.block(sk, 0, system.partition[k], n) * U /
          (x - system.points[k]);
    }
  };

  CMatrix k1(n, cols), k2(n, cols), k3(n, cols), k4(n, cols), k5(n, cols),
      k6(n, cols), k7(n, cols), k8(n, cols), k9(n, cols), k10(n, cols),
      kk(n, cols), w(n, cols);
  using D = Dop853;

  for (size_t seg = 0; seg + 1 < path.waypoints.size(); ++seg) {
    Complex A = path.waypoints[seg], B = path.waypoints[seg + 1];
    Complex dir = B - A;
    double len = std::abs(dir);
    if (len == 0.0) continue;
    auto f = [&](double s, const CMatrix& U, CMatrix& out) {
      rhs_at(A + s * dir, U, out);
      out *= dir;
    };
    double s = 0.0;
    double h = 0.1;
    // cap: 0.25 * min distance to singular points along the segment, scaled
    auto cap_at = [&](double at) {
      Complex x = A + at * dir;
      double d = 1e300;
      for (Complex t : pts) d = std::min(d, std::abs(x - t));
      return std::max(0.25 * d / len, 1e-8);
    };
    h = std::min(h, cap_at(0.0));
    int guard = 0;
    while (1.0 - s > 1e-14) {
      if (++guard > 200000)
        throw Error(ErrorCode::StepUnderflow, "integration stalled");
      h = std::min(h, 1.0 - s);
      f(s, Y, k1);
      w = Y + h * D::a21 * k1;
      f(s + D::c2 * h, w, k2);
      w = Y + h * (D::a31 * k1 + D::a32 * k2);
      f(s + D::c3 * h, w, k3);
      w = Y + h * (D::a41 * k1 + D::a43 * k3);
      f(s + D::c4 * h, w, k4);
      w = Y + h * (D::a51 * k1 + D::a53 * k3 + D::a54 * k4);
      f(s + D::c5 * h, w, k5);
      w = Y + h * (D::a61 * k1 + D::a64 * k4 + D::a65 * k5);
      f(s + D::c6 * h, w, k6);
      w = Y + h * (D::a71 * k1 + D::a74 * k4 + D::a75 * k5 + D::a76 * k6);
      f(s + D::c7 * h, w, k7);
      w = Y + h * (D::a81 * k1 + D::a84 * k4 + D::a85 * k5 + D::a86 * k6 +
                   D::a87 * k7);
      f(s + D::c8 * h, w, k8);
      w = Y + h * (D::a91 * k1 + D::a94 * k4 + D::a95 * k5 + D::a96 * k6 +
                   D::a97 * k7 + D::a98 * k8);
      f(s + D::c9 * h, w, k9);
      w = Y + h * (D::a101 * k1 + D::a104 * k4 + D::a105 * k5 + D::a106 * k6 +
                   D::a107 * k7 + D::a108 * k8 + D::a109 * k9);
      f(s + D::c10 * h, w, k10);
      w = Y + h * (D::a111 * k1 + D::a114 * k4 + D::a115 * k5 + D::a116 * k6 +
                   D::a117 * k7 + D::a118 * k8 + D::a119 * k9 +
                   D::a1110 * k10);
      f(s + D::c11 * h, w, k2);
      w = Y + h * (D::a121 * k1 + D::a124 * k4 + D::a125 * k5 + D::a126 * k6 +
                   D::a127 * k7 + D::a128 * k8 + D::a129 * k9 +
                   D::a1210 * k10 + D::a1211 * k2);
      f(s + h, w, k3);
      kk = D::b1 * k1 + D::b6 * k6 + D::b7 * k7 + D::b8 * k8 + D::b9 * k9 +
           D::b10 * k10 + D::b11 * k2 + D::b12 * k3;
      CMatrix ynew = Y + h * kk;

      // embedded error estimate (5th/3rd order combination)
      double err = 0.0, err2 = 0.0;
      for (int ii = 0; ii < n; ++ii)
        for (int jj = 0; jj < cols; ++jj) {
          double sk = 1.0 / (tol + tol * std::max(std::abs(Y(ii, jj)),
                                                  std::abs(ynew(ii, jj))));
          Complex e2 = kk(ii, jj) - D::bhh1 * k1(ii, jj) -
                       D::bhh2 * k9(ii, jj) - D::bhh3 * k3(ii, jj);
          Complex e1 = D::er1 * k1(ii, jj) + D::er6 * k6(ii, jj) +
                       D::er7 * k7(ii, jj) + D::er8 * k8(ii, jj) +
                       D::er9 * k9(ii, jj) + D::er10 * k10(ii, jj) +
                       D::er11 * k2(ii, jj) + D::er12 * k3(ii, jj);
          err += std::norm(e1) * sk * sk;
          err2 += std::norm(e2) * sk * sk;
        }
      double deno = err + 0.01 * err2;
      if (deno <= 0.0) deno = 1.0;
      double nrm = std::abs(h) * err * std::sqrt(1.0 / (deno * n * cols));

      if (nrm <= 1.0) {
        s += h;
        Y = ynew;
        if (stats != nullptr) {
          ++stats->steps;
          stats->error_estimate += nrm * tol;
        }
        double fac = std::clamp(0.9 * std::pow(nrm, -1.0 / 8.0), 0.333, 6.0);
        h = std::min(h * fac, cap_at(s));
      } else {
        if (stats != nullptr) ++stats->rejected;
        h *= std::max(0.9 * std::pow(nrm, -1.0 / 8.0), 0.1);
        if (h < 1e-14)
          throw Error(ErrorCode::StepUnderflow, "step size underflow");
      }
    }
  }
  return Y;
}

// --------------------------------------------------------------------------
// oracle context
// --------------------------------------------------------------------------

Oracle::Oracle(const OkuboSystem& system, int order, double tol)
    : sys_(system), tol_(tol) {
  sys_.check_shape();
  const int r = sys_.r();
  const auto& t = sys_.points;
  min_gap_ = 1e300;
  for (int i = 0; i < r; ++i)
    for (int j = i + 1; j < r; ++j)
      min_gap_ = std::min(min_gap_, std::abs(t[i] - t[j]));
  if (r < 2) min_gap_ = 1.0;
  Complex mean = 0.0;
  for (Complex v : t) mean += v;
  mean /= static_cast<double>(r);
  p0_ = mean - Complex(0.0, 0.9 * min_gap_);
  p1_ = p0_ - Complex(0.0, 0.35 * min_gap_);

  for (int j = 0; j < r; ++j) {
    double d = 1e300;
    for (int i = 0; i < r; ++i)
      if (i != j) d = std::min(d, std::abs(t[i] - t[j]));
    if (r < 2) d = 1.0;
    radius_.push_back(0.25 * d);
    frames_.push_back(frobenius(sys_, j, order));
  }
  for (int j = 0; j < r; ++j) {
    // anchor directly below t_j with arg(x - t_j) = -pi/2, then a dog-leg
    // to the base point staying at the base-point depth
    Complex qj = t[j] - Complex(0.0, radius_[j]);
    CMatrix Y = frames_[j].value(qj, -0.5 * kPi);
    ContinuationPath path;
    path.waypoints = {qj, Complex(t[j].real(), p0_.imag()), p0_};
    germs_.push_back(continue_path(sys_, Y, path, tol_));
    ContinuationPath down;
    down.waypoints = {p0_, p1_};
    germs2_.push_back(continue_path(sys_, germs_.back(), down, tol_));
  }
  psi0_ = CMatrix(sys_.n(), sys_.n());
  int col = 0;
  for (int j = 0; j < r; ++j) {
    psi0_.block(0, col, sys_.n(), sys_.partition[j]) =
        germs_[j].leftCols(sys_.partition[j]);
    col += sys_.partition[j];
  }
}

CMatrix Oracle::connection(int i, int j) const {
  auto solve_at = [&](const std::vector<CMatrix>& germs) {
    const CMatrix& Phi = germs[i];
    bool ill = false;
    CMatrix inv = mat_inv(Phi, &ill);
    if (ill)
      throw Error(ErrorCode::FrameIllConditioned,
                  "frame germ is ill-conditioned");
    CMatrix K = inv * germs[j].leftCols(sys_.partition[j]);
    return CMatrix(K.topRows(sys_.partition[i]));
  };
  CMatrix a = solve_at(germs_);
  CMatrix b = solve_at(germs2_);
  if (inf_norm(a - b) > 1e-8 * std::max(1.0, inf_norm(a)))
    throw Error(ErrorCode::TestPointDisagreement,
                "connection extraction differs between test points");
  return a;
}

ConnectionTable Oracle::connection_table() const {
  ConnectionTable tab;
  tab.partition = sys_.partition;
  for (int i = 0; i < sys_.r(); ++i)
    for (int j = 0; j < sys_.r(); ++j)
      if (i != j) tab.blocks[{i, j}] = connection(i, j);
  return tab;
}

ContinuationPath Oracle::loop_path(int i, int segments) const {
  ContinuationPath path;
  Complex t = sys_.points[i];
  Complex below(t.real(), p0_.imag());
  Complex qi = t - Complex(0.0, radius_[i]);
  path.waypoints.push_back(p0_);
  path.waypoints.push_back(below);
  path.waypoints.push_back(qi);
  for (int m = 1; m <= segments; ++m) {
    double ang = -0.5 * kPi + 2.0 * kPi * m / segments;
    path.waypoints.push_back(t + radius_[i] * Complex(std::cos(ang),
                                                      std::sin(ang)));
  }
  path.waypoints.push_back(below);
  path.waypoints.push_back(p0_);
  return path;
}

CMatrix Oracle::loop_monodromy_matrix(int i) const {
  CMatrix looped = continue_path(sys_, psi0_, loop_path(i), tol_);
  return mat_solve(psi0_, looped);
}

MonodromyTuple Oracle::loop_monodromy() const {
  MonodromyTuple out;
  out.partition = sys_.partition;
  for (int i = 0; i < sys_.r(); ++i) out.M.push_back(loop_monodromy_matrix(i));
  return out;
}

CMatrix Oracle::big_loop_monodromy() const {
  Complex mean = 0.0;
  for (Complex v : sys_.points) mean += v;
  mean /= static_cast<double>(sys_.r());
  double R = 0.0;
  for (Complex v : sys_.points) R = std::max(R, std::abs(v - mean));
  R += 1.5 * min_gap_;
  ContinuationPath path;
  Complex bottom = mean - Complex(0.0, R);
  path.waypoints.push_back(p0_);
  path.waypoints.push_back(bottom);
  const int segments = 64;
  for (int m = 1; m <= segments; ++m) {
    double ang = -0.5 * kPi + 2.0 * kPi * m / segments;
    path.waypoints.push_back(mean + R * Complex(std::cos(ang), std::sin(ang)));
  }
  path.waypoints.push_back(bottom);
  path.waypoints.push_back(p0_);
  CMatrix looped = continue_path(sys_, psi0_, path, tol_);
  return mat_solve(psi0_, looped);
}

}  // namespace okubo
