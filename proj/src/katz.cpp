#include "okubo/katz.hpp"

#include <algorithm>
#include <cmath>

#include "okubo/canonical.hpp"

namespace okubo {

OkuboSystem add_shift(const OkuboSystem& system,
                      const std::vector<Complex>& a) {
  if (a.size() != system.partition.size())
    throw Error(ErrorCode::BadInput, "add: one shift per block required");
  OkuboSystem out = system;
  for (int i = 0; i < out.r(); ++i) {
    int s = out.block_start(i);
    for (int q = 0; q < out.partition[i]; ++q) out.A(s + q, s + q) += a[i];
  }
  return out;
}

namespace {

constexpr double kDegenerate = 1e-8;

double min_abs_eig_shift(const CMatrix& m, Complex shift) {
  double best = 1e300;
  for (Complex ev : eigenvalues(m)) best = std::min(best, std::abs(ev + shift));
  return best;
}

}  // namespace

XiEta factor_xi_eta(const OkuboSystem& system, int k, Complex rho,
                    EtaNormalization norm,
                    const ExponentChart* target_chart) {
  const int r = system.r();
  const int nk = system.partition[k];
  const int m = system.n() - nk;
  CMatrix Akk = system.block(k, k);
  CMatrix inv =
      mat_inv(CMatrix(Akk - rho * CMatrix::Identity(nk, nk)));

  XiEta out;
  out.xi = CVector::Zero(m);
  out.eta = CVector::Zero(m);
  CMatrix M(m, m);
  int roff = 0;
  for (int i = 0; i < r; ++i) {
    if (i == k) continue;
    out.block_offsets.push_back(roff);
    out.block_ids.push_back(i);
    int coff = 0;
    for (int j = 0; j < r; ++j) {
      if (j == k) continue;
      CMatrix blk = system.block(i, j) -
                    system.block(i, k) * inv * system.block(k, j);
      if (i == j)
        blk -= rho * CMatrix::Identity(system.partition[i], system.partition[j]);
      M.block(roff, coff, system.partition[i], system.partition[j]) = blk;
      coff += system.partition[j];
    }
    roff += system.partition[i];
  }

  double scale = inf_norm(M);
  if (scale < 1e-14) return out;  // all residuals vanish: xi = eta = 0

  // rank check and dominant-cross extraction
  if (numeric_rank(M, 1e-8) > 1)
    throw Error(ErrorCode::RankExceedsOne,
                "residual stack has numerical rank > 1");
  int bi = 0, bj = 0;
  double best = 0.0;
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      if (std::abs(M(i, j)) > best) {
        best = std::abs(M(i, j));
        bi = i;
        bj = j;
      }
  out.eta = M.row(bi).transpose();
  out.xi = M.col(bj) / M(bi, bj);

  Complex s;
  switch (norm) {
    case EtaNormalization::LargestEntryOne: {
      int arg = 0;
      double mx = 0.0;
      for (int i = 0; i < m; ++i)
        if (std::abs(out.eta(i)) > mx) {
          mx = std::abs(out.eta(i));
          arg = i;
        }
      s = out.eta(arg);
      break;
    }
    case EtaNormalization::LastBlockEntryOne:
      s = out.eta(m - 1);
      break;
    case EtaNormalization::IVStarCanonical: {
      if (target_chart == nullptr)
        throw Error(ErrorCode::BadInput,
                    "IVStarCanonical normalization needs the target chart");
      Complex a1 = target_chart->alpha[0] - target_chart->rho[0];
      Complex want = -a1 / (target_chart->alpha[0] - target_chart->alpha[1]);
      s = out.eta(0) / want;
      break;
    }
  }
  if (std::abs(s) < 1e-14)
    throw Error(ErrorCode::BadInput, "eta normalization entry vanishes");
  out.eta /= s;
  out.xi *= s;
  return out;
}

std::pair<OkuboSystem, BlockMap> katz_apply(const OkuboSystem& system,
                                            const KatzStep& step,
                                            EtaNormalization norm,
                                            const ExponentChart* target_chart) {
  system.check_shape();
  const int k = step.k;
  const int r = system.r();
  if (k < 0 || k >= r) throw Error(ErrorCode::BadInput, "katz: bad block index");
  if (std::abs(step.rho + step.c) < kDegenerate)
    throw Error(ErrorCode::DegenerateRhoPlusC, "rho + c vanishes");

  CMatrix Akk = system.block(k, k);
  if (min_abs_eig_shift(Akk, step.c) < kDegenerate)
    throw Error(ErrorCode::KernelConditionViolated, "Ker(A_kk + c) != 0");
  if (min_abs_eig_shift(Akk, -step.rho) < kDegenerate)
    throw Error(ErrorCode::KernelConditionViolated, "Ker(A_kk - rho) != 0");

  const int n = system.n();
  CMatrix shifted = system.A - step.rho * CMatrix::Identity(n, n);
  // tilde n_k = n - dim Ker(A - rho) = rank(A - rho)
  int tilde_nk = numeric_rank(shifted);
  int growth = tilde_nk - system.partition[k];
  if (growth != 1)
    throw Error(ErrorCode::RankExceedsOne,
                "block growth " + std::to_string(growth) +
                    " != 1 (multiplicity of rho does not fit)");

  XiEta fe = factor_xi_eta(system, k, step.rho, norm, target_chart);

  std::vector<int> part2 = system.partition;
  part2[k] += 1;
  OkuboSystem out;
  out.partition = part2;
  out.points = system.points;
  out.A = CMatrix::Zero(n + 1, n + 1);

  auto start2 = [&](int i) {
    int s = 0;
    for (int q = 0; q < i; ++q) s += part2[q];
    return s;
  };
  const int nk = system.partition[k];
  CMatrix inv = mat_inv(CMatrix(Akk - step.rho * CMatrix::Identity(nk, nk)));
  CMatrix colfac = (Akk + step.c * CMatrix::Identity(nk, nk)) * inv;

  for (int i = 0; i < r; ++i) {
    int si = system.block_start(i), s2i = start2(i);
    int ni = system.partition[i];
    for (int j = 0; j < r; ++j) {
      int sj = system.block_start(j), s2j = start2(j);
      int nj = system.partition[j];
      if (i == k && j == k) {
        out.A.block(s2i, s2j, nk, nk) = Akk;
        out.A(s2i + nk, s2j + nk) = step.rho;
      } else if (i == k) {
        out.A.block(s2i, s2j, nk, nj) = system.block(k, j);
        int off = 0;
        for (size_t q = 0; q < fe.block_ids.size(); ++q)
          if (fe.block_ids[q] == j) off = fe.block_offsets[q];
        out.A.block(s2i + nk, s2j, 1, nj) =
            fe.eta.segment(off, nj).transpose();
      } else if (j == k) {
        out.A.block(s2i, s2j, ni, nk) = system.block(i, k) * colfac;
        int off = 0;
        for (size_t q = 0; q < fe.block_ids.size(); ++q)
          if (fe.block_ids[q] == i) off = fe.block_offsets[q];
        out.A.block(s2i, s2j + nk, ni, 1) =
            (step.rho + step.c) * fe.xi.segment(off, ni);
      } else {
        CMatrix blk = system.A.block(si, sj, ni, nj);
        if (i == j)
          blk -= (step.rho + step.c) * CMatrix::Identity(ni, nj);
        out.A.block(s2i, s2j, ni, nj) = blk;
      }
    }
  }

  BlockMap map;
  map.old_partition = system.partition;
  map.new_partition = part2;
  map.grown_block = k;
  map.new_column = start2(k) + nk;
  map.exponent_renaming =
      "block " + std::to_string(k + 1) + " keeps its exponents and gains rho; "
      "all other diagonal blocks shift by -(rho+c)";
  out.check_shape();
  return {out, map};
}

ChainStep chain_source(const ExponentChart& target) {
  target.check_shape();
  ChainStep cs;
  switch (target.type) {
    case ChartType::II_star: {
      int n = target.family_n();
      const auto& a = target.alpha;
      const auto& b = target.beta;
      Complex r1 = target.rho[0], r2 = target.rho[1];
      ExponentChart src;
      src.type = ChartType::III_star;
      src.alpha.assign(a.begin(), a.end() - 1);
      for (Complex v : b) src.beta.push_back(v + a[n - 1] - r1);
      src.gamma = {target.gamma[0] + a[n - 1] - r1};
      src.rho = {r2, a[n - 1]};
      cs.source = src;
      cs.step = {0, -r1, a[n - 1]};
      cs.norm = EtaNormalization::LastBlockEntryOne;
      break;
    }
    case ChartType::III_star: {
      int n = target.family_n();
      if (n < 2)
        throw Error(ErrorCode::BadInput, "(III*)_3 is the chain seed");
      const auto& a = target.alpha;
      const auto& b = target.beta;
      Complex r1 = target.rho[0], r2 = target.rho[1];
      ExponentChart src;
      src.type = ChartType::II_star;
      for (Complex v : a) src.alpha.push_back(v + b[n - 1] - r1);
      src.beta.assign(b.begin(), b.end() - 1);
      src.gamma = {target.gamma[0] + b[n - 1] - r1};
      src.rho = {r2, b[n - 1]};
      cs.source = src;
      cs.step = {1, -r1, b[n - 1]};
      cs.norm = EtaNormalization::LastBlockEntryOne;
      break;
    }
    case ChartType::IV_star: {
      const auto& a = target.alpha;
      const auto& b = target.beta;
      const auto& g = target.gamma;
      Complex r1 = target.rho[0], r2 = target.rho[1];
      ExponentChart src;
      src.type = ChartType::III_star;
      for (Complex v : a) src.alpha.push_back(v + g[1] - r1);
      for (Complex v : b) src.beta.push_back(v + g[1] - r1);
      src.gamma = {g[0]};
      src.rho = {g[1], r2};
      cs.source = src;
      cs.step = {2, -r1, g[1]};
      cs.norm = EtaNormalization::IVStarCanonical;
      break;
    }
    default:
      throw Error(ErrorCode::BadInput,
                  "no chain construction registered for type " +
                      to_string(target.type));
  }
  cs.source.check_shape();
  return cs;
}

std::vector<ChainStep> chain_from_seed(const ExponentChart& target) {
  std::vector<ChainStep> steps;
  ExponentChart cur = target;
  while (!(cur.type == ChartType::III_star && cur.family_n() == 1) &&
         cur.type != ChartType::III_star_3) {
    ChainStep cs = chain_source(cur);
    steps.push_back(cs);
    cur = cs.source;
  }
  std::reverse(steps.begin(), steps.end());
  return steps;
}

}  // namespace okubo
