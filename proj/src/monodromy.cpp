#include "okubo/monodromy.hpp"

#include <cmath>

namespace okubo {

MonodromyTuple assemble(const OkuboSystem& system,
                        const ConnectionTable& table) {
  if (!table.complete())
    throw Error(ErrorCode::IncompleteTable,
                "monodromy assembly needs a complete table");
  const int n = system.n();
  MonodromyTuple out;
  out.partition = system.partition;
  for (int i = 0; i < system.r(); ++i) {
    CMatrix M = CMatrix::Identity(n, n);
    int si = system.block_start(i);
    auto d = system.block_diagonal(i);
    for (int q = 0; q < system.partition[i]; ++q) {
      Complex e = e_of(d[q]);
      M(si + q, si + q) = e;
      for (int j = 0; j < system.r(); ++j) {
        if (j == i) continue;
        int sj = system.block_start(j);
        const CMatrix& C = table.at(i, j);
        for (int p = 0; p < system.partition[j]; ++p)
          M(si + q, sj + p) = (e - 1.0) * C(q, p);
      }
    }
    out.M.push_back(std::move(M));
  }
  return out;
}

ProductRelation product_relation(const MonodromyTuple& tuple) {
  ProductRelation out;
  const int n = static_cast<int>(tuple.M.at(0).rows());
  CMatrix P = CMatrix::Identity(n, n);
  for (const auto& M : tuple.M) P = P * M;
  out.M_inf = mat_inv(P);
  out.residual = inf_norm(P * out.M_inf - CMatrix::Identity(n, n));
  return out;
}

namespace {

struct Cluster {
  Complex value;
  int mult;
};

std::vector<Cluster> cluster_eigenvalues(const std::vector<Complex>& ev,
                                         double tol) {
  std::vector<Cluster> out;
  for (Complex v : ev) {
    bool placed = false;
    for (auto& c : out) {
      if (std::abs(v - c.value) < tol) {
        ++c.mult;
        placed = true;
        break;
      }
    }
    if (!placed) out.push_back({v, 1});
  }
  return out;
}

}  // namespace

int rigidity_index(const MonodromyTuple& tuple, double cluster_tol,
                   bool* defective_warning) {
  const int n = static_cast<int>(tuple.M.at(0).rows());
  const int r = static_cast<int>(tuple.M.size());
  if (defective_warning != nullptr) *defective_warning = false;

  long centralizers = 0;
  auto add = [&](const CMatrix& M) {
    auto clusters = cluster_eigenvalues(eigenvalues(M), cluster_tol);
    for (const auto& c : clusters) {
      centralizers += static_cast<long>(c.mult) * c.mult;
      if (c.mult > 1 && defective_warning != nullptr) {
        // geometric < algebraic multiplicity means the diagonalizable
        // centralizer count is not valid
        CMatrix shifted = M - c.value * CMatrix::Identity(n, n);
        int geo = n - numeric_rank(shifted, 1e-6);
        if (geo < c.mult) *defective_warning = true;
      }
    }
  };
  for (const auto& M : tuple.M) add(M);
  add(product_relation(tuple).M_inf);

  return (1 - r) * n * n + static_cast<int>(centralizers);
}

}  // namespace okubo
