#pragma once

#include "okubo/connection.hpp"
#include "okubo/system.hpp"

namespace okubo {

/// Monodromy matrices around t_1..t_r acting on the canonical basis:
/// gamma_i . Psi = Psi M_i. Ordering convention: M_1 M_2 ... M_r equals the
/// monodromy of one counterclockwise loop around all finite points
/// (calibrated once against the oracle and frozen).
struct MonodromyTuple {
  std::vector<int> partition;
  std::vector<CMatrix> M;
};

/// M_i is the identity outside block row i; that row carries e(A_ii) on the
/// diagonal block and (e(A_ii) - 1) C_ij elsewhere.
MonodromyTuple assemble(const OkuboSystem& system,
                        const ConnectionTable& table);

struct ProductRelation {
  CMatrix M_inf;          // inverse of M_1 M_2 ... M_r
  double residual = 0.0;  // |M_1...M_r * M_inf - I|_inf
};
ProductRelation product_relation(const MonodromyTuple& tuple);

/// Index from centralizer dimensions: (1 - r) n^2 + sum over
/// {M_1..M_r, M_inf} of sum(eigenvalue multiplicity^2); 2 for rigid tuples.
/// Eigenvalues are clustered with the given tolerance; a defective-looking
/// cluster sets *defective_warning.
int rigidity_index(const MonodromyTuple& tuple, double cluster_tol = 1e-6,
                   bool* defective_warning = nullptr);

}  // namespace okubo
