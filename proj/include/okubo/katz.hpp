#pragma once

#include <optional>
#include <string>
#include <vector>

#include "okubo/system.hpp"

namespace okubo {

/// Parameters of one add-mc-add step at block k (0-based):
/// add_{(0,..,rho,..,0)} . mc_{-rho-c} . add_{(0,..,c,..,0)}.
struct KatzStep {
  int k = 0;
  Complex c;
  Complex rho;
};

/// Rank-one factors of the residual matrices
/// M_ij = A_ij - rho delta_ij - A_ik (A_kk - rho)^{-1} A_kj (i, j != k),
/// stacked over the non-k blocks.
struct XiEta {
  CVector xi;   // length n - n_k
  CVector eta;  // length n - n_k
  std::vector<int> block_offsets;  // offset of each non-k block in the stack
  std::vector<int> block_ids;      // the non-k block indices, in order
};

/// How to fix the scaling freedom (s xi, eta / s) of the factorization.
enum class EtaNormalization {
  LargestEntryOne,   // generic: largest-|.| entry of eta set to 1
  LastBlockEntryOne, // the gamma-block entry of eta set to 1 (II*/III* chains)
  IVStarCanonical,   // eta block-1 = (-a_1, -a_2) of the resulting chart
};

struct BlockMap {
  std::vector<int> old_partition;
  std::vector<int> new_partition;
  int grown_block = 0;
  int new_column = 0;            // global index of the inserted row/column
  std::string exponent_renaming; // human-readable chart relabeling
};

/// Diagonal-block shift: A_ii += a_i on block i's diagonal block only.
OkuboSystem add_shift(const OkuboSystem& system,
                      const std::vector<Complex>& a);

XiEta factor_xi_eta(const OkuboSystem& system, int k, Complex rho,
                    EtaNormalization norm = EtaNormalization::LargestEntryOne,
                    const ExponentChart* target_chart = nullptr);

std::pair<OkuboSystem, BlockMap> katz_apply(
    const OkuboSystem& system, const KatzStep& step,
    EtaNormalization norm = EtaNormalization::LargestEntryOne,
    const ExponentChart* target_chart = nullptr);

/// Chain bookkeeping: the source chart and step producing `target` from the
/// previous family member ((III*)_{2n-1} -> (II*)_{2n} -> (III*)_{2n+1},
/// (III*)_5 -> (IV*)_6).
struct ChainStep {
  ExponentChart source;
  KatzStep step;
  EtaNormalization norm;
};

ChainStep chain_source(const ExponentChart& target);

/// Full descent to the (III*)_3 seed; first element builds from the seed.
std::vector<ChainStep> chain_from_seed(const ExponentChart& target);

}  // namespace okubo
