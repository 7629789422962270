// Ground-truth Fréchet engines over the graph metric.
//
// exact_strong: minimum over monotone complete lattice walks of the maximum
//   cell distance d(p_i, q_j) — the classical O(nm) dynamic program.
// exact_weak: the same minimax over unrestricted (8-connected) lattice
//   walks — an ascending union-find sweep over distinct cell values.
// brute_force: exponential enumerator over the chosen walk family, usable
//   only on tiny instances; exists to cross-check the two engines.
//
// All three require an oracle with stretch guarantee exactly 1: running
// them over an approximate oracle would silently change the value.
#pragma once

#include <optional>

#include "gfd/frechet_types.hpp"
#include "gfd/graph.hpp"
#include "gfd/oracle.hpp"

namespace gfd {

// Strong (monotone) discrete Fréchet distance. O(nm) time, O(min(n,m))
// memory. Infinite iff some forced matching crosses components.
Weight exact_strong(const DistanceOracle& oracle, const WalkRef& p,
                    const WalkRef& q);

struct StrongResult {
  Weight value = Weight::zero();
  LatticeWalk witness;  // a monotone complete walk achieving the value
};

// Same value, plus an optimal coupling reconstructed from the full DP
// table (O(nm) memory).
StrongResult exact_strong_with_witness(const DistanceOracle& oracle,
                                       const WalkRef& p, const WalkRef& q);

// Weak (unrestricted-walk) discrete Fréchet distance. Never exceeds
// exact_strong.
Weight exact_weak(const DistanceOracle& oracle, const WalkRef& p,
                  const WalkRef& q);

// Exhaustive minimax over complete lattice walks: a direct DFS over all
// monotone walks when `monotone`; otherwise the smallest cell value whose
// sublevel set connects the corners, found by a fresh flood fill per
// candidate value (the 8-connected walk family is too large to enumerate,
// and a bottleneck walk exists iff such a sublevel set is connected).
// Requires n*m <= 64; throws otherwise.
Weight brute_force(const DistanceOracle& oracle, const WalkRef& p,
                   const WalkRef& q, bool monotone);

}  // namespace gfd
