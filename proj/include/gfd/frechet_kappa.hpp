// Gap decision for walks against detour-bounded paths, in O(n+m) oracle
// queries: when p is a kappa-straight path, decide_kappa concludes either
// "distance > rho" or "distance <= (kappa+1)*rho" by growing a single
// lattice walk through the coarse free-space matrix — no row is ever
// rescanned, because kappa-straightness forbids a Far cell between two
// Near cells within a row.
#pragma once

#include "gfd/frechet_types.hpp"
#include "gfd/graph.hpp"
#include "gfd/oracle.hpp"

namespace gfd {

// Coarse cell value against thresholds rho and (kappa+1)*rho:
//   Near iff d <= rho; Far iff d > (kappa+1)*rho; Mid otherwise.
// Infinite d is always Far.
FreeSpaceValue classify_kappa(Weight d, Weight rho, const Ratio& kappa);

struct KappaOptions {
  // When set, receives the constructed lattice walk (0-based points), for
  // diagnostics and property tests.
  LatticeWalk* traversal = nullptr;
};

// Gap decision at threshold rho. Requires an exact oracle (stretch 1) and
// kappa >= 1; the verdict guarantees hold only when p is kappa-straight
// (callers verify or assert that — this function does not re-check).
//   AtMostScaled   => distance <= (kappa+1)*rho
//   GreaterThanRho => distance > rho
// Spends at most n+m iterations and 3(n+m)+1 oracle queries.
VerdictAtRho decide_kappa(const DistanceOracle& oracle, const WalkRef& p,
                          const WalkRef& q, Weight rho, const Ratio& kappa,
                          const KappaOptions& options = {});

// (kappa+1)-factor value approximation: exponential-then-binary search over
// rho driven by decide_kappa. Returns [lo, hi] with lo <= distance <= hi
// and hi <= ceil(factor * max(lo, 1 milli)), factor = (kappa+1)(1+eta).
// Returns [inf, inf] when the walks cannot be matched at any finite rho.
ApproxInterval approx_value_kappa(const DistanceOracle& oracle,
                                  const WalkRef& p, const WalkRef& q,
                                  const Ratio& kappa, const Ratio& eta);

}  // namespace gfd
