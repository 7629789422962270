// Detour-boundedness checks for paths: a path is kappa-straight when every
// contiguous subpath is at most kappa times longer than the shortest path
// between its endpoints. Shortest paths are exactly the 1-straight paths.
#pragma once

#include <cstddef>

#include "gfd/graph.hpp"
#include "gfd/ratio.hpp"
#include "gfd/weight.hpp"

namespace gfd {

// Detailed outcome of a straightness check, for diagnostics and CLI output.
struct StraightnessReport {
  bool is_straight = true;
  // Worst detour found: subpath p[from..to] with walk length `subpath_length`
  // versus shortest-path distance `metric_distance`. Meaningful only when
  // a violation exists (is_straight == false); indices are 0-based.
  std::size_t worst_from = 0;
  std::size_t worst_to = 0;
  Weight subpath_length = Weight::zero();
  Weight metric_distance = Weight::zero();
};

// True iff every subpath of `p` has walk length <= kappa * d(endpoints).
// Requires `p` to be a simple path (no repeated vertex) and kappa >= 1.
// Cost: one Dijkstra run per path vertex.
bool verify_kappa_straight(const Graph& g, const WalkRef& p, const Ratio& kappa);

// Same check, but reports the most-violating subpath (by violation ratio)
// instead of stopping at the first one.
StraightnessReport check_kappa_straight(const Graph& g, const WalkRef& p,
                                        const Ratio& kappa);

}  // namespace gfd
