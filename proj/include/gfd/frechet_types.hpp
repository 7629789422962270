// Shared vocabulary for the Fréchet engines: free-space cell values,
// lattice walks over the n x m coupling grid, decision verdicts, and the
// approximation-interval result of the value searches.
#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "gfd/ratio.hpp"
#include "gfd/weight.hpp"

namespace gfd {

// Classification of one free-space cell (i,j). The coarse engines use all
// three values; the exact threshold test uses only Near/Far. Ordered:
// Near < Mid < Far.
enum class FreeSpaceValue : std::int8_t { kNear = -1, kMid = 0, kFar = 1 };

constexpr bool operator<(FreeSpaceValue a, FreeSpaceValue b) {
  return static_cast<std::int8_t>(a) < static_cast<std::int8_t>(b);
}
constexpr bool operator<=(FreeSpaceValue a, FreeSpaceValue b) {
  return static_cast<std::int8_t>(a) <= static_cast<std::int8_t>(b);
}

// 0-based position in the coupling lattice: i indexes p, j indexes q.
struct LatticePoint {
  std::size_t i = 0;
  std::size_t j = 0;
  friend bool operator==(const LatticePoint&, const LatticePoint&) = default;
};

// A walk over the lattice; consecutive points differ by at most 1 in each
// coordinate. Monotone walks never decrease a coordinate. A complete walk
// starts at (0,0) and ends at (n-1,m-1).
using LatticeWalk = std::vector<LatticePoint>;

enum class Verdict : std::uint8_t { kAtMostScaled, kGreaterThanRho };

// Cost accounting for one decision run.
struct DecisionStats {
  std::uint64_t oracle_queries = 0;
  std::uint64_t iterations = 0;
};

// Result of a gap decision at threshold rho:
//   AtMostScaled   => true distance <= gap_factor * rho
//   GreaterThanRho => true distance >  rho
struct VerdictAtRho {
  Verdict verdict = Verdict::kGreaterThanRho;
  Weight rho = Weight::zero();
  Ratio gap_factor = Ratio::from_int(1);
  DecisionStats stats;
};

// Result of a value search: lo <= true distance <= hi, hi <= factor * lo
// up to the degenerate lo (see the engines' value-search docs).
struct ApproxInterval {
  Weight lo = Weight::zero();
  Weight hi = Weight::zero();
  Ratio factor = Ratio::from_int(1);
  DecisionStats stats;
};

}  // namespace gfd
