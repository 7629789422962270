// Shared threshold search turning a gap decision procedure into a value
// approximation: exponential doubling to bracket the distance, then binary
// search until the bracket is multiplicatively tight.
#pragma once

#include <functional>

#include "gfd/frechet_types.hpp"
#include "gfd/weight.hpp"

namespace gfd {

struct RhoSearchInputs {
  // Sound lower bound on the true distance (0 is always valid; endpoint
  // distances are the usual seed). Infinite means the distance is known
  // infinite already.
  Weight lower_bound_seed = Weight::zero();
  // Smallest positive distance the metric can produce (minimum positive
  // edge weight); used to start the doubling phase above zero. Values
  // that are zero or infinite fall back to 1 milli.
  Weight min_positive_step = Weight::from_milli(1);
  // Upper bound on every finite pairwise distance (total edge weight). A
  // GreaterThanRho verdict at or above this proves the distance infinite.
  Weight finite_distance_cap = Weight::zero();
  // Gap factor of the decision procedure: AtMostScaled at rho proves
  // distance <= gap * rho.
  Ratio gap = Ratio::from_int(1);
  // Multiplicative search slack: stop once hi <= (1+eta) * max(lo, 1mu).
  Ratio eta = Ratio{1, 64};
};

// Runs the search over `decide`, which must satisfy the VerdictAtRho
// contract (AtMostScaled => d <= gap*rho; GreaterThanRho => d > rho) and
// be monotone-consistent with a single true distance d. Returns an
// interval with lo <= d <= hi, factor = gap*(1+eta), and
// hi <= ceil(factor * max(lo, 1 milli)); [inf, inf] when d is infinite;
// [0, 0] when d is zero. Stats accumulate over all probes.
ApproxInterval rho_value_search(
    const std::function<VerdictAtRho(Weight)>& decide,
    const RhoSearchInputs& inputs);

}  // namespace gfd
