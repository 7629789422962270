#include "gfd/rho_search.hpp"

#include <stdexcept>

#include "gfd/ratio.hpp"

namespace gfd {

namespace {

constexpr std::int64_t kOneMilli = 1;

void accumulate(DecisionStats& into, const DecisionStats& probe) {
  into.oracle_queries += probe.oracle_queries;
  into.iterations += probe.iterations;
}

}  // namespace

ApproxInterval rho_value_search(
    const std::function<VerdictAtRho(Weight)>& decide,
    const RhoSearchInputs& inputs) {
  if (inputs.eta <= Ratio::from_int(0)) {
    throw std::invalid_argument("search slack eta must be positive");
  }
  const Ratio factor = inputs.gap * (Ratio::from_int(1) + inputs.eta);
  const Ratio one_plus_eta = Ratio::from_int(1) + inputs.eta;

  ApproxInterval result;
  result.factor = factor;

  if (inputs.lower_bound_seed.is_infinite()) {
    result.lo = Weight::infinity();
    result.hi = Weight::infinity();
    return result;
  }

  auto probe = [&](Weight rho) {
    VerdictAtRho v = decide(rho);
    accumulate(result.stats, v.stats);
    return v.verdict;
  };

  // The seed is a sound lower bound, so a success there closes the search
  // with the bare gap factor.
  const Weight seed = inputs.lower_bound_seed;
  if (probe(seed) == Verdict::kAtMostScaled) {
    if (seed.is_zero()) {
      // distance <= gap * 0 = 0.
      result.lo = Weight::zero();
      result.hi = Weight::zero();
    } else {
      result.lo = seed;
      result.hi = scale_ceil(inputs.gap, seed);
    }
    return result;
  }

  // distance > seed. Double an upper probe until AtMostScaled; a failure at
  // or above the finite-distance cap proves the distance infinite.
  if (seed >= inputs.finite_distance_cap) {
    result.lo = Weight::infinity();
    result.hi = Weight::infinity();
    return result;
  }
  Weight step = inputs.min_positive_step;
  if (step.is_zero() || step.is_infinite()) step = Weight::from_milli(1);
  Weight lo_rho = seed;
  Weight hi_rho = max(max(seed, step), Weight::from_milli(1));
  if (hi_rho <= lo_rho) hi_rho = min(lo_rho + lo_rho, inputs.finite_distance_cap);
  while (probe(hi_rho) == Verdict::kGreaterThanRho) {
    if (hi_rho >= inputs.finite_distance_cap) {
      result.lo = Weight::infinity();
      result.hi = Weight::infinity();
      return result;
    }
    lo_rho = hi_rho;
    hi_rho = min(hi_rho + hi_rho, inputs.finite_distance_cap);
  }

  // Invariant: GreaterThanRho at lo_rho, AtMostScaled at hi_rho.
  while (true) {
    Weight lo_floor = max(lo_rho, Weight::from_milli(kOneMilli));
    if (weight_le_scaled(hi_rho, one_plus_eta, lo_floor)) break;
    std::int64_t mid_milli = lo_rho.milli() + (hi_rho.milli() - lo_rho.milli()) / 2;
    if (mid_milli <= lo_rho.milli()) mid_milli = lo_rho.milli() + 1;
    if (mid_milli >= hi_rho.milli()) break;  // adjacent; cannot split further
    Weight mid = Weight::from_milli(mid_milli);
    if (probe(mid) == Verdict::kGreaterThanRho) {
      lo_rho = mid;
    } else {
      hi_rho = mid;
    }
  }

  // GreaterThanRho at lo_rho and distances are whole milli-units, so the
  // distance is at least lo_rho + 1 milli.
  result.lo = lo_rho + Weight::from_milli(1);
  result.hi = scale_ceil(inputs.gap, hi_rho);
  return result;
}

}  // namespace gfd
