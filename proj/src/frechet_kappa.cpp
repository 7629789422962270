#include "gfd/frechet_kappa.hpp"

#include <stdexcept>

#include "gfd/rho_search.hpp"

namespace gfd {

FreeSpaceValue classify_kappa(Weight d, Weight rho, const Ratio& kappa) {
  if (d <= rho) return FreeSpaceValue::kNear;
  Ratio far_scale = kappa + Ratio::from_int(1);
  if (weight_gt_scaled(d, far_scale, rho)) return FreeSpaceValue::kFar;
  return FreeSpaceValue::kMid;
}

namespace {

void check_kappa_inputs(const DistanceOracle& oracle, const WalkRef& p,
                        const WalkRef& q, const Ratio& kappa) {
  if (&p.graph() != &q.graph()) {
    throw std::invalid_argument("walks live in different graphs");
  }
  if (&p.graph() != &oracle.graph()) {
    throw std::invalid_argument("oracle built over a different graph");
  }
  auto stretch = oracle.stretch_guarantee();
  if (!stretch.has_value() || *stretch != Ratio::from_int(1)) {
    throw std::invalid_argument(
        "this decision procedure needs an exact oracle (declared stretch 1)");
  }
  if (kappa < Ratio::from_int(1)) {
    throw std::invalid_argument("kappa must be at least 1");
  }
}

}  // namespace

VerdictAtRho decide_kappa(const DistanceOracle& oracle, const WalkRef& p,
                          const WalkRef& q, Weight rho, const Ratio& kappa,
                          const KappaOptions& options) {
  check_kappa_inputs(oracle, p, q, kappa);
  if (options.traversal) options.traversal->clear();

  VerdictAtRho out;
  out.rho = rho;
  out.gap_factor = kappa + Ratio::from_int(1);

  const std::size_t n = p.size();
  const std::size_t m = q.size();
  auto cell = [&](std::size_t i, std::size_t j) {
    ++out.stats.oracle_queries;
    return classify_kappa(oracle.query(p[i], q[j]), rho, kappa);
  };
  auto record = [&](std::size_t i, std::size_t j) {
    if (options.traversal) options.traversal->push_back({i, j});
  };

  if (cell(0, 0) != FreeSpaceValue::kNear) {
    out.verdict = Verdict::kGreaterThanRho;
    return out;
  }
  std::size_t i = 0, j = 0;
  record(i, j);

  while (true) {
    ++out.stats.iterations;
    // Step 1: done once the walk reaches the far corner.
    if (i == n - 1 && j == m - 1) {
      out.verdict = Verdict::kAtMostScaled;
      return out;
    }
    // Steps 2–3: try to advance upward (and diagonally) into Near cells.
    if (j + 1 <= m - 1) {
      if (cell(i, j + 1) == FreeSpaceValue::kNear) {
        ++j;
        record(i, j);
        continue;
      }
      if (i + 1 <= n - 1 && cell(i + 1, j + 1) == FreeSpaceValue::kNear) {
        ++i;
        ++j;
        record(i, j);
        continue;
      }
    }
    // Step 4: advance right unless blocked by the boundary or a Far cell.
    if (i + 1 > n - 1 || cell(i + 1, j) == FreeSpaceValue::kFar) {
      out.verdict = Verdict::kGreaterThanRho;
      return out;
    }
    ++i;
    record(i, j);
  }
}

ApproxInterval approx_value_kappa(const DistanceOracle& oracle,
                                  const WalkRef& p, const WalkRef& q,
                                  const Ratio& kappa, const Ratio& eta) {
  check_kappa_inputs(oracle, p, q, kappa);
  const Graph& g = p.graph();

  RhoSearchInputs inputs;
  inputs.lower_bound_seed =
      max(oracle.query(p[0], q[0]),
          oracle.query(p[p.size() - 1], q[q.size() - 1]));
  inputs.min_positive_step = g.min_positive_edge_weight();
  inputs.finite_distance_cap = g.total_edge_weight();
  inputs.gap = kappa + Ratio::from_int(1);
  inputs.eta = eta;

  ApproxInterval interval = rho_value_search(
      [&](Weight rho) { return decide_kappa(oracle, p, q, rho, kappa); },
      inputs);
  interval.stats.oracle_queries += 2;  // the two seed queries above
  return interval;
}

}  // namespace gfd
