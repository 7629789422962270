#include "gfd/frechet_eps.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <unordered_map>

#include "gfd/rho_search.hpp"

namespace gfd {

namespace {

std::int64_t ceil_to_int(const Ratio& r) {
  return (r.num + r.den - 1) / r.den;
}

}  // namespace

CompressedPath compress_path(const Graph& g, const WalkRef& p,
                             const Ratio& beta, Weight rho) {
  if (&p.graph() != &g) {
    throw std::invalid_argument("path belongs to another graph");
  }
  if (!p.is_path()) {
    throw std::invalid_argument("compression requires a simple path");
  }
  const std::size_t n = p.size();

  CompressedPath cp;
  cp.source = &p;
  if (beta.num == 0 || rho.is_zero() || rho.milli() < 0) {
    // Degenerate beta*rho: nothing is removable.
    cp.pi.resize(n);
    std::iota(cp.pi.begin(), cp.pi.end(), std::size_t{0});
  } else {
    // Step 1: keep greedy anchors at least beta*rho of walk length apart.
    std::vector<std::size_t> anchors{0};
    std::size_t anchor = 0;
    for (std::size_t x = 1; x < n; ++x) {
      if (weight_lt_scaled(p.length_between(anchor, x), beta, rho)) continue;
      anchors.push_back(x);
      anchor = x;
    }
    // Step 2: every anchor also contributes its predecessor on the path.
    std::vector<std::size_t> all = anchors;
    for (std::size_t a : anchors) {
      if (a > 0) all.push_back(a - 1);
    }
    // Step 3: the final vertex always stays.
    all.push_back(n - 1);
    std::sort(all.begin(), all.end());
    all.erase(std::unique(all.begin(), all.end()), all.end());
    cp.pi = std::move(all);
  }

  cp.pred_of_source.resize(n);
  std::size_t t = 0;
  for (std::size_t x = 0; x < n; ++x) {
    while (t + 1 < cp.pi.size() && cp.pi[t + 1] <= x) ++t;
    cp.pred_of_source[x] = t;
  }
  return cp;
}

std::vector<BetaWindow> build_windows(const VoronoiDiagram& vd,
                                      const CompressedPath& cp,
                                      const WalkRef& q, Weight rho,
                                      const Ratio& kappa, const Ratio& beta) {
  if (cp.source == nullptr) {
    throw std::invalid_argument("compressed path lacks its source path");
  }
  const WalkRef& p = *cp.source;
  const Graph& g = p.graph();
  if (&q.graph() != &g) {
    throw std::invalid_argument("walks live in different graphs");
  }
  if (vd.site_of.size() != static_cast<std::size_t>(g.vertex_count())) {
    throw std::invalid_argument("voronoi diagram built over a different graph");
  }
  if (beta.num == 0) {
    throw std::invalid_argument("beta must be positive");
  }

  std::unordered_map<VertexId, std::size_t> position_on_p;
  position_on_p.reserve(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) position_on_p.emplace(p[i], i);

  const Ratio half_ratio = Ratio(9, 1) * kappa * Ratio(beta.den, beta.num);
  const std::size_t half = static_cast<std::size_t>(ceil_to_int(half_ratio));
  const std::size_t np = cp.size();

  std::vector<BetaWindow> windows(q.size());
  for (std::size_t j = 0; j < q.size(); ++j) {
    const std::size_t qv = static_cast<std::size_t>(q[j]);
    VertexId site = vd.site_of[qv];
    Weight d = vd.dist_to_site[qv];
    if (site < 0 || d > rho) continue;  // no path vertex within rho
    auto it = position_on_p.find(site);
    if (it == position_on_p.end()) {
      throw std::invalid_argument(
          "voronoi diagram is not over the path's vertices");
    }
    std::size_t center = cp.pred_of_source[it->second];
    windows[j].empty = false;
    windows[j].lo = center > half ? center - half : 0;
    windows[j].hi = std::min(center + half, np - 1);
  }
  return windows;
}

EpsThresholds eps_thresholds(Weight rho, const Ratio& alpha,
                             const Ratio& beta) {
  const Ratio one = Ratio::from_int(1);
  const Ratio near_scale = one + alpha;
  const Ratio far_scale = (one + alpha) * (one + alpha + beta);
  return {scale_ceil(near_scale, rho), scale_floor(far_scale, rho)};
}

FreeSpaceValue classify_eps(Weight perceived, const EpsThresholds& t) {
  // Far first: at milli scale the rounded thresholds can cross
  // (near_t > far_t for tiny rho), and the Far verdict is the one both
  // guarantees rely on.
  if (perceived > t.far_t) return FreeSpaceValue::kFar;
  if (perceived <= t.near_t) return FreeSpaceValue::kNear;
  return FreeSpaceValue::kMid;
}

namespace {

void check_eps_inputs(const DistanceOracle& oracle, const VoronoiDiagram& vd,
                      const WalkRef& p, const WalkRef& q, Weight rho,
                      const Ratio& kappa, const Ratio& alpha,
                      const Ratio& beta, const EpsOptions& options) {
  if (&p.graph() != &q.graph()) {
    throw std::invalid_argument("walks live in different graphs");
  }
  if (&p.graph() != &oracle.graph()) {
    throw std::invalid_argument("oracle built over a different graph");
  }
  if (!rho.is_infinite() && rho.milli() < 0) {
    throw std::invalid_argument("rho must be non-negative");
  }
  if (kappa < Ratio::from_int(1)) {
    throw std::invalid_argument("kappa must be at least 1");
  }
  if (alpha > Ratio(1, 2)) {
    throw std::invalid_argument("alpha must be at most 1/2");
  }
  if (beta.num == 0) {
    throw std::invalid_argument("beta must be positive");
  }
  auto stretch = oracle.stretch_guarantee();
  if (stretch.has_value()) {
    if (*stretch > Ratio::from_int(1) + alpha) {
      throw std::invalid_argument("oracle stretch guarantee exceeds 1+alpha");
    }
  } else if (!options.trust_unverified_oracle) {
    throw std::invalid_argument(
        "oracle declares no stretch guarantee; validate it against 1+alpha "
        "and opt in via trust_unverified_oracle");
  }
  const Graph& g = p.graph();
  if (vd.site_of.size() != static_cast<std::size_t>(g.vertex_count())) {
    throw std::invalid_argument("voronoi diagram built over a different graph");
  }
  for (std::size_t i = 0; i < p.size(); ++i) {
    const std::size_t v = static_cast<std::size_t>(p[i]);
    if (vd.site_of[v] != p[i] || !vd.dist_to_site[v].is_zero()) {
      throw std::invalid_argument(
          "voronoi diagram is not over the path's vertices");
    }
  }
}

struct GridContext {
  const DistanceOracle* oracle = nullptr;
  const WalkRef* p = nullptr;
  const WalkRef* q = nullptr;
  const CompressedPath* cp = nullptr;
  std::vector<BetaWindow> windows;
  EpsThresholds thresholds;
  std::uint64_t queries = 0;
  std::uint64_t cells = 0;
};

std::vector<FreeSpaceValue> classify_row(GridContext& ctx, std::size_t j) {
  const BetaWindow& w = ctx.windows[j];
  std::vector<FreeSpaceValue> values;
  if (w.empty) return values;
  values.reserve(w.hi - w.lo + 1);
  for (std::size_t a = w.lo; a <= w.hi; ++a) {
    Weight d = ctx.oracle->query((*ctx.p)[ctx.cp->pi[a]], (*ctx.q)[j]);
    ++ctx.queries;
    values.push_back(classify_eps(d, ctx.thresholds));
  }
  ctx.cells += values.size();
  return values;
}

// True iff the undirected pair qualifies as a traversable step that may
// change the path coordinate: one endpoint Near, the other below Far.
bool near_anchored(FreeSpaceValue u, FreeSpaceValue v) {
  return (u == FreeSpaceValue::kNear && v < FreeSpaceValue::kFar) ||
         (v == FreeSpaceValue::kNear && u < FreeSpaceValue::kFar);
}

struct GridSetup {
  CompressedPath cp;
  GridContext ctx;
  bool feasible = false;  // start/end present, no window empty
};

GridSetup prepare_grid(const DistanceOracle& oracle, const VoronoiDiagram& vd,
                       const WalkRef& p, const WalkRef& q, Weight rho,
                       const Ratio& kappa, const Ratio& alpha,
                       const Ratio& beta) {
  GridSetup setup;
  setup.cp = compress_path(p.graph(), p, beta, rho);
  setup.ctx.oracle = &oracle;
  setup.ctx.p = &p;
  setup.ctx.q = &q;
  setup.ctx.cp = &setup.cp;
  setup.ctx.windows = build_windows(vd, setup.cp, q, rho, kappa, beta);
  setup.ctx.thresholds = eps_thresholds(rho, alpha, beta);

  // Any empty window kills every complete traversal: each row must be
  // visited, and an empty one has no cell within rho of the path at all.
  for (const BetaWindow& w : setup.ctx.windows) {
    if (w.empty) return setup;
  }
  // The walk must start at compressed index 0 and end at the last one.
  const std::size_t np = setup.cp.size();
  if (setup.ctx.windows.front().lo > 0) return setup;
  if (setup.ctx.windows.back().hi < np - 1) return setup;
  setup.feasible = true;
  return setup;
}

void finish_stats(VerdictAtRho& out, const GridContext& ctx,
                  const CompressedPath& cp, const EpsOptions& options) {
  out.stats.oracle_queries = ctx.queries;
  out.stats.iterations = ctx.cells;
  if (options.compressed_size) *options.compressed_size = cp.size();
  if (options.grid_cells) *options.grid_cells = static_cast<std::size_t>(ctx.cells);
}

}  // namespace

VerdictAtRho decide_eps_strong(const DistanceOracle& oracle,
                               const VoronoiDiagram& vd, const WalkRef& p,
                               const WalkRef& q, Weight rho,
                               const Ratio& kappa, const Ratio& alpha,
                               const Ratio& beta, const EpsOptions& options) {
  check_eps_inputs(oracle, vd, p, q, rho, kappa, alpha, beta, options);
  const Ratio one = Ratio::from_int(1);

  VerdictAtRho out;
  out.rho = rho;
  out.gap_factor = (one + alpha) * (one + alpha + beta);
  out.verdict = Verdict::kGreaterThanRho;

  GridSetup setup = prepare_grid(oracle, vd, p, q, rho, kappa, alpha, beta);
  GridContext& ctx = setup.ctx;
  if (!setup.feasible) {
    finish_stats(out, ctx, setup.cp, options);
    return out;
  }

  const std::size_t np = setup.cp.size();
  const std::size_t m = q.size();
  std::vector<char> reach;

  // Row 0: seed at the start cell, then close rightward. A reachable cell
  // is always below Far (the start is checked; every move demands it of
  // its target), so later rows never need the previous row's values, only
  // its reachability.
  {
    std::vector<FreeSpaceValue> first_row = classify_row(ctx, 0);
    std::vector<char> seed(first_row.size(), 0);
    if (first_row[0] < FreeSpaceValue::kFar) seed[0] = 1;
    for (std::size_t idx = 1; idx < first_row.size(); ++idx) {
      if (seed[idx - 1] && first_row[idx] == FreeSpaceValue::kNear) {
        seed[idx] = 1;
      }
    }
    reach = std::move(seed);
  }
  const BetaWindow* prev_w = &ctx.windows[0];

  for (std::size_t j = 1; j < m; ++j) {
    const BetaWindow& wj = ctx.windows[j];
    std::vector<FreeSpaceValue> row = classify_row(ctx, j);
    std::vector<char> new_reach(row.size(), 0);
    for (std::size_t a = wj.lo; a <= wj.hi; ++a) {
      const std::size_t idx = a - wj.lo;
      bool r = false;
      // Vertical move from (a, j-1): both cells below Far.
      if (a >= prev_w->lo && a <= prev_w->hi && reach[a - prev_w->lo] &&
          row[idx] < FreeSpaceValue::kFar) {
        r = true;
      }
      // Diagonal move from (a-1, j-1): target must be Near.
      if (!r && a > 0 && a - 1 >= prev_w->lo && a - 1 <= prev_w->hi &&
          reach[a - 1 - prev_w->lo] && row[idx] == FreeSpaceValue::kNear) {
        r = true;
      }
      // Horizontal move within the row: target must be Near.
      if (!r && idx > 0 && new_reach[idx - 1] &&
          row[idx] == FreeSpaceValue::kNear) {
        r = true;
      }
      new_reach[idx] = r ? 1 : 0;
    }
    reach = std::move(new_reach);
    prev_w = &wj;
  }

  if (reach[np - 1 - ctx.windows[m - 1].lo]) {
    out.verdict = Verdict::kAtMostScaled;
  }
  finish_stats(out, ctx, setup.cp, options);
  return out;
}

namespace {

class GridSets {
 public:
  explicit GridSets(std::size_t n) : parent_(n) {
    std::iota(parent_.begin(), parent_.end(), std::size_t{0});
  }
  std::size_t find(std::size_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }
  void unite(std::size_t a, std::size_t b) { parent_[find(a)] = find(b); }

 private:
  std::vector<std::size_t> parent_;
};

}  // namespace

VerdictAtRho decide_eps_weak(const DistanceOracle& oracle,
                             const VoronoiDiagram& vd, const WalkRef& p,
                             const WalkRef& q, Weight rho, const Ratio& kappa,
                             const Ratio& alpha, const Ratio& beta,
                             const EpsOptions& options) {
  check_eps_inputs(oracle, vd, p, q, rho, kappa, alpha, beta, options);
  const Ratio one = Ratio::from_int(1);

  VerdictAtRho out;
  out.rho = rho;
  out.gap_factor = (one + alpha) * (one + alpha + beta);
  out.verdict = Verdict::kGreaterThanRho;

  GridSetup setup = prepare_grid(oracle, vd, p, q, rho, kappa, alpha, beta);
  GridContext& ctx = setup.ctx;
  if (!setup.feasible) {
    finish_stats(out, ctx, setup.cp, options);
    return out;
  }

  const std::size_t np = setup.cp.size();
  const std::size_t m = q.size();

  std::vector<std::vector<FreeSpaceValue>> vals(m);
  std::vector<std::size_t> offset(m + 1, 0);
  for (std::size_t j = 0; j < m; ++j) {
    vals[j] = classify_row(ctx, j);
    offset[j + 1] = offset[j] + vals[j].size();
  }

  // Start/end must themselves be usable cells.
  const std::size_t start_id = 0;  // window 0 starts at compressed index 0
  const std::size_t end_id = offset[m - 1] + (np - 1 - ctx.windows[m - 1].lo);
  if (!(vals[0][0] < FreeSpaceValue::kFar) ||
      !(vals[m - 1][np - 1 - ctx.windows[m - 1].lo] < FreeSpaceValue::kFar)) {
    finish_stats(out, ctx, setup.cp, options);
    return out;
  }

  GridSets sets(offset[m]);
  for (std::size_t j = 0; j < m; ++j) {
    const BetaWindow& wj = ctx.windows[j];
    for (std::size_t a = wj.lo; a <= wj.hi; ++a) {
      const std::size_t idx = a - wj.lo;
      const std::size_t id = offset[j] + idx;
      const FreeSpaceValue u = vals[j][idx];
      // Horizontal neighbor (a+1, j).
      if (a + 1 <= wj.hi && near_anchored(u, vals[j][idx + 1])) {
        sets.unite(id, id + 1);
      }
      if (j + 1 < m) {
        const BetaWindow& wn = ctx.windows[j + 1];
        auto in_next = [&](std::size_t b) { return b >= wn.lo && b <= wn.hi; };
        auto next_val = [&](std::size_t b) { return vals[j + 1][b - wn.lo]; };
        auto next_id = [&](std::size_t b) { return offset[j + 1] + (b - wn.lo); };
        // Vertical neighbor (a, j+1): both below Far.
        if (in_next(a) && u < FreeSpaceValue::kFar &&
            next_val(a) < FreeSpaceValue::kFar) {
          sets.unite(id, next_id(a));
        }
        // Diagonal neighbors (a±1, j+1): Near-anchored steps.
        if (a > 0 && in_next(a - 1) && near_anchored(u, next_val(a - 1))) {
          sets.unite(id, next_id(a - 1));
        }
        if (in_next(a + 1) && near_anchored(u, next_val(a + 1))) {
          sets.unite(id, next_id(a + 1));
        }
      }
    }
  }

  if (sets.find(start_id) == sets.find(end_id)) {
    out.verdict = Verdict::kAtMostScaled;
  }
  finish_stats(out, ctx, setup.cp, options);
  return out;
}

Ratio derive_eps_alpha(const Ratio& epsilon) {
  if (epsilon.num == 0) {
    throw std::invalid_argument("epsilon must be positive");
  }
  const double e = epsilon.as_double();
  const double x = 0.25 * (std::sqrt(8.0 * e + 9.0) - 3.0);
  Ratio alpha = Ratio::floor_with_denominator(x, 1024);
  if (alpha > Ratio(1, 2)) alpha = Ratio(1, 2);

  // Exact guard: with alpha = beta, the gap (1+a)(1+2a) must stay within
  // 1+epsilon; nudge down by 1/1024 if double rounding overshot.
  const Ratio one = Ratio::from_int(1);
  while (alpha.num > 0) {
    Ratio gap = (one + alpha) * (one + alpha + alpha);
    if (gap <= one + epsilon) break;
    std::int64_t num_1024 = alpha.num * (1024 / alpha.den);
    alpha = Ratio(num_1024 - 1, 1024);
  }
  if (alpha.num == 0) {
    throw std::invalid_argument(
        "epsilon is too small for the 1/1024 parameter grid (needs epsilon "
        ">= 3074/1048576)");
  }
  return alpha;
}

ApproxInterval approx_value_eps_params(const DistanceOracle& oracle,
                                       const WalkRef& p, const WalkRef& q,
                                       const Ratio& kappa, const Ratio& alpha,
                                       const Ratio& beta, FrechetMode mode,
                                       const Ratio& eta,
                                       const EpsOptions& options) {
  const Graph& g = p.graph();
  VoronoiDiagram vd = voronoi(g, p.vertices());
  check_eps_inputs(oracle, vd, p, q, Weight::zero(), kappa, alpha, beta,
                   options);

  // Seed: the endpoint matchings bound the distance from below. Perceived
  // values may overestimate by the stretch, so divide it back out unless
  // the oracle is exact.
  Weight observed = max(oracle.query(p[0], q[0]),
                        oracle.query(p[p.size() - 1], q[q.size() - 1]));
  Weight seed = observed;
  auto stretch = oracle.stretch_guarantee();
  if (!(stretch.has_value() && *stretch == Ratio::from_int(1))) {
    const Ratio one_plus = Ratio::from_int(1) + alpha;
    seed = scale_floor(Ratio(one_plus.den, one_plus.num), observed);
  }

  RhoSearchInputs inputs;
  inputs.lower_bound_seed = seed;
  inputs.min_positive_step = g.min_positive_edge_weight();
  inputs.finite_distance_cap = g.total_edge_weight();
  inputs.gap = (Ratio::from_int(1) + alpha) *
               (Ratio::from_int(1) + alpha + beta);
  inputs.eta = eta;

  auto decide = [&](Weight rho) {
    return mode == FrechetMode::kStrong
               ? decide_eps_strong(oracle, vd, p, q, rho, kappa, alpha, beta,
                                   options)
               : decide_eps_weak(oracle, vd, p, q, rho, kappa, alpha, beta,
                                 options);
  };
  ApproxInterval interval = rho_value_search(decide, inputs);
  interval.stats.oracle_queries += 2;  // the two seed queries
  return interval;
}

ApproxInterval approx_value_eps(const DistanceOracle& oracle, const WalkRef& p,
                                const WalkRef& q, const Ratio& kappa,
                                const Ratio& epsilon, FrechetMode mode,
                                const Ratio& eta, const EpsOptions& options) {
  Ratio alpha = derive_eps_alpha(epsilon);
  return approx_value_eps_params(oracle, p, q, kappa, alpha, alpha, mode, eta,
                                 options);
}

}  // namespace gfd
