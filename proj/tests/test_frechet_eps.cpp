#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <numeric>

#include "gfd/dijkstra.hpp"
#include "gfd/frechet_eps.hpp"
#include "gfd/frechet_exact.hpp"
#include "gfd/oracle.hpp"
#include "gfd/voronoi.hpp"
#include "testutil.hpp"

using gfd::CompressedPath;
using gfd::EpsThresholds;
using gfd::ExactOracle;
using gfd::FreeSpaceValue;
using gfd::FrechetMode;
using gfd::Graph;
using gfd::Ratio;
using gfd::Verdict;
using gfd::VertexId;
using gfd::VoronoiDiagram;
using gfd::WalkRef;
using gfd::Weight;
namespace tu = gfd::testutil;

namespace {

// Exact-backed oracle that reports floor(1.3 * d): a genuine 13/10-stretch
// estimator (floor(1.3 d) is between d and 1.3 d for integer milli d).
class InflatingOracle final : public gfd::DistanceOracle {
 public:
  explicit InflatingOracle(const Graph& g)
      : DistanceOracle(g), inner_(g) {}

  std::optional<Ratio> stretch_guarantee() const override {
    return Ratio(13, 10);
  }
  std::uint64_t dijkstra_runs() const override { return inner_.dijkstra_runs(); }

 protected:
  Weight do_query(VertexId u, VertexId v) const override {
    return gfd::scale_floor(Ratio(13, 10), inner_.query(u, v));
  }

 private:
  ExactOracle inner_;
};

std::vector<Weight> rho_sweep(Weight exact) {
  std::vector<Weight> out;
  if (exact.is_infinite()) {
    out.push_back(Weight::from_milli(1));
    out.push_back(Weight::from_milli(2000000));
    return out;
  }
  const std::int64_t e = exact.milli();
  auto push = [&](std::int64_t v) {
    if (v < 0) return;
    const Weight w = Weight::from_milli(v);
    for (const Weight& seen : out)
      if (seen == w) return;
    out.push_back(w);
  };
  push(e / 2);
  push(e - 1);
  push(e);
  push(e + 1);
  push(2 * e);
  if (out.empty()) push(0);
  return out;
}

}  // namespace

TEST_CASE("compression skeleton on a unit chain") {
  const Graph g = tu::chain_graph(10, 1000);
  std::vector<VertexId> pv(10);
  std::iota(pv.begin(), pv.end(), 0);
  const WalkRef p(g, pv);

  const CompressedPath cp =
      gfd::compress_path(g, p, Ratio(1, 2), Weight::parse("5"));
  // beta*rho = 2.5: anchors every 3 vertices, plus anchor predecessors and
  // the final vertex.
  CHECK(cp.pi == std::vector<std::size_t>{0, 2, 3, 5, 6, 8, 9});

  // pred_of_source[x] is the last kept index at or before x.
  REQUIRE(cp.pred_of_source.size() == 10);
  for (std::size_t x = 0; x < 10; ++x) {
    std::size_t expect = 0;
    for (std::size_t t = 0; t < cp.pi.size(); ++t) {
      if (cp.pi[t] <= x) expect = t;
    }
    CHECK(cp.pred_of_source[x] == expect);
  }
}

TEST_CASE("compression keeps endpoints and stays sparse") {
  auto rng = tu::make_rng(61);
  for (int trial = 0; trial < 40; ++trial) {
    const Graph g = tu::random_connected_graph(rng, 4, 20);
    const std::vector<VertexId> pv = tu::random_shortest_path(rng, g);
    const WalkRef p(g, pv);
    const Weight rho = tu::random_weight(rng, 1, 8000);
    const Ratio beta(1, 4);
    const CompressedPath cp = gfd::compress_path(g, p, beta, rho);

    REQUIRE(!cp.pi.empty());
    CHECK(cp.pi.front() == 0);
    CHECK(cp.pi.back() == p.size() - 1);
    for (std::size_t t = 1; t < cp.pi.size(); ++t) {
      CHECK(cp.pi[t] > cp.pi[t - 1]);
    }
    // Every removed vertex is within beta*rho of walk length of the kept
    // vertex before or after it (anchors absorb what follows them; anchor
    // predecessors absorb what precedes them).
    for (std::size_t x = 0; x < p.size(); ++x) {
      const std::size_t t = cp.pred_of_source[x];
      if (cp.pi[t] == x) continue;
      const bool near_left =
          gfd::weight_lt_scaled(p.length_between(cp.pi[t], x), beta, rho);
      const bool near_right =
          t + 1 < cp.pi.size() &&
          gfd::weight_lt_scaled(p.length_between(x, cp.pi[t + 1]), beta, rho);
      CHECK((near_left || near_right));
    }
  }
}

TEST_CASE("degenerate compression keeps everything") {
  const Graph g = tu::chain_graph(6, 1000);
  std::vector<VertexId> pv(6);
  std::iota(pv.begin(), pv.end(), 0);
  const WalkRef p(g, pv);
  const CompressedPath cp =
      gfd::compress_path(g, p, Ratio(1, 4), Weight::zero());
  CHECK(cp.pi.size() == 6);
  for (std::size_t t = 0; t < 6; ++t) CHECK(cp.pi[t] == t);
}

TEST_CASE("compression rejects non-path walks") {
  const Graph g = tu::chain_graph(4, 1000);
  const std::vector<VertexId> wv{0, 1, 0, 1, 2};
  const WalkRef w(g, wv);
  CHECK_THROWS_AS(gfd::compress_path(g, w, Ratio(1, 4), Weight::parse("1")),
                  std::invalid_argument);
}

TEST_CASE("threshold arithmetic") {
  const Ratio quarter(1, 4);
  const EpsThresholds t =
      gfd::eps_thresholds(Weight::parse("1"), quarter, quarter);
  CHECK(t.near_t == Weight::from_milli(1250));
  CHECK(t.far_t == Weight::from_milli(1875));

  CHECK(gfd::classify_eps(Weight::from_milli(1250), t) ==
        FreeSpaceValue::kNear);
  CHECK(gfd::classify_eps(Weight::from_milli(1251), t) == FreeSpaceValue::kMid);
  CHECK(gfd::classify_eps(Weight::from_milli(1875), t) == FreeSpaceValue::kMid);
  CHECK(gfd::classify_eps(Weight::from_milli(1876), t) == FreeSpaceValue::kFar);
  CHECK(gfd::classify_eps(Weight::infinity(), t) == FreeSpaceValue::kFar);
}

TEST_CASE("crossed thresholds at one milli resolve Far first") {
  const Ratio quarter(1, 4);
  const EpsThresholds t =
      gfd::eps_thresholds(Weight::from_milli(1), quarter, quarter);
  // ceil(1.25) = 2 but floor(1.875) = 1: the rounded bands overlap.
  CHECK(t.near_t == Weight::from_milli(2));
  CHECK(t.far_t == Weight::from_milli(1));
  CHECK(gfd::classify_eps(Weight::from_milli(1), t) == FreeSpaceValue::kNear);
  CHECK(gfd::classify_eps(Weight::from_milli(2), t) == FreeSpaceValue::kFar);
}

TEST_CASE("window placement on a long chain") {
  const int n = 100;
  const Graph g = tu::chain_graph(n, 1000);
  std::vector<VertexId> pv(n);
  std::iota(pv.begin(), pv.end(), 0);
  const WalkRef p(g, pv);
  const VoronoiDiagram vd = gfd::voronoi(g, pv);

  // beta*rho = 0.25 < every edge: compression keeps all n vertices.
  const Weight rho = Weight::parse("1");
  const Ratio kappa(1, 1);
  const Ratio beta(1, 4);
  const CompressedPath cp = gfd::compress_path(g, p, beta, rho);
  REQUIRE(cp.size() == static_cast<std::size_t>(n));

  const std::vector<VertexId> qv{50, 51};
  const WalkRef q(g, qv);
  const auto windows = gfd::build_windows(vd, cp, q, rho, kappa, beta);
  REQUIRE(windows.size() == 2);
  // Half-width ceil(9*1/(1/4)) = 36 around the owning site's position.
  CHECK(!windows[0].empty);
  CHECK(windows[0].lo == 50 - 36);
  CHECK(windows[0].hi == 50 + 36);
  CHECK(!windows[1].empty);
  CHECK(windows[1].lo == 51 - 36);
  CHECK(windows[1].hi == 51 + 36);

  // Near the ends the window clamps to the grid.
  const WalkRef q_lo(g, {2});
  const auto lo_windows = gfd::build_windows(vd, cp, q_lo, rho, kappa, beta);
  CHECK(lo_windows[0].lo == 0);
  CHECK(lo_windows[0].hi == 2 + 36);
  const WalkRef q_hi(g, {98});
  const auto hi_windows = gfd::build_windows(vd, cp, q_hi, rho, kappa, beta);
  CHECK(hi_windows[0].lo == 98 - 36);
  CHECK(hi_windows[0].hi == static_cast<std::size_t>(n - 1));
}

TEST_CASE("vertices beyond rho get empty windows") {
  // p spans 0-1; vertex 3 hangs far away from both.
  Graph g(4);
  g.add_edge(0, 1, Weight::parse("1"));
  g.add_edge(1, 2, Weight::parse("1"));
  g.add_edge(2, 3, Weight::parse("50"));
  const std::vector<VertexId> pv{0, 1};
  const WalkRef p(g, pv);
  const VoronoiDiagram vd = gfd::voronoi(g, pv);
  const CompressedPath cp =
      gfd::compress_path(g, p, Ratio(1, 4), Weight::parse("1"));

  const std::vector<VertexId> qv{1, 2, 3};
  const WalkRef q(g, qv);
  const auto windows =
      gfd::build_windows(vd, cp, q, Weight::parse("1"), Ratio(1, 1), Ratio(1, 4));
  REQUIRE(windows.size() == 3);
  CHECK(!windows[0].empty);  // d(1, p) = 0
  CHECK(!windows[1].empty);  // d(2, p) = 1 <= rho
  CHECK(windows[2].empty);   // d(3, p) = 51 > rho
}

TEST_CASE("window construction validates its inputs") {
  const Graph g = tu::chain_graph(5, 1000);
  const std::vector<VertexId> pv{0, 1, 2};
  const WalkRef p(g, pv);
  const CompressedPath cp =
      gfd::compress_path(g, p, Ratio(1, 4), Weight::parse("1"));
  const WalkRef q(g, {3, 4});

  const Graph other = tu::chain_graph(3, 1000);
  const VoronoiDiagram wrong = gfd::voronoi(other, {0});
  CHECK_THROWS_AS(
      gfd::build_windows(wrong, cp, q, Weight::parse("1"), Ratio(1, 1),
                         Ratio(1, 4)),
      std::invalid_argument);

  // A diagram over the right graph but the wrong sites is caught once a
  // q vertex lands in a foreign cell.
  const VoronoiDiagram foreign_sites = gfd::voronoi(g, {4});
  CHECK_THROWS_AS(
      gfd::build_windows(foreign_sites, cp, q, Weight::parse("10"),
                         Ratio(1, 1), Ratio(1, 4)),
      std::invalid_argument);
}

TEST_CASE("gap decisions never contradict the exact distances") {
  auto rng = tu::make_rng(404);
  const Ratio kappa(1, 1);
  const Ratio quarter(1, 4);
  const Ratio claim(15, 8);  // (1+1/4)(1+1/4+1/4)
  int strong_at_most = 0, strong_greater = 0;
  int weak_at_most = 0, weak_greater = 0;
  for (int trial = 0; trial < 40; ++trial) {
    const Graph g = tu::random_connected_graph(rng, 4, 14);
    const std::vector<VertexId> pv = tu::random_shortest_path(rng, g);
    const std::vector<VertexId> qv = tu::random_walk(rng, g, 7);
    const WalkRef p(g, pv);
    const WalkRef q(g, qv);
    const ExactOracle oracle(g);
    const VoronoiDiagram vd = gfd::voronoi(g, pv);
    const Weight exact_s = gfd::exact_strong(oracle, p, q);
    const Weight exact_w = gfd::exact_weak(oracle, p, q);

    for (const Weight rho : rho_sweep(exact_s)) {
      CAPTURE(trial);
      CAPTURE(rho.milli());
      const gfd::VerdictAtRho vs =
          gfd::decide_eps_strong(oracle, vd, p, q, rho, kappa, quarter, quarter);
      CHECK(vs.gap_factor == claim);
      if (vs.verdict == Verdict::kAtMostScaled) {
        ++strong_at_most;
        CHECK(gfd::weight_le_scaled(exact_s, claim, rho));
      } else {
        ++strong_greater;
        CHECK(exact_s > rho);
      }
    }
    for (const Weight rho : rho_sweep(exact_w)) {
      CAPTURE(trial);
      CAPTURE(rho.milli());
      const gfd::VerdictAtRho vw =
          gfd::decide_eps_weak(oracle, vd, p, q, rho, kappa, quarter, quarter);
      if (vw.verdict == Verdict::kAtMostScaled) {
        ++weak_at_most;
        CHECK(gfd::weight_le_scaled(exact_w, claim, rho));
      } else {
        ++weak_greater;
        CHECK(exact_w > rho);
      }
    }
  }
  CHECK(strong_at_most > 0);
  CHECK(strong_greater > 0);
  CHECK(weak_at_most > 0);
  CHECK(weak_greater > 0);
}

TEST_CASE("an overestimating oracle within 1+alpha keeps the guarantees") {
  auto rng = tu::make_rng(505);
  const Ratio kappa(1, 1);
  const Ratio half(1, 2);
  const Ratio claim = (Ratio(3, 2)) * (Ratio(2, 1));  // (1+1/2)(1+1/2+1/2)
  for (int trial = 0; trial < 25; ++trial) {
    const Graph g = tu::random_connected_graph(rng, 4, 12);
    const std::vector<VertexId> pv = tu::random_shortest_path(rng, g);
    const std::vector<VertexId> qv = tu::random_walk(rng, g, 6);
    const WalkRef p(g, pv);
    const WalkRef q(g, qv);
    const InflatingOracle oracle(g);
    const ExactOracle reference(g);
    const VoronoiDiagram vd = gfd::voronoi(g, pv);
    const Weight exact_s = gfd::exact_strong(reference, p, q);

    for (const Weight rho : rho_sweep(exact_s)) {
      CAPTURE(trial);
      CAPTURE(rho.milli());
      const gfd::VerdictAtRho v =
          gfd::decide_eps_strong(oracle, vd, p, q, rho, kappa, half, half);
      if (v.verdict == Verdict::kAtMostScaled) {
        CHECK(gfd::weight_le_scaled(exact_s, claim, rho));
      } else {
        CHECK(exact_s > rho);
      }
    }
  }
}

TEST_CASE("oracle admission control") {
  auto rng = tu::make_rng(606);
  const Graph g = tu::random_connected_graph(rng, 6, 10);
  const std::vector<VertexId> pv = tu::random_shortest_path(rng, g);
  const WalkRef p(g, pv);
  const WalkRef q(g, tu::random_walk(rng, g, 4));
  const VoronoiDiagram vd = gfd::voronoi(g, pv);
  const Weight rho = Weight::parse("2");
  const Ratio kappa(1, 1);
  const Ratio quarter(1, 4);

  // Declared stretch above 1+alpha: rejected.
  const InflatingOracle inflating(g);
  CHECK_THROWS_AS(gfd::decide_eps_strong(inflating, vd, p, q, rho, kappa,
                                         quarter, quarter),
                  std::invalid_argument);

  // No declared stretch: rejected unless explicitly trusted.
  const gfd::LandmarkOracle landmark(
      g, static_cast<std::size_t>(g.vertex_count()), 7);
  CHECK_THROWS_AS(gfd::decide_eps_strong(landmark, vd, p, q, rho, kappa,
                                         quarter, quarter),
                  std::invalid_argument);

  // With every vertex a landmark the estimates are exact, so trusting it
  // after validation is sound and the verdict matches the exact oracle's.
  gfd::EpsOptions trust;
  trust.trust_unverified_oracle = true;
  const ExactOracle exact(g);
  const auto trusted = gfd::decide_eps_strong(landmark, vd, p, q, rho, kappa,
                                              quarter, quarter, trust);
  const auto reference = gfd::decide_eps_strong(exact, vd, p, q, rho, kappa,
                                                quarter, quarter);
  CHECK(trusted.verdict == reference.verdict);

  // Parameter validation.
  CHECK_THROWS_AS(gfd::decide_eps_strong(exact, vd, p, q, rho, kappa,
                                         Ratio(3, 4), quarter),
                  std::invalid_argument);  // alpha > 1/2
  CHECK_THROWS_AS(gfd::decide_eps_strong(exact, vd, p, q, rho, kappa, quarter,
                                         Ratio(0, 1)),
                  std::invalid_argument);  // beta = 0
  CHECK_THROWS_AS(gfd::decide_eps_strong(exact, vd, p, q, rho, Ratio(1, 2),
                                         quarter, quarter),
                  std::invalid_argument);  // kappa < 1

  // Voronoi diagram not over p's vertices.
  const VoronoiDiagram wrong = gfd::voronoi(g, {q[0]});
  const bool q0_on_p = [&] {
    for (const VertexId v : pv)
      if (v == q[0]) return true;
    return false;
  }();
  if (!q0_on_p) {
    CHECK_THROWS_AS(gfd::decide_eps_strong(exact, wrong, p, q, rho, kappa,
                                           quarter, quarter),
                    std::invalid_argument);
  }
}

TEST_CASE("an unmatchable q vertex is rejected without opening the grid") {
  Graph g(3);
  g.add_edge(0, 1, Weight::parse("1"));
  g.add_edge(1, 2, Weight::parse("100"));
  const std::vector<VertexId> pv{0, 1};
  const WalkRef p(g, pv);
  const WalkRef q(g, {1, 2});
  const ExactOracle oracle(g);
  const VoronoiDiagram vd = gfd::voronoi(g, pv);

  std::size_t compressed = 0, cells = 0;
  gfd::EpsOptions options;
  options.compressed_size = &compressed;
  options.grid_cells = &cells;
  const auto v = gfd::decide_eps_strong(oracle, vd, p, q, Weight::parse("1"),
                                        Ratio(1, 1), Ratio(1, 4), Ratio(1, 4),
                                        options);
  CHECK(v.verdict == Verdict::kGreaterThanRho);
  CHECK(cells == 0);
  CHECK(v.stats.oracle_queries == 0);
  CHECK(compressed == 2);
}

TEST_CASE("deriving the grid parameter from epsilon") {
  CHECK(gfd::derive_eps_alpha(Ratio(7, 8)) == Ratio(1, 4));
  // Huge epsilon clamps at the 1/2 cap.
  CHECK(gfd::derive_eps_alpha(Ratio(100, 1)) == Ratio(1, 2));
  // Too small for the 1/1024 grid.
  CHECK_THROWS_AS(gfd::derive_eps_alpha(Ratio(1, 512)), std::invalid_argument);
  CHECK_THROWS_AS(gfd::derive_eps_alpha(Ratio(0, 1)), std::invalid_argument);
  CHECK_NOTHROW(gfd::derive_eps_alpha(Ratio(1, 256)));

  // The derived alpha always honors the gap promise exactly.
  auto rng = tu::make_rng(17);
  std::uniform_int_distribution<std::int64_t> num(1, 400);
  std::uniform_int_distribution<std::int64_t> den(1, 100);
  const Ratio one = Ratio::from_int(1);
  for (int trial = 0; trial < 200; ++trial) {
    const Ratio eps(num(rng), den(rng));
    if (eps < Ratio(1, 256)) continue;
    const Ratio alpha = gfd::derive_eps_alpha(eps);
    CHECK(alpha.num > 0);
    CHECK(alpha <= Ratio(1, 2));
    const Ratio gap = (one + alpha) * (one + alpha + alpha);
    CHECK(gap <= one + eps);
  }
}

TEST_CASE("value search brackets both distance flavors") {
  auto rng = tu::make_rng(707);
  const Ratio kappa(1, 1);
  const Ratio quarter(1, 4);
  const Ratio eta(1, 64);
  for (int trial = 0; trial < 25; ++trial) {
    const Graph g = tu::random_connected_graph(rng, 4, 12);
    const std::vector<VertexId> pv = tu::random_shortest_path(rng, g);
    const std::vector<VertexId> qv = tu::random_walk(rng, g, 6);
    const WalkRef p(g, pv);
    const WalkRef q(g, qv);
    const ExactOracle oracle(g);

    const Weight exact_s = gfd::exact_strong(oracle, p, q);
    const auto ivs = gfd::approx_value_eps_params(
        oracle, p, q, kappa, quarter, quarter, FrechetMode::kStrong, eta);
    CAPTURE(trial);
    CHECK(ivs.lo <= exact_s);
    CHECK(exact_s <= ivs.hi);
    CHECK(ivs.hi <=
          gfd::scale_ceil(ivs.factor, gfd::max(ivs.lo, Weight::from_milli(1))));
    CHECK(ivs.factor == Ratio(15, 8) * (Ratio::from_int(1) + eta));

    const Weight exact_w = gfd::exact_weak(oracle, p, q);
    const auto ivw = gfd::approx_value_eps_params(
        oracle, p, q, kappa, quarter, quarter, FrechetMode::kWeak, eta);
    CHECK(ivw.lo <= exact_w);
    CHECK(exact_w <= ivw.hi);
    CHECK(ivw.hi <=
          gfd::scale_ceil(ivw.factor, gfd::max(ivw.lo, Weight::from_milli(1))));
  }
}

TEST_CASE("epsilon-driven value search") {
  auto rng = tu::make_rng(808);
  const Graph g = tu::random_connected_graph(rng, 6, 12);
  const std::vector<VertexId> pv = tu::random_shortest_path(rng, g);
  const WalkRef p(g, pv);
  const WalkRef q(g, tu::random_walk(rng, g, 6));
  const ExactOracle oracle(g);

  const auto same = gfd::approx_value_eps(oracle, p, p, Ratio(1, 1),
                                          Ratio(7, 8), FrechetMode::kStrong,
                                          Ratio(1, 64));
  CHECK(same.lo == Weight::zero());
  CHECK(same.hi == Weight::zero());

  const Weight exact_s = gfd::exact_strong(oracle, p, q);
  const auto iv = gfd::approx_value_eps(oracle, p, q, Ratio(1, 1), Ratio(7, 8),
                                        FrechetMode::kStrong, Ratio(1, 64));
  CHECK(iv.lo <= exact_s);
  CHECK(exact_s <= iv.hi);
  CHECK(iv.factor == Ratio(15, 8) * Ratio(65, 64));
}
