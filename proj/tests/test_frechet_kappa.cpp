#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "gfd/frechet_exact.hpp"
#include "gfd/frechet_kappa.hpp"
#include "gfd/oracle.hpp"
#include "gfd/ratio.hpp"
#include "testutil.hpp"

using gfd::ExactOracle;
using gfd::FreeSpaceValue;
using gfd::Graph;
using gfd::Ratio;
using gfd::Verdict;
using gfd::VertexId;
using gfd::WalkRef;
using gfd::Weight;
namespace tu = gfd::testutil;

namespace {

// Threshold values to probe around an exact distance, in milli-units.
std::vector<Weight> rho_sweep(Weight exact) {
  std::vector<Weight> out;
  if (exact.is_infinite()) {
    out.push_back(Weight::from_milli(1));
    out.push_back(Weight::from_milli(1000000));
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
  push(e / 4);
  push(e / 2);
  push(3 * e / 4);
  push(e - 1);
  push(e);
  push(e + 1);
  push(3 * e / 2);
  push(2 * e);
  if (out.empty()) push(0);
  return out;
}

}  // namespace

TEST_CASE("cell classification boundaries") {
  const Weight rho = Weight::parse("2");  // 2000 milli
  const Ratio one(1, 1);

  // kappa = 1: Near iff d <= rho, Far iff d > 2*rho.
  CHECK(gfd::classify_kappa(Weight::zero(), rho, one) == FreeSpaceValue::kNear);
  CHECK(gfd::classify_kappa(Weight::from_milli(2000), rho, one) ==
        FreeSpaceValue::kNear);
  CHECK(gfd::classify_kappa(Weight::from_milli(2001), rho, one) ==
        FreeSpaceValue::kMid);
  CHECK(gfd::classify_kappa(Weight::from_milli(4000), rho, one) ==
        FreeSpaceValue::kMid);
  CHECK(gfd::classify_kappa(Weight::from_milli(4001), rho, one) ==
        FreeSpaceValue::kFar);
  CHECK(gfd::classify_kappa(Weight::infinity(), rho, one) ==
        FreeSpaceValue::kFar);

  // kappa = 3/2: Far boundary moves to (5/2) * rho = 5000 milli.
  const Ratio k32(3, 2);
  CHECK(gfd::classify_kappa(Weight::from_milli(5000), rho, k32) ==
        FreeSpaceValue::kMid);
  CHECK(gfd::classify_kappa(Weight::from_milli(5001), rho, k32) ==
        FreeSpaceValue::kFar);

  // rho = 0 degenerates gracefully: only exact matches are Near.
  CHECK(gfd::classify_kappa(Weight::zero(), Weight::zero(), one) ==
        FreeSpaceValue::kNear);
  CHECK(gfd::classify_kappa(Weight::from_milli(1), Weight::zero(), one) ==
        FreeSpaceValue::kFar);
}

TEST_CASE("verdicts never contradict the exact distance") {
  auto rng = tu::make_rng(77);
  const Ratio kappa(1, 1);
  int at_most_seen = 0;
  int greater_seen = 0;
  for (int trial = 0; trial < 60; ++trial) {
    const Graph g = tu::random_connected_graph(rng, 4, 14);
    const std::vector<VertexId> pv = tu::random_shortest_path(rng, g);
    const std::vector<VertexId> qv = tu::random_walk(rng, g, 8);
    const WalkRef p(g, pv);
    const WalkRef q(g, qv);
    const ExactOracle oracle(g);
    const Weight exact = gfd::exact_strong(oracle, p, q);
    for (const Weight rho : rho_sweep(exact)) {
      CAPTURE(trial);
      CAPTURE(rho.milli());
      const gfd::VerdictAtRho v = gfd::decide_kappa(oracle, p, q, rho, kappa);
      CHECK(v.rho == rho);
      CHECK(v.gap_factor == Ratio(2, 1));
      if (v.verdict == Verdict::kAtMostScaled) {
        ++at_most_seen;
        // Claim: exact <= (kappa+1) * rho.
        CHECK(gfd::weight_le_scaled(exact, Ratio(2, 1), rho));
      } else {
        ++greater_seen;
        // Claim: exact > rho.
        CHECK(exact > rho);
      }
    }
  }
  // The sweep straddles the exact value, so both verdicts must occur.
  CHECK(at_most_seen > 0);
  CHECK(greater_seen > 0);
}

TEST_CASE("query budget and traversal shape") {
  auto rng = tu::make_rng(99);
  const Ratio kappa(1, 1);
  for (int trial = 0; trial < 40; ++trial) {
    const Graph g = tu::random_connected_graph(rng, 4, 12);
    const std::vector<VertexId> pv = tu::random_shortest_path(rng, g);
    const std::vector<VertexId> qv = tu::random_walk(rng, g, 6);
    const WalkRef p(g, pv);
    const WalkRef q(g, qv);
    const ExactOracle oracle(g);
    const Weight exact = gfd::exact_strong(oracle, p, q);
    for (const Weight rho : rho_sweep(exact)) {
      gfd::LatticeWalk traversal;
      gfd::KappaOptions options;
      options.traversal = &traversal;
      oracle.reset_query_count();
      const gfd::VerdictAtRho v =
          gfd::decide_kappa(oracle, p, q, rho, kappa, options);
      const std::uint64_t budget = 3 * (p.size() + q.size()) + 1;
      CAPTURE(trial);
      CAPTURE(rho.milli());
      CHECK(v.stats.oracle_queries <= budget);
      CHECK(v.stats.oracle_queries == oracle.query_count());
      CHECK(v.stats.iterations <= p.size() + q.size());

      // When the start cell itself is too far, the walk never begins.
      if (traversal.empty()) {
        CHECK(v.verdict == Verdict::kGreaterThanRho);
        CHECK(v.stats.oracle_queries == 1);
        continue;
      }
      // Otherwise the traversal starts at the origin and moves
      // monotonically one lattice step at a time, never leaving the grid.
      CHECK(traversal.front() == gfd::LatticePoint{0, 0});
      for (std::size_t s = 0; s + 1 < traversal.size(); ++s) {
        const auto [i0, j0] = traversal[s];
        const auto [i1, j1] = traversal[s + 1];
        CHECK(i1 >= i0);
        CHECK(j1 >= j0);
        CHECK((i1 - i0) + (j1 - j0) >= 1);
        CHECK(i1 - i0 <= 1);
        CHECK(j1 - j0 <= 1);
        CHECK(i1 < p.size());
        CHECK(j1 < q.size());
      }
      if (v.verdict == Verdict::kAtMostScaled) {
        CHECK(traversal.back() ==
              gfd::LatticePoint{p.size() - 1, q.size() - 1});
      }
    }
  }
}

TEST_CASE("single-vertex walks decide by one lookup") {
  Graph g(2);
  g.add_edge(0, 1, Weight::parse("3"));
  const ExactOracle oracle(g);
  const WalkRef p(g, {0});
  const WalkRef q(g, {1});
  const Ratio kappa(1, 1);
  CHECK(gfd::decide_kappa(oracle, p, q, Weight::parse("3"), kappa).verdict ==
        Verdict::kAtMostScaled);
  CHECK(gfd::decide_kappa(oracle, p, q, Weight::parse("2.999"), kappa)
            .verdict == Verdict::kGreaterThanRho);
}

TEST_CASE("decision preconditions") {
  auto rng = tu::make_rng(13);
  const Graph g = tu::random_connected_graph(rng, 5, 10);
  const WalkRef p(g, tu::random_shortest_path(rng, g));
  const WalkRef q(g, tu::random_walk(rng, g, 4));
  const Weight rho = Weight::parse("1");

  const gfd::LandmarkOracle landmark(g, 2, 1);
  CHECK_THROWS_AS(gfd::decide_kappa(landmark, p, q, rho, Ratio(1, 1)),
                  std::invalid_argument);

  const ExactOracle oracle(g);
  CHECK_THROWS_AS(gfd::decide_kappa(oracle, p, q, rho, Ratio(1, 2)),
                  std::invalid_argument);

  Graph other(2);
  other.add_edge(0, 1, Weight::parse("1"));
  const ExactOracle foreign(other);
  CHECK_THROWS_AS(gfd::decide_kappa(foreign, p, q, rho, Ratio(1, 1)),
                  std::invalid_argument);
}

TEST_CASE("value search brackets the exact distance") {
  auto rng = tu::make_rng(303);
  const Ratio kappa(1, 1);
  const Ratio eta(1, 64);
  for (int trial = 0; trial < 50; ++trial) {
    const Graph g = tu::random_connected_graph(rng, 4, 14);
    const WalkRef p(g, tu::random_shortest_path(rng, g));
    const WalkRef q(g, tu::random_walk(rng, g, 8));
    const ExactOracle oracle(g);
    const Weight exact = gfd::exact_strong(oracle, p, q);
    const gfd::ApproxInterval iv =
        gfd::approx_value_kappa(oracle, p, q, kappa, eta);
    CAPTURE(trial);
    CHECK(iv.lo <= exact);
    CHECK(exact <= iv.hi);
    const Weight floor_lo = gfd::max(iv.lo, Weight::from_milli(1));
    CHECK(iv.hi <= gfd::scale_ceil(iv.factor, floor_lo));
    CHECK(iv.factor == Ratio(2, 1) * (Ratio(1, 1) + eta));
  }
}

TEST_CASE("value search degenerate cases") {
  const Graph g = tu::chain_graph(4, 1000);
  const ExactOracle oracle(g);
  const Ratio kappa(1, 1);
  const Ratio eta(1, 64);

  const WalkRef p(g, {0, 1, 2});
  const gfd::ApproxInterval same = gfd::approx_value_kappa(oracle, p, p, kappa, eta);
  CHECK(same.lo == Weight::zero());
  CHECK(same.hi == Weight::zero());

  Graph split(4);
  split.add_edge(0, 1, Weight::parse("1"));
  split.add_edge(2, 3, Weight::parse("1"));
  const ExactOracle split_oracle(split);
  const WalkRef sp(split, {0, 1});
  const WalkRef sq(split, {2, 3});
  const gfd::ApproxInterval unreachable =
      gfd::approx_value_kappa(split_oracle, sp, sq, kappa, eta);
  CHECK(unreachable.lo.is_infinite());
  CHECK(unreachable.hi.is_infinite());
}
