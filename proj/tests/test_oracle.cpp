#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "gfd/dijkstra.hpp"
#include "gfd/oracle.hpp"
#include "testutil.hpp"

using gfd::ExactOracle;
using gfd::Graph;
using gfd::LandmarkOracle;
using gfd::Ratio;
using gfd::VertexId;
using gfd::Weight;
namespace tu = gfd::testutil;

TEST_CASE("exact oracle returns true distances, symmetrically") {
  auto rng = tu::make_rng(808);
  for (int trial = 0; trial < 15; ++trial) {
    const Graph g = trial % 3 == 0 ? tu::random_disconnected_graph(rng, 2, 10)
                                   : tu::random_connected_graph(rng, 2, 20);
    const ExactOracle oracle(g);
    CHECK(oracle.stretch_guarantee() == Ratio::from_int(1));
    std::uniform_int_distribution<VertexId> vd(0, g.vertex_count() - 1);
    for (int k = 0; k < 30; ++k) {
      const VertexId u = vd(rng);
      const VertexId v = vd(rng);
      const Weight expected = gfd::dijkstra_sssp(g, u)[v];
      CHECK(oracle.query(u, v) == expected);
      CHECK(oracle.query(v, u) == expected);
    }
  }
}

TEST_CASE("exact oracle memoizes per source and counts queries") {
  auto rng = tu::make_rng(909);
  const Graph g = tu::random_connected_graph(rng, 8, 12);
  const ExactOracle oracle(g);
  CHECK(oracle.query_count() == 0);
  oracle.query(0, 5);
  oracle.query(0, 6);
  oracle.query(5, 0);  // same unordered source (min of the pair)
  CHECK(oracle.query_count() == 3);
  CHECK(oracle.dijkstra_runs() == 1);
  oracle.query(1, 3);
  CHECK(oracle.dijkstra_runs() == 2);
  oracle.reset_query_count();
  CHECK(oracle.query_count() == 0);
  CHECK(oracle.dijkstra_runs() == 2);  // reset does not erase the cache
}

TEST_CASE("landmark estimates never underestimate") {
  auto rng = tu::make_rng(1010);
  for (int trial = 0; trial < 15; ++trial) {
    const Graph g = tu::random_connected_graph(rng, 3, 25);
    const std::size_t k = 1 + static_cast<std::size_t>(trial) % 4;
    const LandmarkOracle oracle(g, k, /*seed=*/trial);
    CHECK(!oracle.stretch_guarantee().has_value());
    CHECK(oracle.dijkstra_runs() == oracle.landmarks().size());
    std::uniform_int_distribution<VertexId> vd(0, g.vertex_count() - 1);
    for (int q = 0; q < 25; ++q) {
      const VertexId u = vd(rng);
      const VertexId v = vd(rng);
      const Weight exact = gfd::dijkstra_sssp(g, u)[v];
      const Weight estimate = oracle.query(u, v);
      CHECK(estimate >= exact);
      if (u == v) CHECK(estimate == Weight::zero());
    }
  }
}

TEST_CASE("landmarks at every vertex give exact answers") {
  auto rng = tu::make_rng(1111);
  const Graph g = tu::random_connected_graph(rng, 4, 12);
  const std::size_t n = static_cast<std::size_t>(g.vertex_count());
  const LandmarkOracle oracle(g, n, 3);
  CHECK(oracle.landmarks().size() == n);
  for (VertexId u = 0; u < g.vertex_count(); ++u) {
    const auto dist = gfd::dijkstra_sssp(g, u);
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
      CHECK(oracle.query(u, v) == dist[v]);
    }
  }
}

TEST_CASE("landmark count is validated and clamped") {
  auto rng = tu::make_rng(1212);
  const Graph g = tu::random_connected_graph(rng, 4, 8);
  CHECK_THROWS_AS(LandmarkOracle(g, 0, 1), std::invalid_argument);
  const LandmarkOracle oracle(g, 1000, 1);
  CHECK(oracle.landmarks().size() ==
        static_cast<std::size_t>(g.vertex_count()));
}

TEST_CASE("landmark selection is deterministic per seed") {
  auto rng = tu::make_rng(1313);
  const Graph g = tu::random_connected_graph(rng, 10, 20);
  const LandmarkOracle a(g, 3, 42);
  const LandmarkOracle b(g, 3, 42);
  CHECK(a.landmarks() == b.landmarks());
}

TEST_CASE("landmark oracle crosses components as infinity") {
  Graph g(4);
  g.add_edge(0, 1, Weight::from_milli(10));
  g.add_edge(2, 3, Weight::from_milli(10));
  const LandmarkOracle oracle(g, 4, 7);  // one landmark per vertex
  CHECK(oracle.query(0, 2).is_infinite());
  CHECK(oracle.query(0, 1) == Weight::from_milli(10));
}

TEST_CASE("validate_stretch accepts honest oracles and flags bad ones") {
  // Hexagon: a single landmark badly overestimates some pairs.
  Graph g(6);
  for (int v = 0; v < 6; ++v) {
    g.add_edge(v, (v + 1) % 6, Weight::from_milli(1000));
  }
  std::vector<std::pair<VertexId, VertexId>> sample;
  for (VertexId u = 0; u < 6; ++u) {
    for (VertexId v = 0; v < 6; ++v) sample.emplace_back(u, v);
  }

  const ExactOracle exact(g);
  CHECK(gfd::validate_stretch(exact, g, Ratio::from_int(1), sample).ok());

  const LandmarkOracle one(g, 1, 5);
  const gfd::StretchReport tight =
      gfd::validate_stretch(one, g, Ratio(11, 10), sample);
  CHECK(!tight.ok());
  CHECK(tight.pairs_checked == sample.size());
  for (const auto& v : tight.violations) {
    // Only the upper bound can break; estimates never undershoot.
    CHECK(v.estimate > v.exact);
  }
  // A generous stretch is satisfied: on a 6-cycle the landmark detour is at
  // most the full cycle, i.e. within factor 5 of the true distance.
  CHECK(gfd::validate_stretch(one, g, Ratio::from_int(5), sample).ok());
}
