#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <sstream>

#include "gfd/graph.hpp"
#include "gfd/io.hpp"

using gfd::Graph;
using gfd::WalkRef;
using gfd::Weight;

TEST_CASE("add_edge validates ids, self-loops, duplicates, and weights") {
  Graph g(3);
  g.add_edge(0, 1, Weight::from_milli(500));
  CHECK_THROWS_AS(g.add_edge(0, 0, Weight::from_milli(1)),
                  std::invalid_argument);  // self-loop
  CHECK_THROWS_AS(g.add_edge(1, 0, Weight::from_milli(1)),
                  std::invalid_argument);  // duplicate (either orientation)
  CHECK_THROWS_AS(g.add_edge(0, 3, Weight::from_milli(1)),
                  std::invalid_argument);  // out of range
  CHECK_THROWS_AS(g.add_edge(-1, 2, Weight::from_milli(1)),
                  std::invalid_argument);
  CHECK_THROWS_AS(g.add_edge(1, 2, Weight::infinity()),
                  std::invalid_argument);  // infinite weight
  g.add_edge(1, 2, Weight::zero());        // zero weight is legal
  CHECK(g.edge_count() == 2);
}

TEST_CASE("edges are undirected and queryable") {
  Graph g(4);
  g.add_edge(0, 1, Weight::from_milli(100));
  g.add_edge(1, 2, Weight::from_milli(200));
  CHECK(g.edge_weight(0, 1) == Weight::from_milli(100));
  CHECK(g.edge_weight(1, 0) == Weight::from_milli(100));
  CHECK(g.edge_weight(0, 2).is_infinite());
  CHECK(g.has_edge(2, 1));
  CHECK(!g.has_edge(0, 3));
  CHECK(g.neighbors(1).size() == 2);
  CHECK(g.neighbors(3).empty());
}

TEST_CASE("labels default to empty and can be listed") {
  Graph g(3);
  g.set_label(1, "hub");
  g.set_label(2, "hub");
  CHECK(g.label(0).empty());
  CHECK(g.label(1) == "hub");
  CHECK(g.vertices_with_label("hub") == std::vector<gfd::VertexId>{1, 2});
  CHECK(g.vertices_with_label("missing").empty());
}

TEST_CASE("weight aggregates track totals and positive minimum") {
  Graph g(4);
  CHECK(g.total_edge_weight() == Weight::zero());
  CHECK(g.min_positive_edge_weight().is_infinite());
  g.add_edge(0, 1, Weight::zero());
  CHECK(g.min_positive_edge_weight().is_infinite());  // zero is not positive
  g.add_edge(1, 2, Weight::from_milli(300));
  g.add_edge(2, 3, Weight::from_milli(70));
  CHECK(g.total_edge_weight() == Weight::from_milli(370));
  CHECK(g.min_positive_edge_weight() == Weight::from_milli(70));
}

TEST_CASE("walks validate structure against the graph") {
  Graph g(4);
  g.add_edge(0, 1, Weight::from_milli(100));
  g.add_edge(1, 2, Weight::from_milli(200));
  g.add_edge(2, 3, Weight::from_milli(300));
  g.add_edge(3, 0, Weight::from_milli(400));

  const WalkRef walk(g, {0, 1, 2, 3, 0, 1});
  CHECK(walk.size() == 6);
  CHECK(!walk.is_path());  // revisits 0 and 1
  const WalkRef path(g, {0, 1, 2});
  CHECK(path.is_path());
  const WalkRef single(g, {2});
  CHECK(single.is_path());
  CHECK(single.length_between(0, 0) == Weight::zero());

  CHECK_THROWS_AS(WalkRef(g, {}), std::invalid_argument);
  CHECK_THROWS_AS(WalkRef(g, {0, 2}), std::invalid_argument);  // not an edge
  CHECK_THROWS_AS(WalkRef(g, {0, 4}), std::invalid_argument);  // bad id
}

TEST_CASE("walk lengths come from prefix sums") {
  Graph g(4);
  g.add_edge(0, 1, Weight::from_milli(100));
  g.add_edge(1, 2, Weight::from_milli(200));
  g.add_edge(2, 3, Weight::from_milli(300));
  const WalkRef w(g, {0, 1, 2, 3, 2});
  CHECK(w.length_between(0, 3) == Weight::from_milli(600));
  CHECK(w.length_between(1, 2) == Weight::from_milli(200));
  CHECK(w.length_between(2, 2) == Weight::zero());
  CHECK(w.length_between(3, 4) == Weight::from_milli(300));
  CHECK(gfd::walk_length(g, w, 0, 4) == Weight::from_milli(900));

  Graph other(2);
  other.add_edge(0, 1, Weight::from_milli(1));
  CHECK_THROWS_AS(gfd::walk_length(other, w, 0, 1), std::invalid_argument);
}

TEST_CASE("graph and walk files round-trip") {
  Graph g(3);
  g.add_edge(0, 1, Weight::from_milli(1500));
  g.add_edge(1, 2, Weight::from_milli(1));
  g.set_label(0, "start");

  std::ostringstream gout;
  gfd::write_graph(gout, g);
  std::istringstream gin(gout.str());
  const Graph back = gfd::read_graph(gin);
  CHECK(back.vertex_count() == 3);
  CHECK(back.edge_weight(0, 1) == Weight::from_milli(1500));
  CHECK(back.edge_weight(1, 2) == Weight::from_milli(1));
  CHECK(back.label(0) == "start");

  const WalkRef w(g, {0, 1, 2, 1});
  std::ostringstream wout;
  gfd::write_walk(wout, w);
  std::istringstream win(wout.str());
  const WalkRef wback = gfd::read_walk(win, back);
  CHECK(wback.vertices() == std::vector<gfd::VertexId>{0, 1, 2, 1});
}

TEST_CASE("parse errors carry line numbers") {
  std::istringstream bad("graph 3\nedge 0 1 0.5\nedge 0 9 1\n");
  try {
    gfd::read_graph(bad);
    FAIL("expected a parse error");
  } catch (const std::runtime_error& e) {
    CHECK(std::string(e.what()).find("line 3") != std::string::npos);
  }
}

TEST_CASE("dot export mentions every labeled vertex") {
  Graph g(2);
  g.add_edge(0, 1, Weight::from_milli(2000));
  g.set_label(1, "goal");
  std::ostringstream out;
  gfd::write_dot(out, g);
  const std::string dot = out.str();
  CHECK(dot.find("graph") != std::string::npos);
  CHECK(dot.find("goal") != std::string::npos);
  CHECK(dot.find("--") != std::string::npos);
}
