// graph.hpp — undirected weighted graph and validated vertex walks.
#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "gfd/weight.hpp"

namespace gfd {

using VertexId = std::int32_t;

struct Edge {
  VertexId to;
  Weight weight;
};

/**
 * An undirected weighted graph with dense vertex ids [0, N), at most one
 * edge per unordered pair, no self-loops, and optional per-vertex string
 * labels. Immutable once populated; safe for concurrent reads.
 */
class Graph {
 public:
  explicit Graph(std::int32_t vertex_count);

  /**
   * Adds the undirected edge {u, v} with the given weight.
   * Throws std::invalid_argument on invalid ids, self-loops, or duplicates.
   */
  void add_edge(VertexId u, VertexId v, Weight weight);

  std::int32_t vertex_count() const { return static_cast<std::int32_t>(adjacency_.size()); }
  std::size_t edge_count() const { return edge_count_; }
  const std::vector<Edge>& neighbors(VertexId v) const;

  /** Weight of edge {u, v}, or infinity when the edge is absent. */
  Weight edge_weight(VertexId u, VertexId v) const;
  bool has_edge(VertexId u, VertexId v) const {
    return !edge_weight(u, v).is_infinite();
  }

  void set_label(VertexId v, std::string label);
  /** The vertex's label, or an empty string when unlabeled. */
  const std::string& label(VertexId v) const;
  std::vector<VertexId> vertices_with_label(std::string_view label) const;

  /** Sum of all edge weights — a finite upper bound on any distance. */
  Weight total_edge_weight() const { return total_weight_; }
  /** Smallest positive edge weight, or infinity if none exists. */
  Weight min_positive_edge_weight() const { return min_positive_weight_; }

  void check_vertex(VertexId v) const;

 private:
  std::vector<std::vector<Edge>> adjacency_;
  std::vector<std::string> labels_;
  std::size_t edge_count_ = 0;
  Weight total_weight_ = Weight::zero();
  Weight min_positive_weight_ = Weight::infinity();
};

/**
 * An ordered, non-empty vertex sequence validated against a graph: every
 * consecutive pair must be an edge. Stores prefix path lengths so that
 * walk_length queries are O(1).
 */
class WalkRef {
 public:
  /** Validates and wraps the sequence. Throws std::invalid_argument if the
   *  sequence is empty, contains invalid ids, or skips a non-edge. */
  WalkRef(const Graph& graph, std::vector<VertexId> vertices);

  const Graph& graph() const { return *graph_; }
  std::size_t size() const { return vertices_.size(); }
  VertexId operator[](std::size_t idx) const { return vertices_[idx]; }
  const std::vector<VertexId>& vertices() const { return vertices_; }

  /** True when no vertex repeats (the sequence is a simple path). */
  bool is_path() const { return is_path_; }

  /** Sum of edge weights between two walk indices (0-based, from <= to). */
  Weight length_between(std::size_t from_idx, std::size_t to_idx) const;

 private:
  const Graph* graph_;
  std::vector<VertexId> vertices_;
  std::vector<Weight> prefix_;  // prefix_[i] = length of walk[0..i]
  bool is_path_ = false;
};

/** Free-function form of WalkRef::length_between, validating the graph. */
Weight walk_length(const Graph& g, const WalkRef& w, std::size_t from_idx,
                   std::size_t to_idx);

}  // namespace gfd
