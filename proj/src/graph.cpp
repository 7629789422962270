// graph.cpp — graph construction, validation, and walk bookkeeping.
#include "gfd/graph.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_set>

namespace gfd {

Graph::Graph(std::int32_t vertex_count) {
  if (vertex_count < 0) {
    throw std::invalid_argument("graph cannot have a negative vertex count");
  }
  adjacency_.resize(static_cast<std::size_t>(vertex_count));
  labels_.resize(static_cast<std::size_t>(vertex_count));
}

void Graph::check_vertex(VertexId v) const {
  if (v < 0 || v >= vertex_count()) {
    throw std::invalid_argument("invalid vertex id " + std::to_string(v) +
                                " (graph has " + std::to_string(vertex_count()) +
                                " vertices)");
  }
}

void Graph::add_edge(VertexId u, VertexId v, Weight weight) {
  check_vertex(u);
  check_vertex(v);
  if (u == v) {
    throw std::invalid_argument("self-loop on vertex " + std::to_string(u));
  }
  if (weight.is_infinite()) {
    throw std::invalid_argument("edge weight must be finite");
  }
  for (const Edge& e : adjacency_[static_cast<std::size_t>(u)]) {
    if (e.to == v) {
      throw std::invalid_argument("duplicate edge " + std::to_string(u) + "-" +
                                  std::to_string(v));
    }
  }
  adjacency_[static_cast<std::size_t>(u)].push_back({v, weight});
  adjacency_[static_cast<std::size_t>(v)].push_back({u, weight});
  ++edge_count_;
  total_weight_ += weight;
  if (!weight.is_zero()) {
    min_positive_weight_ = min(min_positive_weight_, weight);
  }
}

const std::vector<Edge>& Graph::neighbors(VertexId v) const {
  check_vertex(v);
  return adjacency_[static_cast<std::size_t>(v)];
}

Weight Graph::edge_weight(VertexId u, VertexId v) const {
  check_vertex(u);
  check_vertex(v);
  for (const Edge& e : adjacency_[static_cast<std::size_t>(u)]) {
    if (e.to == v) return e.weight;
  }
  return Weight::infinity();
}

void Graph::set_label(VertexId v, std::string label) {
  check_vertex(v);
  labels_[static_cast<std::size_t>(v)] = std::move(label);
}

const std::string& Graph::label(VertexId v) const {
  check_vertex(v);
  return labels_[static_cast<std::size_t>(v)];
}

std::vector<VertexId> Graph::vertices_with_label(std::string_view label) const {
  std::vector<VertexId> out;
  for (VertexId v = 0; v < vertex_count(); ++v) {
    if (labels_[static_cast<std::size_t>(v)] == label) out.push_back(v);
  }
  return out;
}

WalkRef::WalkRef(const Graph& graph, std::vector<VertexId> vertices)
    : graph_(&graph), vertices_(std::move(vertices)) {
  if (vertices_.empty()) {
    throw std::invalid_argument("walk must be non-empty");
  }
  prefix_.reserve(vertices_.size());
  prefix_.push_back(Weight::zero());
  graph.check_vertex(vertices_.front());
  for (std::size_t i = 1; i < vertices_.size(); ++i) {
    graph.check_vertex(vertices_[i]);
    Weight w = graph.edge_weight(vertices_[i - 1], vertices_[i]);
    if (w.is_infinite()) {
      throw std::invalid_argument(
          "walk step " + std::to_string(i - 1) + "→" + std::to_string(i) +
          " uses the non-edge " + std::to_string(vertices_[i - 1]) + "-" +
          std::to_string(vertices_[i]));
    }
    prefix_.push_back(prefix_.back() + w);
  }
  std::unordered_set<VertexId> seen(vertices_.begin(), vertices_.end());
  is_path_ = seen.size() == vertices_.size();
}

Weight WalkRef::length_between(std::size_t from_idx, std::size_t to_idx) const {
  if (from_idx > to_idx || to_idx >= vertices_.size()) {
    throw std::out_of_range("walk_length indices out of range: " +
                            std::to_string(from_idx) + ".." +
                            std::to_string(to_idx) + " on walk of size " +
                            std::to_string(vertices_.size()));
  }
  return prefix_[to_idx] - prefix_[from_idx];
}

Weight walk_length(const Graph& g, const WalkRef& w, std::size_t from_idx,
                   std::size_t to_idx) {
  if (&g != &w.graph()) {
    throw std::invalid_argument("walk does not belong to this graph");
  }
  return w.length_between(from_idx, to_idx);
}

}  // namespace gfd
