// dijkstra.cpp — binary-heap Dijkstra with optional parent extraction.
#include "gfd/dijkstra.hpp"

#include <algorithm>
#include <queue>
#include <utility>

namespace gfd {

namespace {

using HeapEntry = std::pair<std::int64_t, VertexId>;  // (dist milli, vertex)

std::vector<Weight> run_dijkstra(const Graph& g, VertexId source,
                                 std::vector<VertexId>* parent) {
  g.check_vertex(source);
  std::vector<Weight> dist(static_cast<std::size_t>(g.vertex_count()),
                           Weight::infinity());
  if (parent) {
    parent->assign(static_cast<std::size_t>(g.vertex_count()), -1);
  }
  std::priority_queue<HeapEntry, std::vector<HeapEntry>, std::greater<>> heap;
  dist[static_cast<std::size_t>(source)] = Weight::zero();
  heap.emplace(0, source);
  while (!heap.empty()) {
    auto [d_milli, u] = heap.top();
    heap.pop();
    if (Weight::from_milli(d_milli) > dist[static_cast<std::size_t>(u)]) {
      continue;  // stale entry
    }
    for (const Edge& e : g.neighbors(u)) {
      Weight nd = dist[static_cast<std::size_t>(u)] + e.weight;
      if (nd < dist[static_cast<std::size_t>(e.to)]) {
        dist[static_cast<std::size_t>(e.to)] = nd;
        if (parent) (*parent)[static_cast<std::size_t>(e.to)] = u;
        heap.emplace(nd.milli(), e.to);
      }
    }
  }
  return dist;
}

}  // namespace

std::vector<Weight> dijkstra_sssp(const Graph& g, VertexId source) {
  return run_dijkstra(g, source, nullptr);
}

std::vector<Weight> dijkstra_sssp_with_parents(const Graph& g, VertexId source,
                                               std::vector<VertexId>& parent) {
  return run_dijkstra(g, source, &parent);
}

std::vector<VertexId> shortest_path(const Graph& g, VertexId source,
                                    VertexId target) {
  g.check_vertex(target);
  std::vector<VertexId> parent;
  std::vector<Weight> dist = dijkstra_sssp_with_parents(g, source, parent);
  if (dist[static_cast<std::size_t>(target)].is_infinite()) return {};
  std::vector<VertexId> path;
  for (VertexId v = target; v != -1; v = parent[static_cast<std::size_t>(v)]) {
    path.push_back(v);
  }
  std::reverse(path.begin(), path.end());
  return path;
}

}  // namespace gfd
