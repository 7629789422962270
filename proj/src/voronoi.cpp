// voronoi.cpp — multi-source Dijkstra with deterministic site tie-breaking.
#include "gfd/voronoi.hpp"

#include <queue>
#include <stdexcept>
#include <tuple>

namespace gfd {

VoronoiDiagram voronoi(const Graph& g, const std::vector<VertexId>& sites) {
  if (sites.empty()) {
    throw std::invalid_argument("voronoi requires a non-empty site set");
  }
  const std::size_t n = static_cast<std::size_t>(g.vertex_count());
  VoronoiDiagram vd;
  vd.site_of.assign(n, -1);
  vd.dist_to_site.assign(n, Weight::infinity());

  // (distance, vertex, site): the lexicographic pop order makes the smaller
  // site id win equidistant contests, deterministically.
  using HeapEntry = std::tuple<std::int64_t, VertexId, VertexId>;
  std::priority_queue<HeapEntry, std::vector<HeapEntry>, std::greater<>> heap;

  auto improves = [&](Weight nd, VertexId site, VertexId v) {
    std::size_t vi = static_cast<std::size_t>(v);
    return nd < vd.dist_to_site[vi] ||
           (nd == vd.dist_to_site[vi] && site < vd.site_of[vi]);
  };

  for (VertexId s : sites) {
    g.check_vertex(s);
    if (improves(Weight::zero(), s, s)) {
      vd.dist_to_site[static_cast<std::size_t>(s)] = Weight::zero();
      vd.site_of[static_cast<std::size_t>(s)] = s;
      heap.emplace(0, s, s);
    }
  }

  while (!heap.empty()) {
    auto [d_milli, u, site] = heap.top();
    heap.pop();
    std::size_t ui = static_cast<std::size_t>(u);
    if (Weight::from_milli(d_milli) != vd.dist_to_site[ui] ||
        site != vd.site_of[ui]) {
      continue;  // stale entry
    }
    for (const Edge& e : g.neighbors(u)) {
      Weight nd = vd.dist_to_site[ui] + e.weight;
      if (improves(nd, site, e.to)) {
        vd.dist_to_site[static_cast<std::size_t>(e.to)] = nd;
        vd.site_of[static_cast<std::size_t>(e.to)] = site;
        heap.emplace(nd.milli(), e.to, site);
      }
    }
  }
  return vd;
}

}  // namespace gfd
