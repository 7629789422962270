// voronoi.hpp — nearest-site partition of a graph via multi-source Dijkstra.
#pragma once

#include <vector>

#include "gfd/graph.hpp"

namespace gfd {

/**
 * For a set of site vertices, assigns every graph vertex its nearest site
 * and the exact distance to it. Vertices unreachable from every site get
 * site_of = -1 and dist_to_site = infinity.
 */
struct VoronoiDiagram {
  std::vector<VertexId> site_of;
  std::vector<Weight> dist_to_site;
};

/**
 * Builds the diagram with one multi-source Dijkstra pass,
 * O((|E|+|V|) log |V|). When two sites are equidistant from a vertex the
 * smaller site id wins (deterministic heap tie-break by
 * (distance, vertex id, site id)). Throws std::invalid_argument on an empty
 * site set or invalid ids. Duplicate sites are tolerated.
 */
VoronoiDiagram voronoi(const Graph& g, const std::vector<VertexId>& sites);

}  // namespace gfd
