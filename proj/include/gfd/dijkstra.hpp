// dijkstra.hpp — single-source shortest paths.
#pragma once

#include <vector>

#include "gfd/graph.hpp"

namespace gfd {

/**
 * Exact single-source shortest-path distances from `source` to every vertex
 * (binary-heap Dijkstra, O((|E|+|V|) log |V|)). Unreachable vertices get
 * Weight::infinity(). Throws std::invalid_argument on an invalid source.
 */
std::vector<Weight> dijkstra_sssp(const Graph& g, VertexId source);

/**
 * As dijkstra_sssp, additionally filling `parent` with the predecessor of
 * each vertex on some shortest path from the source (-1 for the source and
 * for unreachable vertices). Used to extract shortest paths, which are the
 * canonical 1-straight inputs.
 */
std::vector<Weight> dijkstra_sssp_with_parents(const Graph& g, VertexId source,
                                               std::vector<VertexId>& parent);

/** Vertex sequence of a shortest path from `source` to `target`; empty when
 *  unreachable. */
std::vector<VertexId> shortest_path(const Graph& g, VertexId source,
                                    VertexId target);

}  // namespace gfd
