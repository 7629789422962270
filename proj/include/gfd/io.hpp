// io.hpp — line-oriented text formats for graphs and walks.
#pragma once

#include <iosfwd>
#include <string>

#include "gfd/graph.hpp"

namespace gfd {

/**
 * Graph file format (one directive per line, '#' comments allowed):
 *   graph <N>
 *   edge <u> <v> <weight-decimal>      (weight: at most 3 fraction digits)
 *   label <v> <string>
 *
 * Walk file format:
 *   walk <v0> <v1> ...
 *
 * Parse errors throw std::runtime_error carrying the line number and reason.
 */
Graph read_graph(std::istream& in);
Graph read_graph_file(const std::string& path);
void write_graph(std::ostream& out, const Graph& g);
void write_graph_file(const std::string& path, const Graph& g);

WalkRef read_walk(std::istream& in, const Graph& g);
WalkRef read_walk_file(const std::string& path, const Graph& g);
void write_walk(std::ostream& out, const WalkRef& w);
void write_walk_file(const std::string& path, const WalkRef& w);

/** Graphviz rendering of a graph (labels shown when present). */
void write_dot(std::ostream& out, const Graph& g);

}  // namespace gfd
