// io.cpp — parsing and serialization of the graph/walk text formats.
#include "gfd/io.hpp"

#include <fstream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace gfd {

namespace {

[[noreturn]] void parse_error(std::size_t line_no, const std::string& reason) {
  throw std::runtime_error("parse error on line " + std::to_string(line_no) +
                           ": " + reason);
}

/** Strips a trailing '#' comment and surrounding whitespace. */
std::string strip(const std::string& line) {
  std::string out = line;
  if (std::size_t hash = out.find('#'); hash != std::string::npos) {
    out.erase(hash);
  }
  std::size_t begin = out.find_first_not_of(" \t\r");
  if (begin == std::string::npos) return "";
  std::size_t end = out.find_last_not_of(" \t\r");
  return out.substr(begin, end - begin + 1);
}

std::vector<std::string> tokens(const std::string& line) {
  std::istringstream ss(line);
  std::vector<std::string> out;
  std::string tok;
  while (ss >> tok) out.push_back(tok);
  return out;
}

VertexId parse_vertex(const std::string& tok, std::size_t line_no) {
  try {
    std::size_t used = 0;
    long long v = std::stoll(tok, &used);
    if (used != tok.size() || v < 0 || v > INT32_MAX) throw std::exception();
    return static_cast<VertexId>(v);
  } catch (...) {
    parse_error(line_no, "expected a vertex id, got '" + tok + "'");
  }
}

std::ofstream open_out(const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open '" + path + "' for writing");
  return out;
}

std::ifstream open_in(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open '" + path + "' for reading");
  return in;
}

}  // namespace

Graph read_graph(std::istream& in) {
  std::optional<Graph> g;
  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    std::string line = strip(raw);
    if (line.empty()) continue;
    std::vector<std::string> tok = tokens(line);
    if (tok[0] == "graph") {
      if (g) parse_error(line_no, "duplicate 'graph' header");
      if (tok.size() != 2) parse_error(line_no, "expected 'graph <N>'");
      VertexId n = parse_vertex(tok[1], line_no);
      if (n == 0) parse_error(line_no, "graph needs at least one vertex");
      g.emplace(n);
    } else if (tok[0] == "edge") {
      if (!g) parse_error(line_no, "'edge' before 'graph' header");
      if (tok.size() != 4) parse_error(line_no, "expected 'edge <u> <v> <w>'");
      VertexId u = parse_vertex(tok[1], line_no);
      VertexId v = parse_vertex(tok[2], line_no);
      try {
        g->add_edge(u, v, Weight::parse(tok[3]));
      } catch (const std::invalid_argument& e) {
        parse_error(line_no, e.what());
      }
    } else if (tok[0] == "label") {
      if (!g) parse_error(line_no, "'label' before 'graph' header");
      if (tok.size() != 3) parse_error(line_no, "expected 'label <v> <string>'");
      VertexId v = parse_vertex(tok[1], line_no);
      try {
        g->set_label(v, tok[2]);
      } catch (const std::invalid_argument& e) {
        parse_error(line_no, e.what());
      }
    } else {
      parse_error(line_no, "unknown directive '" + tok[0] + "'");
    }
  }
  if (!g) throw std::runtime_error("parse error: missing 'graph' header");
  return std::move(*g);
}

Graph read_graph_file(const std::string& path) {
  std::ifstream in = open_in(path);
  return read_graph(in);
}

void write_graph(std::ostream& out, const Graph& g) {
  out << "graph " << g.vertex_count() << "\n";
  for (VertexId u = 0; u < g.vertex_count(); ++u) {
    for (const Edge& e : g.neighbors(u)) {
      if (u < e.to) {
        out << "edge " << u << " " << e.to << " " << e.weight.str() << "\n";
      }
    }
  }
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    if (!g.label(v).empty()) {
      out << "label " << v << " " << g.label(v) << "\n";
    }
  }
}

void write_graph_file(const std::string& path, const Graph& g) {
  std::ofstream out = open_out(path);
  write_graph(out, g);
}

WalkRef read_walk(std::istream& in, const Graph& g) {
  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    std::string line = strip(raw);
    if (line.empty()) continue;
    std::vector<std::string> tok = tokens(line);
    if (tok[0] != "walk") {
      parse_error(line_no, "expected 'walk <v0> <v1> ...'");
    }
    if (tok.size() < 2) parse_error(line_no, "walk must be non-empty");
    std::vector<VertexId> vertices;
    vertices.reserve(tok.size() - 1);
    for (std::size_t i = 1; i < tok.size(); ++i) {
      vertices.push_back(parse_vertex(tok[i], line_no));
    }
    try {
      return WalkRef(g, std::move(vertices));
    } catch (const std::invalid_argument& e) {
      parse_error(line_no, e.what());
    }
  }
  throw std::runtime_error("parse error: missing 'walk' line");
}

WalkRef read_walk_file(const std::string& path, const Graph& g) {
  std::ifstream in = open_in(path);
  return read_walk(in, g);
}

void write_walk(std::ostream& out, const WalkRef& w) {
  out << "walk";
  for (VertexId v : w.vertices()) out << " " << v;
  out << "\n";
}

void write_walk_file(const std::string& path, const WalkRef& w) {
  std::ofstream out = open_out(path);
  write_walk(out, w);
}

void write_dot(std::ostream& out, const Graph& g) {
  out << "graph G {\n";
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    out << "  n" << v << " [label=\"" << v;
    if (!g.label(v).empty()) out << ":" << g.label(v);
    out << "\"];\n";
  }
  for (VertexId u = 0; u < g.vertex_count(); ++u) {
    for (const Edge& e : g.neighbors(u)) {
      if (u < e.to) {
        out << "  n" << u << " -- n" << e.to << " [label=\""
            << e.weight.str() << "\"];\n";
      }
    }
  }
  out << "}\n";
}

}  // namespace gfd
