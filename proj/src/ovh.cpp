#include "gfd/ovh.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <istream>
#include <map>
#include <stdexcept>
#include <string>
#include <tuple>
#include <utility>

#include "gfd/dijkstra.hpp"

namespace gfd {
namespace {

// Accumulates vertices by name so gadgets can be described symbolically,
// then materializes a Graph with ids in first-mention order (deterministic
// output for identical inputs).
class NamedGraphBuilder {
 public:
  void label(const std::string& name, const std::string& label) {
    labels_[id_of(name)] = label;
  }

  void edge(const std::string& u, const std::string& v, std::int64_t milli) {
    edges_.push_back({id_of(u), id_of(v), milli});
  }

  VertexId id_of(const std::string& name) {
    auto [it, inserted] = ids_.try_emplace(name, static_cast<VertexId>(names_.size()));
    if (inserted) {
      names_.push_back(name);
      labels_.emplace_back();
    }
    return it->second;
  }

  Graph build() const {
    Graph g(static_cast<VertexId>(names_.size()));
    for (VertexId v = 0; v < static_cast<VertexId>(names_.size()); ++v) {
      if (!labels_[v].empty()) g.set_label(v, labels_[v]);
    }
    for (const auto& e : edges_) {
      g.add_edge(e.u, e.v, Weight::from_milli(e.milli));
    }
    return g;
  }

 private:
  struct PendingEdge {
    VertexId u;
    VertexId v;
    std::int64_t milli;
  };
  std::map<std::string, VertexId> ids_;
  std::vector<std::string> names_;
  std::vector<std::string> labels_;
  std::vector<PendingEdge> edges_;
};

std::string idx(const std::string& stem, std::size_t k) {
  return stem + "_" + std::to_string(k);
}

std::string idx2(const std::string& stem, std::size_t k, std::size_t i) {
  return stem + "_" + std::to_string(k) + "_" + std::to_string(i);
}

void require_nonempty(const OvVectors& v) {
  if (v.a.empty() || v.b.empty()) {
    throw std::invalid_argument("vector sets must both be non-empty");
  }
  const std::size_t d = v.a.front().size();
  if (d == 0) throw std::invalid_argument("vectors must have dimension >= 1");
  for (const auto& vec : v.a) {
    if (vec.size() != d) throw std::invalid_argument("all vectors must share one dimension");
  }
  for (const auto& vec : v.b) {
    if (vec.size() != d) throw std::invalid_argument("all vectors must share one dimension");
  }
}

// Checks the built graph against the pinned label table: near/far side and
// min/max uniformity must match exactly; value-only differences are
// recorded. `strict_less` selects "< threshold" (paths) vs "<=" (walks).
void validate_against_reference(OvInstance& inst,
                                const std::array<std::array<std::int64_t, 8>, 6>& ref,
                                bool strict_less) {
  const LabelDistanceTable table = label_distance_table(inst);
  const Weight thresh = inst.threshold;
  const auto is_near = [&](Weight w) {
    return strict_less ? w < thresh : w <= thresh;
  };
  Weight close_max = Weight::zero();
  for (std::size_t r = 0; r < kBlueLabels.size(); ++r) {
    for (std::size_t c = 0; c < kRedLabels.size(); ++c) {
      const Weight lo = table.min_dist[r][c];
      const Weight hi = table.max_dist[r][c];
      const Weight printed = Weight::from_milli(ref[r][c]);
      const std::string where =
          std::string(kBlueLabels[r]) + "/" + kRedLabels[c];
      if (lo.is_infinite() || hi.is_infinite()) {
        throw std::logic_error("label pair " + where + " is disconnected");
      }
      if (is_near(lo) != is_near(hi)) {
        throw std::logic_error("label pair " + where +
                               " straddles the threshold: min " + lo.str() +
                               ", max " + hi.str());
      }
      if (is_near(lo) != is_near(printed)) {
        throw std::logic_error("label pair " + where +
                               " classifies differently from the reference: built " +
                               lo.str() + ", reference " + printed.str());
      }
      if (lo != printed) {
        inst.table_deviations.push_back({kBlueLabels[r], kRedLabels[c], lo, printed});
      }
      if (is_near(hi)) close_max = std::max(close_max, hi);
    }
  }
  if (strict_less && close_max > Weight::from_milli(2960)) {
    throw std::logic_error("near-side label distances exceed 2.96: max " +
                           close_max.str());
  }
}

}  // namespace

OvVectors OvVectors::parse(std::istream& in) {
  OvVectors out;
  std::vector<std::vector<int>>* current = &out.a;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::string trimmed;
    for (char ch : line) {
      if (!std::isspace(static_cast<unsigned char>(ch))) trimmed += ch;
    }
    if (!trimmed.empty() && trimmed.front() == '#') continue;
    if (trimmed.empty()) {
      if (current == &out.a && !out.a.empty()) current = &out.b;
      continue;
    }
    std::vector<int> vec;
    vec.reserve(trimmed.size());
    for (char ch : trimmed) {
      if (ch != '0' && ch != '1') {
        throw std::runtime_error("parse error on line " + std::to_string(line_no) +
                                 ": expected a 0/1 string, got '" + trimmed + "'");
      }
      vec.push_back(ch - '0');
    }
    current->push_back(std::move(vec));
  }
  if (out.a.empty() || out.b.empty()) {
    throw std::runtime_error(
        "expected two blocks of 0/1 lines separated by a blank line");
  }
  require_nonempty(out);
  return out;
}

OvVectors OvVectors::parse_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  return parse(in);
}

bool has_orthogonal_pair(const OvVectors& v) {
  for (const auto& a : v.a) {
    for (const auto& b : v.b) {
      bool orthogonal = true;
      for (std::size_t i = 0; i < a.size() && orthogonal; ++i) {
        if (a[i] != 0 && b[i] != 0) orthogonal = false;
      }
      if (orthogonal) return true;
    }
  }
  return false;
}

OvInstance gen_paths_instance(const OvVectors& v) {
  require_nonempty(v);
  const std::size_t np = v.a.size();   // red gadgets, one per vector in A
  const std::size_t mp = v.b.size();   // blue gadgets, one per vector in B
  const std::size_t d = v.a.front().size();

  NamedGraphBuilder b;
  b.label("al", "alpha");
  b.label("als", "alpha_star");
  b.label("be", "beta");
  b.label("bes", "beta_star");
  b.edge("al", "als", 2000);
  b.edge("bes", "be", 2000);
  b.edge("T", "S", 2000);
  b.edge("be", "T", 2000);
  b.edge("al", "S", 2000);

  // Blue gadgets: one per vector in B, chained x_0 .. z_{mp-1}.
  for (std::size_t k = 0; k < mp; ++k) {
    const std::string x = idx("x", k);
    const std::string y = idx("y", k);
    const std::string z = idx("z", k);
    const std::string su = idx("su", k);
    const std::string sd = idx("sd", k);
    b.label(x, "x");
    b.label(y, "y");
    b.label(z, "z");
    b.edge(x, y, 3000);
    std::string prev_bm;
    for (std::size_t i = 0; i < d; ++i) {
      const std::string b0 = idx2("B0", k, i);
      const std::string b1 = idx2("B1", k, i);
      const std::string bm = idx2("Bm", k, i);
      b.label(b0, "B0");
      b.label(b1, "B1");
      b.label(bm, "B");
      b.edge(b0, b1, 650);
      b.edge(b0, bm, 1000);
      b.edge(b1, bm, 350);
      if (i == 0) {
        b.edge(y, b0, 1000);
        b.edge(y, b1, 350);
      } else {
        b.edge(prev_bm, b0, 1000);
        b.edge(prev_bm, b1, 1000);
      }
      b.edge(su, bm, 350);
      b.edge(sd, b0, 650);
      prev_bm = bm;
    }
    b.edge(prev_bm, z, 3000);
    b.edge(su, x, 350);
    b.edge(su, y, 600);
    b.edge(sd, x, 650);
    b.edge(sd, z, 1000);
    b.edge("T", su, 1);
    b.edge("c", sd, 1000);
    b.edge("c", z, 1);
    b.edge("al", x, 650);
    b.edge("be", z, 650);
    if (k + 1 < mp) b.edge(z, idx("x", k + 1), 2000);
  }

  // Red gadgets: one per vector in A, chained ga_0 .. Am_{np-1,d-1}.
  for (std::size_t k = 0; k < np; ++k) {
    const std::string ga = idx("ga", k);
    const std::string tu = idx("tu", k);
    const std::string td = idx("td", k);
    b.label(ga, "gamma");
    std::string prev_am;
    for (std::size_t i = 0; i < d; ++i) {
      const std::string a0 = idx2("A0", k, i);
      const std::string a1 = idx2("A1", k, i);
      const std::string am = idx2("Am", k, i);
      b.label(a0, "A0");
      b.label(a1, "A1");
      b.label(am, "A");
      b.edge(a0, a1, 650);
      b.edge(a0, am, 1000);
      b.edge(a1, am, 350);
      if (i == 0) {
        b.edge(ga, a0, 1000);
        b.edge(ga, a1, 350);
      } else {
        b.edge(prev_am, a0, 1000);
        b.edge(prev_am, a1, 1000);
      }
      b.edge(tu, a0, 650);
      b.edge(td, am, 600);
      prev_am = am;
    }
    b.edge(td, ga, 350);
    b.edge("S", td, 1);
    b.edge("c", tu, 1);
    if (k + 1 < np) b.edge(prev_am, idx("ga", k + 1), 2000);
  }

  b.edge("als", idx("ga", 0), 3000);
  b.edge(idx2("Am", np - 1, d - 1), "bes", 3000);

  OvInstance inst;
  inst.variant = OvVariant::kPaths;
  inst.threshold = Weight::from_milli(3000);
  inst.ground_truth_orthogonal = has_orthogonal_pair(v);

  std::vector<std::string> pn = {"al", "als"};
  for (std::size_t k = 0; k < np; ++k) {
    pn.push_back(idx("ga", k));
    for (std::size_t i = 0; i < d; ++i) {
      pn.push_back(idx2(v.a[k][i] ? "A1" : "A0", k, i));
      pn.push_back(idx2("Am", k, i));
    }
  }
  pn.push_back("bes");
  pn.push_back("be");

  std::vector<std::string> qn;
  for (std::size_t k = 0; k < mp; ++k) {
    qn.push_back(idx("x", k));
    qn.push_back(idx("y", k));
    for (std::size_t i = 0; i < d; ++i) {
      qn.push_back(idx2(v.b[k][i] ? "B1" : "B0", k, i));
      qn.push_back(idx2("Bm", k, i));
    }
    qn.push_back(idx("z", k));
  }

  for (const auto& name : pn) inst.p.push_back(b.id_of(name));
  for (const auto& name : qn) inst.q.push_back(b.id_of(name));
  inst.graph = b.build();

  validate_against_reference(inst, paths_reference_table(), /*strict_less=*/true);
  return inst;
}

OvInstance gen_walks_instance(const OvVectors& v) {
  require_nonempty(v);
  OvVectors padded = v;
  if (padded.dimension() % 2 != 0) {
    for (auto& vec : padded.a) vec.push_back(0);
    for (auto& vec : padded.b) vec.push_back(0);
  }
  const std::size_t d = padded.dimension();

  NamedGraphBuilder b;
  for (const char* name : {"x", "y", "z", "B0", "B1", "B", "al", "als", "be",
                           "bes", "ga", "A0", "A1", "A"}) {
    std::string label = name;
    if (label == "al") label = "alpha";
    else if (label == "als") label = "alpha_star";
    else if (label == "be") label = "beta";
    else if (label == "bes") label = "beta_star";
    else if (label == "ga") label = "gamma";
    b.label(name, label);
  }

  const std::vector<std::tuple<const char*, const char*, std::int64_t>> edges = {
      {"x", "y", 1800},    {"y", "B0", 1200},  {"y", "B1", 1200},
      {"B0", "B", 1200},   {"B1", "B", 400},   {"B", "z", 1800},
      {"z", "s", 900},     {"s", "x", 900},    {"al", "als", 1800},
      {"als", "ga", 1800}, {"ga", "A0", 1200}, {"ga", "A1", 400},
      {"A0", "A", 1200},   {"A1", "A", 400},   {"A", "bes", 1800},
      {"bes", "be", 1800}, {"A", "sink", 900}, {"al", "ga", 100},
      {"y", "ga", 1800},   {"s", "al", 900},   {"s", "be", 900},
      {"x", "al", 1800},   {"x", "als", 1800}, {"x", "be", 1800},
      {"z", "al", 1800},   {"z", "be", 1800},  {"z", "bes", 1800},
      {"y", "al", 1900},   {"y", "be", 1900},  {"y", "A1", 2000},
      {"y", "A", 2000},    {"B0", "al", 1900}, {"B0", "be", 1900},
      {"B0", "A0", 800},   {"B0", "A1", 1600}, {"B1", "al", 1900},
      {"B1", "be", 1900},  {"B1", "A0", 1600}, {"B1", "A1", 2000},
      {"B1", "A", 2000},   {"B", "al", 1900},  {"B", "be", 1900},
      {"B", "A", 1800},    {"B", "A1", 2000},  {"x", "A0", 1900},
      {"x", "A1", 1900},   {"x", "A", 1900},   {"z", "A0", 1900},
      {"z", "A1", 1900},   {"z", "A", 1900}};
  for (const auto& [u, w, milli] : edges) b.edge(u, w, milli);

  OvInstance inst;
  inst.variant = OvVariant::kWalks;
  inst.threshold = Weight::from_milli(1900);
  inst.ground_truth_orthogonal = has_orthogonal_pair(padded);

  std::vector<std::string> pn = {"al", "als"};
  for (std::size_t k = 0; k < padded.a.size(); ++k) {
    if (k > 0) pn.push_back("A0");
    pn.push_back("ga");
    for (std::size_t i = 0; i < d; ++i) {
      pn.push_back(padded.a[k][i] ? "A1" : "A0");
      pn.push_back("A");
    }
  }
  pn.push_back("bes");
  pn.push_back("be");

  std::vector<std::string> qn;
  for (std::size_t k = 0; k < padded.b.size(); ++k) {
    if (k > 0) qn.push_back("s");
    qn.push_back("x");
    qn.push_back("y");
    for (std::size_t i = 0; i < d; ++i) {
      qn.push_back(padded.b[k][i] ? "B1" : "B0");
      qn.push_back("B");
    }
    qn.push_back("z");
  }

  for (const auto& name : pn) inst.p.push_back(b.id_of(name));
  for (const auto& name : qn) inst.q.push_back(b.id_of(name));
  inst.graph = b.build();

  validate_against_reference(inst, walks_reference_table(), /*strict_less=*/false);
  return inst;
}

LabelDistanceTable label_distance_table(const OvInstance& inst) {
  const Graph& g = inst.graph;
  std::array<std::vector<VertexId>, 6> blue;
  std::array<std::vector<VertexId>, 8> red;
  for (VertexId u = 0; u < g.vertex_count(); ++u) {
    const std::string& label = g.label(u);
    if (label.empty()) continue;
    for (std::size_t r = 0; r < kBlueLabels.size(); ++r) {
      if (label == kBlueLabels[r]) blue[r].push_back(u);
    }
    for (std::size_t c = 0; c < kRedLabels.size(); ++c) {
      if (label == kRedLabels[c]) red[c].push_back(u);
    }
  }
  for (std::size_t r = 0; r < kBlueLabels.size(); ++r) {
    if (blue[r].empty()) {
      throw std::invalid_argument(std::string("no vertex labeled ") + kBlueLabels[r]);
    }
  }
  for (std::size_t c = 0; c < kRedLabels.size(); ++c) {
    if (red[c].empty()) {
      throw std::invalid_argument(std::string("no vertex labeled ") + kRedLabels[c]);
    }
  }

  LabelDistanceTable table;
  for (auto& row : table.min_dist) row.fill(Weight::infinity());
  for (auto& row : table.max_dist) row.fill(Weight::zero());
  for (std::size_t r = 0; r < kBlueLabels.size(); ++r) {
    for (VertexId u : blue[r]) {
      const std::vector<Weight> dist = dijkstra_sssp(g, u);
      for (std::size_t c = 0; c < kRedLabels.size(); ++c) {
        for (VertexId w : red[c]) {
          table.min_dist[r][c] = std::min(table.min_dist[r][c], dist[w]);
          table.max_dist[r][c] = std::max(table.max_dist[r][c], dist[w]);
        }
      }
    }
  }
  return table;
}

const std::array<std::array<std::int64_t, 8>, 6>& paths_reference_table() {
  static const std::array<std::array<std::int64_t, 8>, 6> table = {{
      {650, 2650, 2300, 4300, 2702, 2301, 2951, 2952},
      {1600, 3600, 2601, 4601, 2952, 3251, 3302, 3202},
      {2300, 4300, 650, 2650, 1652, 652, 1302, 1652},
      {1950, 3950, 2300, 4300, 3301, 2301, 2951, 3301},
      {1700, 3700, 2701, 4701, 3051, 2951, 3402, 3302},
      {1350, 3350, 2351, 4351, 2702, 3001, 3051, 2951},
  }};
  return table;
}

const std::array<std::array<std::int64_t, 8>, 6>& walks_reference_table() {
  static const std::array<std::array<std::int64_t, 8>, 6> table = {{
      {1800, 1800, 1800, 3600, 1900, 1900, 1900, 1900},
      {1900, 3600, 1900, 3700, 1800, 2000, 2000, 2000},
      {1800, 3600, 1800, 1800, 1900, 1900, 1900, 1900},
      {1900, 3700, 1900, 3700, 2000, 800, 1600, 2000},
      {1900, 3700, 1900, 3700, 2000, 1600, 2000, 2000},
      {1900, 3700, 1900, 3600, 2000, 2000, 2000, 1800},
  }};
  return table;
}

}  // namespace gfd
