// Orthogonal-vectors hardness instances: families of graphs and walks whose
// Fréchet distance encodes whether two Boolean vector sets contain an
// orthogonal pair. Two variants:
//   Paths — one vector gadget per input vector on a weighted planar-style
//     graph; the two walks are simple paths; distance < 3 iff orthogonal,
//     and <= 2.96 whenever < 3 (so even a 1.01-approximation decides it).
//   Walks — a fixed 16-vertex graph; the walks revisit vertices; distance
//     <= 1.9 iff orthogonal. Requires even dimension (odd inputs get one
//     zero coordinate appended to every vector).
//
// These serve as an adversarial corpus: every engine must reproduce the
// pinned label-distance tables and the orthogonality thresholds exactly.
// Generation self-checks the construction against the pinned tables; a
// near/far classification mismatch aborts, while pure value differences
// are recorded on the instance for the caller to inspect.
#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "gfd/graph.hpp"
#include "gfd/weight.hpp"

namespace gfd {

struct OvVectors {
  std::vector<std::vector<int>> a;  // entries 0/1
  std::vector<std::vector<int>> b;

  std::size_t dimension() const { return a.empty() ? 0 : a.front().size(); }

  // Text form: one 0/1 string per line for the first set, a blank line,
  // then one per line for the second set. '#' starts a comment line.
  static OvVectors parse(std::istream& in);
  static OvVectors parse_file(const std::string& path);
};

// True iff some a in A and b in B satisfy sum_i a_i*b_i = 0.
bool has_orthogonal_pair(const OvVectors& v);

enum class OvVariant : std::uint8_t { kPaths, kWalks };

// One entry where the built graph's label distance differs from the pinned
// reference value (same near/far side — larger differences abort).
struct TableDeviation {
  std::string blue;
  std::string red;
  Weight built = Weight::zero();
  Weight printed = Weight::zero();
};

struct OvInstance {
  Graph graph{0};
  std::vector<VertexId> p;
  std::vector<VertexId> q;
  OvVariant variant = OvVariant::kPaths;
  Weight threshold = Weight::zero();
  // Paths: distance < threshold iff orthogonal (strict).
  // Walks: distance <= threshold iff orthogonal.
  bool ground_truth_orthogonal = false;
  std::vector<TableDeviation> table_deviations;

  WalkRef walk_p() const { return WalkRef(graph, p); }
  WalkRef walk_q() const { return WalkRef(graph, q); }
};

// Vector gadget instance on a per-vector graph; p and q are simple paths.
OvInstance gen_paths_instance(const OvVectors& v);

// Fixed-graph instance; p and q revisit vertices. Pads odd dimensions.
OvInstance gen_walks_instance(const OvVectors& v);

// Label orders for the distance tables (row = blue, column = red).
inline constexpr std::array<const char*, 6> kBlueLabels = {
    "x", "y", "z", "B0", "B1", "B"};
inline constexpr std::array<const char*, 8> kRedLabels = {
    "alpha", "alpha_star", "beta", "beta_star", "gamma", "A0", "A1", "A"};

struct LabelDistanceTable {
  // Minimum and maximum exact distance over all vertex pairs carrying the
  // (blue, red) label combination.
  std::array<std::array<Weight, 8>, 6> min_dist;
  std::array<std::array<Weight, 8>, 6> max_dist;
};

// One Dijkstra per blue-labeled vertex. Throws if a label is missing.
LabelDistanceTable label_distance_table(const OvInstance& inst);

// Pinned reference tables in milli-units, same row/column order.
const std::array<std::array<std::int64_t, 8>, 6>& paths_reference_table();
const std::array<std::array<std::int64_t, 8>, 6>& walks_reference_table();

}  // namespace gfd
