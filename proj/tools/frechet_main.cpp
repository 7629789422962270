// frechet — command-line front end for the graph Fréchet distance library.
//
// Subcommands: exact, kappa, eps, voronoi, verify-straight, gen-ovh, bench.
// Every run prints one JSON report on stdout (stable key order) and exits
// 0 on success, 1 on a domain error (JSON error object on stderr), or 2 on
// a usage error.
#include <chrono>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <memory>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "gfd/dijkstra.hpp"
#include "gfd/frechet_eps.hpp"
#include "gfd/frechet_exact.hpp"
#include "gfd/frechet_kappa.hpp"
#include "gfd/graph.hpp"
#include "gfd/io.hpp"
#include "gfd/oracle.hpp"
#include "gfd/ovh.hpp"
#include "gfd/ratio.hpp"
#include "gfd/straightness.hpp"
#include "gfd/version.hpp"
#include "gfd/voronoi.hpp"
#include "gfd/weight.hpp"

namespace {

using gfd::Graph;
using gfd::Ratio;
using gfd::VertexId;
using gfd::WalkRef;
using gfd::Weight;
using ordered_json = nlohmann::ordered_json;

// Violations of flag grammar that CLI11 cannot express (mutually exclusive
// groups across value/decide modes, conditional requirements).
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::uint64_t fnv1a64_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::uint64_t h = 1469598103934665603ull;
  char ch;
  while (in.get(ch)) {
    h ^= static_cast<unsigned char>(ch);
    h *= 1099511628211ull;
  }
  return h;
}

std::string digest_string(const std::string& path) {
  std::ostringstream out;
  out << "fnv1a64:" << std::hex << std::setw(16) << std::setfill('0')
      << fnv1a64_file(path);
  return out.str();
}

ordered_json weight_json(Weight w) {
  if (w.is_infinite()) return "inf";
  return static_cast<double>(w.milli()) / 1000.0;
}

ordered_json weight_milli_json(Weight w) {
  if (w.is_infinite()) return nullptr;
  return w.milli();
}

void put_weight(ordered_json& obj, const std::string& key, Weight w) {
  obj[key] = weight_json(w);
  obj[key + "_milli"] = weight_milli_json(w);
}

void put_ratio(ordered_json& obj, const std::string& key, const Ratio& r) {
  obj[key] = r.as_double();
  obj[key + "_exact"] = r.str();
}

Ratio parse_ratio_flag(const std::string& flag, const std::string& text) {
  try {
    return Ratio::parse(text);
  } catch (const std::exception& e) {
    throw UsageError(flag + ": " + e.what());
  }
}

Weight parse_weight_flag(const std::string& flag, const std::string& text) {
  try {
    return Weight::parse(text);
  } catch (const std::exception& e) {
    throw UsageError(flag + ": " + e.what());
  }
}

// Shared state for the global flags; each handler pulls what it needs.
struct CommonArgs {
  std::string graph_path;
  std::string walk_p_path;
  std::string walk_q_path;
  std::string oracle_spec = "exact";
  std::uint64_t oracle_seed = 1;
  bool json_pretty = false;
};

struct LoadedInstance {
  Graph graph{0};
  std::vector<VertexId> p_vertices;
  std::vector<VertexId> q_vertices;
  ordered_json inputs;

  WalkRef walk_p() const { return WalkRef(graph, p_vertices); }
  WalkRef walk_q() const { return WalkRef(graph, q_vertices); }
};

LoadedInstance load_instance(const CommonArgs& args, bool need_q) {
  if (args.graph_path.empty()) throw UsageError("--graph is required");
  if (args.walk_p_path.empty()) throw UsageError("--walk-p is required");
  if (need_q && args.walk_q_path.empty()) throw UsageError("--walk-q is required");

  LoadedInstance inst;
  inst.graph = gfd::read_graph_file(args.graph_path);
  inst.inputs["graph"] = {{"path", args.graph_path},
                          {"digest", digest_string(args.graph_path)}};
  {
    WalkRef p = gfd::read_walk_file(args.walk_p_path, inst.graph);
    inst.p_vertices = p.vertices();
  }
  inst.inputs["walk_p"] = {{"path", args.walk_p_path},
                           {"digest", digest_string(args.walk_p_path)}};
  if (need_q) {
    WalkRef q = gfd::read_walk_file(args.walk_q_path, inst.graph);
    inst.q_vertices = q.vertices();
    inst.inputs["walk_q"] = {{"path", args.walk_q_path},
                             {"digest", digest_string(args.walk_q_path)}};
  }
  return inst;
}

std::unique_ptr<gfd::DistanceOracle> make_oracle(const CommonArgs& args,
                                                 const Graph& g) {
  if (args.oracle_spec == "exact") {
    return std::make_unique<gfd::ExactOracle>(g);
  }
  const std::string prefix = "landmark:";
  if (args.oracle_spec.rfind(prefix, 0) == 0) {
    const std::string count_text = args.oracle_spec.substr(prefix.size());
    std::size_t pos = 0;
    unsigned long count = 0;
    try {
      count = std::stoul(count_text, &pos);
    } catch (const std::exception&) {
      throw UsageError("--oracle: bad landmark count '" + count_text + "'");
    }
    if (pos != count_text.size() || count == 0) {
      throw UsageError("--oracle: bad landmark count '" + count_text + "'");
    }
    return std::make_unique<gfd::LandmarkOracle>(g, count, args.oracle_seed);
  }
  throw UsageError("--oracle must be 'exact' or 'landmark:<k>'");
}

// For an oracle without a declared stretch bound: sample vertex pairs
// (biased toward the cells the engines will query) and check the estimates
// against exact distances at the given stretch. Throws on any violation.
void validate_oracle_stretch(const gfd::DistanceOracle& oracle, const Graph& g,
                             const WalkRef& p, const WalkRef& q,
                             const Ratio& stretch, std::uint64_t seed) {
  std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ull);
  std::vector<std::pair<VertexId, VertexId>> sample;
  std::uniform_int_distribution<std::size_t> pi(0, p.size() - 1);
  std::uniform_int_distribution<std::size_t> qi(0, q.size() - 1);
  for (int k = 0; k < 1000; ++k) sample.emplace_back(p[pi(rng)], q[qi(rng)]);
  std::uniform_int_distribution<VertexId> vi(0, g.vertex_count() - 1);
  for (int k = 0; k < 1000; ++k) sample.emplace_back(vi(rng), vi(rng));

  const gfd::StretchReport report =
      gfd::validate_stretch(oracle, g, stretch, sample);
  if (!report.ok()) {
    const gfd::StretchViolation& v = report.violations.front();
    std::ostringstream msg;
    msg << "oracle failed stretch validation at " << stretch.str() << ": "
        << report.violations.size() << " of " << report.pairs_checked
        << " sampled pairs violated; first: d(" << v.u << "," << v.v << ") = "
        << v.exact.str() << " but estimate " << v.estimate.str();
    throw std::runtime_error(msg.str());
  }
}

void require_straight(const Graph& g, const WalkRef& p, const Ratio& kappa,
                      bool trusted) {
  if (trusted) return;
  const gfd::StraightnessReport report = gfd::check_kappa_straight(g, p, kappa);
  if (!report.is_straight) {
    std::ostringstream msg;
    msg << "walk p is not " << kappa.str() << "-straight: subpath ["
        << report.worst_from << ".." << report.worst_to << "] has length "
        << report.subpath_length.str() << " but metric distance "
        << report.metric_distance.str()
        << " (pass --trust-straight to skip this check)";
    throw std::runtime_error(msg.str());
  }
}

ordered_json verdict_json(const gfd::VerdictAtRho& v) {
  ordered_json out;
  out["verdict"] = v.verdict == gfd::Verdict::kAtMostScaled
                       ? "at_most_scaled"
                       : "greater_than_rho";
  put_weight(out, "rho", v.rho);
  put_ratio(out, "gap_factor", v.gap_factor);
  return out;
}

ordered_json interval_json(const gfd::ApproxInterval& iv) {
  ordered_json out;
  put_weight(out, "lo", iv.lo);
  put_weight(out, "hi", iv.hi);
  put_ratio(out, "factor", iv.factor);
  return out;
}

class Stopwatch {
 public:
  std::uint64_t elapsed_ms() const {
    const auto d = std::chrono::steady_clock::now() - start_;
    return static_cast<std::uint64_t>(
        std::chrono::duration_cast<std::chrono::milliseconds>(d).count());
  }

 private:
  std::chrono::steady_clock::time_point start_ =
      std::chrono::steady_clock::now();
};

void print_report(const CommonArgs& args, const std::string& command,
                  ordered_json arguments, ordered_json inputs,
                  ordered_json result, std::uint64_t oracle_queries,
                  std::uint64_t dijkstra_runs, std::uint64_t iterations,
                  std::uint64_t wall_time_ms) {
  ordered_json report;
  report["command"] = command;
  report["arguments"] = std::move(arguments);
  report["inputs"] = std::move(inputs);
  report["result"] = std::move(result);
  report["stats"] = {{"oracle_queries", oracle_queries},
                     {"dijkstra_runs", dijkstra_runs},
                     {"iterations", iterations},
                     {"wall_time_ms", wall_time_ms}};
  report["version"] = gfd::kLibraryVersion;
  std::cout << (args.json_pretty ? report.dump(2) : report.dump()) << "\n";
}

// ---------------------------------------------------------------------------
// exact
// ---------------------------------------------------------------------------

int run_exact(const CommonArgs& args, const std::string& mode, bool witness) {
  if (mode != "strong" && mode != "weak") {
    throw UsageError("--mode must be 'strong' or 'weak'");
  }
  if (witness && mode != "strong") {
    throw UsageError("--witness is only available with --mode strong");
  }
  const LoadedInstance inst = load_instance(args, /*need_q=*/true);
  const WalkRef p = inst.walk_p();
  const WalkRef q = inst.walk_q();
  const auto oracle = make_oracle(args, inst.graph);

  Stopwatch watch;
  ordered_json result;
  result["mode"] = mode;
  if (witness) {
    const gfd::StrongResult r = gfd::exact_strong_with_witness(*oracle, p, q);
    put_weight(result, "value", r.value);
    ordered_json coupling = ordered_json::array();
    for (const gfd::LatticePoint& pt : r.witness) {
      coupling.push_back({pt.i, pt.j});
    }
    result["witness"] = std::move(coupling);
  } else {
    const Weight value = mode == "strong" ? gfd::exact_strong(*oracle, p, q)
                                          : gfd::exact_weak(*oracle, p, q);
    put_weight(result, "value", value);
  }

  ordered_json arguments = {{"mode", mode}, {"witness", witness},
                            {"oracle", args.oracle_spec}};
  print_report(args, "exact", std::move(arguments), inst.inputs,
               std::move(result), oracle->query_count(),
               oracle->dijkstra_runs(),
               static_cast<std::uint64_t>(p.size()) * q.size(),
               watch.elapsed_ms());
  return 0;
}

// ---------------------------------------------------------------------------
// kappa
// ---------------------------------------------------------------------------

int run_kappa(const CommonArgs& args, const std::string& kappa_text,
              const std::string& rho_text, bool value_mode,
              const std::string& eta_text, bool trust_straight) {
  if (rho_text.empty() == !value_mode) {
    throw UsageError("pass exactly one of --rho <weight> and --value");
  }
  const Ratio kappa = parse_ratio_flag("--kappa", kappa_text);
  const LoadedInstance inst = load_instance(args, /*need_q=*/true);
  const WalkRef p = inst.walk_p();
  const WalkRef q = inst.walk_q();
  const auto oracle = make_oracle(args, inst.graph);

  Stopwatch watch;
  require_straight(inst.graph, p, kappa, trust_straight);
  const std::uint64_t straightness_runs = trust_straight ? 0 : p.size();

  ordered_json result;
  std::uint64_t iterations = 0;
  std::uint64_t engine_queries = 0;
  if (value_mode) {
    const Ratio eta = parse_ratio_flag("--eta", eta_text);
    const gfd::ApproxInterval iv =
        gfd::approx_value_kappa(*oracle, p, q, kappa, eta);
    result = interval_json(iv);
    iterations = iv.stats.iterations;
    engine_queries = iv.stats.oracle_queries;
  } else {
    const Weight rho = parse_weight_flag("--rho", rho_text);
    const gfd::VerdictAtRho v = gfd::decide_kappa(*oracle, p, q, rho, kappa);
    result = verdict_json(v);
    iterations = v.stats.iterations;
    engine_queries = v.stats.oracle_queries;
  }
  put_ratio(result, "kappa", kappa);
  result["query_budget"] = 3 * (p.size() + q.size()) + 1;

  ordered_json arguments = {{"kappa", kappa_text},
                            {"mode", value_mode ? "value" : "decide"},
                            {"oracle", args.oracle_spec},
                            {"trust_straight", trust_straight}};
  if (!rho_text.empty()) arguments["rho"] = rho_text;
  if (value_mode) arguments["eta"] = eta_text;
  print_report(args, "kappa", std::move(arguments), inst.inputs,
               std::move(result), engine_queries,
               oracle->dijkstra_runs() + straightness_runs, iterations,
               watch.elapsed_ms());
  return 0;
}

// ---------------------------------------------------------------------------
// eps
// ---------------------------------------------------------------------------

int run_eps(const CommonArgs& args, const std::string& mode_text,
            const std::string& epsilon_text, const std::string& alpha_text,
            const std::string& beta_text, const std::string& kappa_text,
            const std::string& rho_text, bool value_mode,
            const std::string& eta_text, bool trust_straight) {
  if (mode_text != "strong" && mode_text != "weak") {
    throw UsageError("--mode must be 'strong' or 'weak'");
  }
  if (rho_text.empty() == !value_mode) {
    throw UsageError("pass exactly one of --rho <weight> and --value");
  }
  const bool have_pair = !alpha_text.empty() || !beta_text.empty();
  if (epsilon_text.empty() == !have_pair) {
    throw UsageError("pass exactly one of --epsilon and --alpha/--beta");
  }
  if (have_pair && (alpha_text.empty() || beta_text.empty())) {
    throw UsageError("--alpha and --beta must be given together");
  }

  Ratio alpha = Ratio::from_int(0);
  Ratio beta = Ratio::from_int(0);
  std::optional<Ratio> epsilon;
  if (!epsilon_text.empty()) {
    epsilon = parse_ratio_flag("--epsilon", epsilon_text);
    alpha = gfd::derive_eps_alpha(*epsilon);
    beta = alpha;
  } else {
    alpha = parse_ratio_flag("--alpha", alpha_text);
    beta = parse_ratio_flag("--beta", beta_text);
  }
  const Ratio kappa = parse_ratio_flag("--kappa", kappa_text);
  const gfd::FrechetMode mode = mode_text == "strong" ? gfd::FrechetMode::kStrong
                                                      : gfd::FrechetMode::kWeak;

  const LoadedInstance inst = load_instance(args, /*need_q=*/true);
  const WalkRef p = inst.walk_p();
  const WalkRef q = inst.walk_q();
  const auto oracle = make_oracle(args, inst.graph);

  Stopwatch watch;
  require_straight(inst.graph, p, kappa, trust_straight);
  std::uint64_t extra_dijkstra = trust_straight ? 0 : p.size();

  gfd::EpsOptions options;
  if (!oracle->stretch_guarantee().has_value()) {
    const Ratio bound = Ratio::from_int(1) + alpha;
    validate_oracle_stretch(*oracle, inst.graph, p, q, bound, args.oracle_seed);
    options.trust_unverified_oracle = true;
  }
  std::size_t compressed_size = 0;
  std::size_t grid_cells = 0;
  options.compressed_size = &compressed_size;
  options.grid_cells = &grid_cells;

  ordered_json result;
  std::uint64_t iterations = 0;
  std::uint64_t engine_queries = 0;
  if (value_mode) {
    const Ratio eta = parse_ratio_flag("--eta", eta_text);
    const gfd::ApproxInterval iv = gfd::approx_value_eps_params(
        *oracle, p, q, kappa, alpha, beta, mode, eta, options);
    result = interval_json(iv);
    iterations = iv.stats.iterations;
    engine_queries = iv.stats.oracle_queries;
  } else {
    const Weight rho = parse_weight_flag("--rho", rho_text);
    const gfd::VoronoiDiagram vd = gfd::voronoi(inst.graph, p.vertices());
    extra_dijkstra += 1;
    const gfd::VerdictAtRho v =
        mode == gfd::FrechetMode::kStrong
            ? gfd::decide_eps_strong(*oracle, vd, p, q, rho, kappa, alpha, beta,
                                     options)
            : gfd::decide_eps_weak(*oracle, vd, p, q, rho, kappa, alpha, beta,
                                   options);
    result = verdict_json(v);
    iterations = v.stats.iterations;
    engine_queries = v.stats.oracle_queries;
  }
  result["mode"] = mode_text;
  if (epsilon.has_value()) put_ratio(result, "epsilon", *epsilon);
  put_ratio(result, "alpha", alpha);
  put_ratio(result, "beta", beta);
  put_ratio(result, "kappa", kappa);
  result["compressed_size"] = compressed_size;
  result["grid_cells"] = grid_cells;

  ordered_json arguments = {{"mode", mode_text},
                            {"oracle", args.oracle_spec},
                            {"oracle_seed", args.oracle_seed},
                            {"trust_straight", trust_straight}};
  if (!epsilon_text.empty()) arguments["epsilon"] = epsilon_text;
  if (!alpha_text.empty()) arguments["alpha"] = alpha_text;
  if (!beta_text.empty()) arguments["beta"] = beta_text;
  arguments["kappa"] = kappa_text;
  if (!rho_text.empty()) arguments["rho"] = rho_text;
  if (value_mode) arguments["eta"] = eta_text;
  print_report(args, "eps", std::move(arguments), inst.inputs,
               std::move(result), engine_queries,
               oracle->dijkstra_runs() + extra_dijkstra, iterations,
               watch.elapsed_ms());
  return 0;
}

// ---------------------------------------------------------------------------
// voronoi
// ---------------------------------------------------------------------------

int run_voronoi(const CommonArgs& args, const std::vector<VertexId>& sites_flag) {
  if (args.graph_path.empty()) throw UsageError("--graph is required");
  if (sites_flag.empty() == args.walk_p_path.empty()) {
    throw UsageError("pass exactly one of --sites and --walk-p");
  }
  const Graph g = gfd::read_graph_file(args.graph_path);
  ordered_json inputs;
  inputs["graph"] = {{"path", args.graph_path},
                     {"digest", digest_string(args.graph_path)}};
  std::vector<VertexId> sites = sites_flag;
  if (!args.walk_p_path.empty()) {
    const WalkRef p = gfd::read_walk_file(args.walk_p_path, g);
    sites = p.vertices();
    inputs["walk_p"] = {{"path", args.walk_p_path},
                        {"digest", digest_string(args.walk_p_path)}};
  }

  Stopwatch watch;
  const gfd::VoronoiDiagram vd = gfd::voronoi(g, sites);
  ordered_json result;
  result["sites"] = sites;
  result["site_of"] = vd.site_of;
  ordered_json dist = ordered_json::array();
  ordered_json dist_milli = ordered_json::array();
  for (Weight w : vd.dist_to_site) {
    dist.push_back(weight_json(w));
    dist_milli.push_back(weight_milli_json(w));
  }
  result["dist_to_site"] = std::move(dist);
  result["dist_to_site_milli"] = std::move(dist_milli);

  ordered_json arguments;
  arguments["site_count"] = sites.size();
  print_report(args, "voronoi", std::move(arguments), std::move(inputs),
               std::move(result), 0, 1,
               static_cast<std::uint64_t>(g.vertex_count()),
               watch.elapsed_ms());
  return 0;
}

// ---------------------------------------------------------------------------
// verify-straight
// ---------------------------------------------------------------------------

int run_verify_straight(const CommonArgs& args, const std::string& kappa_text) {
  const Ratio kappa = parse_ratio_flag("--kappa", kappa_text);
  const LoadedInstance inst = load_instance(args, /*need_q=*/false);
  const WalkRef p = inst.walk_p();

  Stopwatch watch;
  const gfd::StraightnessReport report =
      gfd::check_kappa_straight(inst.graph, p, kappa);
  ordered_json result;
  result["is_straight"] = report.is_straight;
  put_ratio(result, "kappa", kappa);
  if (!report.is_straight) {
    ordered_json worst;
    worst["from_index"] = report.worst_from;
    worst["to_index"] = report.worst_to;
    put_weight(worst, "subpath_length", report.subpath_length);
    put_weight(worst, "metric_distance", report.metric_distance);
    result["worst_subpath"] = std::move(worst);
  }

  const std::uint64_t pairs =
      static_cast<std::uint64_t>(p.size()) * (p.size() - 1) / 2;
  ordered_json arguments = {{"kappa", kappa_text}};
  print_report(args, "verify-straight", std::move(arguments), inst.inputs,
               std::move(result), 0, p.size(), pairs, watch.elapsed_ms());
  return 0;
}

// ---------------------------------------------------------------------------
// gen-ovh
// ---------------------------------------------------------------------------

int run_gen_ovh(const CommonArgs& args, const std::string& variant,
                const std::string& vectors_path, const std::string& out_prefix,
                bool emit_dot) {
  if (variant != "paths" && variant != "walks") {
    throw UsageError("--variant must be 'paths' or 'walks'");
  }
  if (vectors_path.empty()) throw UsageError("--vectors is required");
  if (out_prefix.empty()) throw UsageError("--out-prefix is required");

  ordered_json inputs;
  inputs["vectors"] = {{"path", vectors_path},
                       {"digest", digest_string(vectors_path)}};

  Stopwatch watch;
  const gfd::OvVectors vectors = gfd::OvVectors::parse_file(vectors_path);
  const gfd::OvInstance inst = variant == "paths"
                                   ? gfd::gen_paths_instance(vectors)
                                   : gfd::gen_walks_instance(vectors);

  const std::filesystem::path dir(out_prefix);
  std::filesystem::create_directories(dir);
  const std::string graph_file = (dir / "graph.txt").string();
  const std::string walk_p_file = (dir / "walk_p.txt").string();
  const std::string walk_q_file = (dir / "walk_q.txt").string();
  const std::string sidecar_file = (dir / "instance.json").string();
  gfd::write_graph_file(graph_file, inst.graph);
  gfd::write_walk_file(walk_p_file, inst.walk_p());
  gfd::write_walk_file(walk_q_file, inst.walk_q());

  ordered_json sidecar;
  sidecar["variant"] = variant;
  put_weight(sidecar, "threshold", inst.threshold);
  sidecar["threshold_is_strict"] = inst.variant == gfd::OvVariant::kPaths;
  sidecar["ground_truth_orthogonal"] = inst.ground_truth_orthogonal;
  ordered_json deviations = ordered_json::array();
  for (const gfd::TableDeviation& d : inst.table_deviations) {
    ordered_json entry;
    entry["blue"] = d.blue;
    entry["red"] = d.red;
    put_weight(entry, "built", d.built);
    put_weight(entry, "printed", d.printed);
    deviations.push_back(std::move(entry));
  }
  sidecar["table_deviations"] = std::move(deviations);
  {
    std::ofstream out(sidecar_file);
    if (!out) throw std::runtime_error("cannot write " + sidecar_file);
    out << sidecar.dump(2) << "\n";
  }

  ordered_json files;
  files["graph"] = graph_file;
  files["walk_p"] = walk_p_file;
  files["walk_q"] = walk_q_file;
  files["sidecar"] = sidecar_file;
  if (emit_dot) {
    const std::string dot_file = (dir / "graph.dot").string();
    std::ofstream out(dot_file);
    if (!out) throw std::runtime_error("cannot write " + dot_file);
    gfd::write_dot(out, inst.graph);
    files["dot"] = dot_file;
  }

  ordered_json result = sidecar;
  result["vertex_count"] = inst.graph.vertex_count();
  result["edge_count"] = inst.graph.edge_count();
  result["walk_p_size"] = inst.p.size();
  result["walk_q_size"] = inst.q.size();
  result["files"] = std::move(files);

  ordered_json arguments = {{"variant", variant},
                            {"out_prefix", out_prefix},
                            {"emit_dot", emit_dot}};
  print_report(args, "gen-ovh", std::move(arguments), std::move(inputs),
               std::move(result), 0, 0, 0, watch.elapsed_ms());
  return 0;
}

// ---------------------------------------------------------------------------
// bench
// ---------------------------------------------------------------------------

Graph random_connected_graph(std::mt19937_64& rng, int max_vertices) {
  std::uniform_int_distribution<int> nd(2, max_vertices);
  const int n = nd(rng);
  Graph g(n);
  std::uniform_int_distribution<std::int64_t> wd(1, 10000);
  for (int v = 1; v < n; ++v) {
    std::uniform_int_distribution<int> pd(0, v - 1);
    g.add_edge(pd(rng), v, Weight::from_milli(wd(rng)));
  }
  const int extra = std::uniform_int_distribution<int>(0, n)(rng);
  for (int k = 0; k < extra; ++k) {
    std::uniform_int_distribution<int> vd(0, n - 1);
    const int u = vd(rng);
    const int v = vd(rng);
    if (u != v && !g.has_edge(u, v)) {
      g.add_edge(u, v, Weight::from_milli(wd(rng)));
    }
  }
  return g;
}

std::vector<VertexId> random_shortest_path(std::mt19937_64& rng, const Graph& g) {
  std::uniform_int_distribution<VertexId> vd(0, g.vertex_count() - 1);
  for (int attempt = 0; attempt < 32; ++attempt) {
    const VertexId s = vd(rng);
    const VertexId t = vd(rng);
    if (s == t) continue;
    const std::vector<VertexId> path = gfd::shortest_path(g, s, t);
    if (path.size() >= 2) return path;
  }
  return {0};
}

std::vector<VertexId> random_walk(std::mt19937_64& rng, const Graph& g,
                                  std::size_t length) {
  std::uniform_int_distribution<VertexId> vd(0, g.vertex_count() - 1);
  std::vector<VertexId> walk{vd(rng)};
  while (walk.size() < length) {
    const auto& nbrs = g.neighbors(walk.back());
    if (nbrs.empty()) break;
    std::uniform_int_distribution<std::size_t> nd(0, nbrs.size() - 1);
    walk.push_back(nbrs[nd(rng)].to);
  }
  return walk;
}

ordered_json bench_random_instance(std::uint64_t seed, int index) {
  std::mt19937_64 rng(seed * 1000003ull + static_cast<std::uint64_t>(index));
  const Graph g = random_connected_graph(rng, 28);
  const std::vector<VertexId> pv = random_shortest_path(rng, g);
  const std::size_t q_len = std::uniform_int_distribution<std::size_t>(2, 24)(rng);
  const std::vector<VertexId> qv = random_walk(rng, g, q_len);
  const WalkRef p(g, pv);
  const WalkRef q(g, qv);
  const gfd::ExactOracle oracle(g);

  ordered_json report;
  report["index"] = index;
  report["n"] = p.size();
  report["m"] = q.size();
  report["n_plus_m"] = p.size() + q.size();

  const Weight strong = gfd::exact_strong(oracle, p, q);
  const Weight weak = gfd::exact_weak(oracle, p, q);
  put_weight(report, "exact_strong", strong);
  put_weight(report, "exact_weak", weak);

  const Ratio kappa = Ratio::from_int(1);
  if (!strong.is_infinite()) {
    const gfd::VerdictAtRho at_exact =
        gfd::decide_kappa(oracle, p, q, strong, kappa);
    report["kappa_verdict_at_exact"] =
        at_exact.verdict == gfd::Verdict::kAtMostScaled ? "at_most_scaled"
                                                        : "greater_than_rho";
    report["kappa_queries"] = at_exact.stats.oracle_queries;
    report["kappa_iterations"] = at_exact.stats.iterations;
  }
  const std::uint64_t budget = 3 * (p.size() + q.size()) + 1;
  report["kappa_query_budget"] = budget;

  const gfd::ApproxInterval kappa_iv =
      gfd::approx_value_kappa(oracle, p, q, kappa, Ratio{1, 64});
  report["kappa_value"] = interval_json(kappa_iv);

  std::size_t compressed_size = 0;
  std::size_t grid_cells = 0;
  gfd::EpsOptions options;
  options.compressed_size = &compressed_size;
  options.grid_cells = &grid_cells;
  const Ratio quarter{1, 4};
  const gfd::ApproxInterval eps_iv = gfd::approx_value_eps_params(
      oracle, p, q, kappa, quarter, quarter, gfd::FrechetMode::kStrong,
      Ratio{1, 64}, options);
  ordered_json eps = interval_json(eps_iv);
  eps["queries"] = eps_iv.stats.oracle_queries;
  eps["grid_cells_last_probe"] = grid_cells;
  eps["compressed_size_last_probe"] = compressed_size;
  report["eps_value"] = std::move(eps);

  report["oracle_queries_total"] = oracle.query_count();
  report["dijkstra_runs_total"] = oracle.dijkstra_runs();
  return report;
}

ordered_json bench_ovh_instance(std::uint64_t seed, int index, bool paths) {
  std::mt19937_64 rng(seed * 7777777ull + static_cast<std::uint64_t>(index));
  std::uniform_int_distribution<std::size_t> sd(1, 3);
  std::uniform_int_distribution<std::size_t> dd(2, 4);
  std::uniform_int_distribution<int> bit(0, 1);
  gfd::OvVectors v;
  const std::size_t d = dd(rng);
  const std::size_t na = sd(rng);
  const std::size_t nb = sd(rng);
  for (std::size_t k = 0; k < na; ++k) {
    std::vector<int> vec(d);
    for (auto& x : vec) x = bit(rng);
    v.a.push_back(std::move(vec));
  }
  for (std::size_t k = 0; k < nb; ++k) {
    std::vector<int> vec(d);
    for (auto& x : vec) x = bit(rng);
    v.b.push_back(std::move(vec));
  }

  const gfd::OvInstance inst =
      paths ? gfd::gen_paths_instance(v) : gfd::gen_walks_instance(v);
  const WalkRef p = inst.walk_p();
  const WalkRef q = inst.walk_q();
  const gfd::ExactOracle oracle(inst.graph);
  const Weight value = gfd::exact_strong(oracle, p, q);
  const bool classified_orthogonal =
      paths ? value < inst.threshold : value <= inst.threshold;

  ordered_json report;
  report["index"] = index;
  report["vector_count_a"] = na;
  report["vector_count_b"] = nb;
  report["dimension"] = d;
  report["n"] = p.size();
  report["m"] = q.size();
  put_weight(report, "exact_strong", value);
  put_weight(report, "threshold", inst.threshold);
  report["ground_truth_orthogonal"] = inst.ground_truth_orthogonal;
  report["classified_orthogonal"] = classified_orthogonal;
  report["agreement"] = classified_orthogonal == inst.ground_truth_orthogonal;
  report["oracle_queries_total"] = oracle.query_count();
  report["dijkstra_runs_total"] = oracle.dijkstra_runs();
  return report;
}

int run_bench(const CommonArgs& args, const std::string& suite,
              std::uint64_t seed, bool seed_given, int count) {
  if (suite != "random" && suite != "ovh-paths" && suite != "ovh-walks") {
    throw UsageError("--suite must be 'random', 'ovh-paths', or 'ovh-walks'");
  }
  if (!seed_given) throw UsageError("--seed is required for bench suites");
  if (count <= 0) throw UsageError("--count must be positive");

  Stopwatch watch;
  ordered_json reports = ordered_json::array();
  std::uint64_t total_queries = 0;
  std::uint64_t total_dijkstra = 0;
  int failures = 0;
  int disagreements = 0;
  bool all_within_budget = true;

  // For the query-vs-size regression over decide_kappa runs.
  double sum_x = 0, sum_y = 0, sum_xx = 0, sum_xy = 0;
  int slope_points = 0;

  for (int i = 0; i < count; ++i) {
    try {
      ordered_json report;
      if (suite == "random") {
        report = bench_random_instance(seed, i);
        if (report.contains("kappa_queries")) {
          const double x = report["n_plus_m"].get<double>();
          const double y = report["kappa_queries"].get<double>();
          sum_x += x;
          sum_y += y;
          sum_xx += x * x;
          sum_xy += x * y;
          ++slope_points;
          if (report["kappa_queries"].get<std::uint64_t>() >
              report["kappa_query_budget"].get<std::uint64_t>()) {
            all_within_budget = false;
          }
        }
      } else {
        report = bench_ovh_instance(seed, i, suite == "ovh-paths");
        if (!report["agreement"].get<bool>()) ++disagreements;
      }
      total_queries += report["oracle_queries_total"].get<std::uint64_t>();
      total_dijkstra += report["dijkstra_runs_total"].get<std::uint64_t>();
      reports.push_back(std::move(report));
    } catch (const std::exception& e) {
      ++failures;
      reports.push_back({{"index", i}, {"error", e.what()}});
    }
  }

  ordered_json aggregate;
  aggregate["instances"] = count;
  aggregate["failures"] = failures;
  if (suite == "random") {
    aggregate["kappa_all_within_budget"] = all_within_budget;
    if (slope_points >= 2) {
      const double denom = slope_points * sum_xx - sum_x * sum_x;
      if (denom != 0) {
        aggregate["kappa_queries_per_size_slope"] =
            (slope_points * sum_xy - sum_x * sum_y) / denom;
      }
    }
  } else {
    aggregate["disagreements"] = disagreements;
  }

  ordered_json result;
  result["suite"] = suite;
  result["reports"] = std::move(reports);
  result["aggregate"] = std::move(aggregate);

  ordered_json arguments = {{"suite", suite}, {"seed", seed}, {"count", count}};
  print_report(args, "bench", std::move(arguments), ordered_json::object(),
               std::move(result), total_queries, total_dijkstra,
               static_cast<std::uint64_t>(count), watch.elapsed_ms());
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Discrete Fréchet distance between walks on weighted graphs"};
  app.require_subcommand(1);

  CommonArgs common;
  app.add_option("--graph", common.graph_path, "graph file (text format)");
  app.add_option("--walk-p", common.walk_p_path, "first walk file");
  app.add_option("--walk-q", common.walk_q_path, "second walk file");
  app.add_option("--oracle", common.oracle_spec,
                 "distance oracle: exact | landmark:<k>")
      ->capture_default_str();
  app.add_option("--oracle-seed", common.oracle_seed,
                 "seed for randomized oracle construction")
      ->capture_default_str();
  app.add_flag("--json-pretty", common.json_pretty, "indent the JSON report");

  // exact
  auto* exact_cmd = app.add_subcommand(
      "exact", "exact strong/weak distance (dynamic program / union-find)");
  exact_cmd->fallthrough();
  std::string exact_mode = "strong";
  bool exact_witness = false;
  exact_cmd->add_option("--mode", exact_mode, "strong | weak")
      ->capture_default_str();
  exact_cmd->add_flag("--witness", exact_witness,
                      "also output an optimal coupling (strong mode)");

  // kappa
  auto* kappa_cmd = app.add_subcommand(
      "kappa", "(kappa+1)-gap decision / value search for straight paths");
  kappa_cmd->fallthrough();
  std::string kappa_kappa = "1";
  std::string kappa_rho;
  bool kappa_value = false;
  std::string kappa_eta = "1/64";
  bool kappa_trust = false;
  kappa_cmd->add_option("--kappa", kappa_kappa, "straightness factor of walk p")
      ->capture_default_str();
  kappa_cmd->add_option("--rho", kappa_rho, "decision threshold (weight)");
  kappa_cmd->add_flag("--value", kappa_value,
                      "search for an approximation interval instead");
  kappa_cmd->add_option("--eta", kappa_eta, "value-search slack")
      ->capture_default_str();
  kappa_cmd->add_flag("--trust-straight", kappa_trust,
                      "skip the kappa-straightness verification of walk p");

  // eps
  auto* eps_cmd = app.add_subcommand(
      "eps", "(1+epsilon)-style gap decision / value search via compression");
  eps_cmd->fallthrough();
  std::string eps_mode = "strong";
  std::string eps_epsilon;
  std::string eps_alpha;
  std::string eps_beta;
  std::string eps_kappa = "1";
  std::string eps_rho;
  bool eps_value = false;
  std::string eps_eta = "1/64";
  bool eps_trust = false;
  eps_cmd->add_option("--mode", eps_mode, "strong | weak")->capture_default_str();
  eps_cmd->add_option("--epsilon", eps_epsilon,
                      "target approximation parameter (derives alpha = beta)");
  eps_cmd->add_option("--alpha", eps_alpha, "oracle stretch parameter");
  eps_cmd->add_option("--beta", eps_beta, "compression parameter");
  eps_cmd->add_option("--kappa", eps_kappa, "straightness factor of walk p")
      ->capture_default_str();
  eps_cmd->add_option("--rho", eps_rho, "decision threshold (weight)");
  eps_cmd->add_flag("--value", eps_value,
                    "search for an approximation interval instead");
  eps_cmd->add_option("--eta", eps_eta, "value-search slack")
      ->capture_default_str();
  eps_cmd->add_flag("--trust-straight", eps_trust,
                    "skip the kappa-straightness verification of walk p");

  // voronoi
  auto* voronoi_cmd =
      app.add_subcommand("voronoi", "nearest-site partition of the graph");
  voronoi_cmd->fallthrough();
  std::vector<VertexId> voronoi_sites;
  voronoi_cmd->add_option("--sites", voronoi_sites, "site vertex ids")
      ->delimiter(',');

  // verify-straight
  auto* straight_cmd = app.add_subcommand(
      "verify-straight", "check that walk p is a kappa-straight path");
  straight_cmd->fallthrough();
  std::string straight_kappa = "1";
  straight_cmd->add_option("--kappa", straight_kappa, "straightness factor")
      ->capture_default_str();

  // gen-ovh
  auto* gen_cmd = app.add_subcommand(
      "gen-ovh", "generate an orthogonal-vectors hardness instance");
  gen_cmd->fallthrough();
  std::string gen_variant;
  std::string gen_vectors;
  std::string gen_out;
  bool gen_dot = false;
  gen_cmd->add_option("--variant", gen_variant, "paths | walks");
  gen_cmd->add_option("--vectors", gen_vectors,
                      "vector file (0/1 lines, blank line between sets)");
  gen_cmd->add_option("--out-prefix", gen_out, "output directory");
  gen_cmd->add_flag("--emit-dot", gen_dot, "also write a Graphviz rendering");

  // bench
  auto* bench_cmd = app.add_subcommand(
      "bench", "batch harness over generated instances, with stats");
  bench_cmd->fallthrough();
  std::string bench_suite;
  std::uint64_t bench_seed = 0;
  int bench_count = 20;
  bench_cmd->add_option("--suite", bench_suite,
                        "random | ovh-paths | ovh-walks");
  auto* bench_seed_opt =
      bench_cmd->add_option("--seed", bench_seed, "instance generation seed");
  bench_cmd->add_option("--count", bench_count, "number of instances")
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (app.got_subcommand(exact_cmd)) {
      return run_exact(common, exact_mode, exact_witness);
    }
    if (app.got_subcommand(kappa_cmd)) {
      return run_kappa(common, kappa_kappa, kappa_rho, kappa_value, kappa_eta,
                       kappa_trust);
    }
    if (app.got_subcommand(eps_cmd)) {
      return run_eps(common, eps_mode, eps_epsilon, eps_alpha, eps_beta,
                     eps_kappa, eps_rho, eps_value, eps_eta, eps_trust);
    }
    if (app.got_subcommand(voronoi_cmd)) {
      return run_voronoi(common, voronoi_sites);
    }
    if (app.got_subcommand(straight_cmd)) {
      return run_verify_straight(common, straight_kappa);
    }
    if (app.got_subcommand(gen_cmd)) {
      return run_gen_ovh(common, gen_variant, gen_vectors, gen_out, gen_dot);
    }
    if (app.got_subcommand(bench_cmd)) {
      return run_bench(common, bench_suite, bench_seed,
                       bench_seed_opt->count() > 0, bench_count);
    }
    throw UsageError("no subcommand given");
  } catch (const UsageError& e) {
    nlohmann::ordered_json err;
    err["error"] = {{"type", "usage"}, {"message", e.what()}};
    std::cerr << err.dump() << "\n";
    return 2;
  } catch (const std::exception& e) {
    nlohmann::ordered_json err;
    err["error"] = {{"type", "domain"}, {"message", e.what()}};
    std::cerr << err.dump() << "\n";
    return 1;
  }
}
