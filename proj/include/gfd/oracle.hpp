// Distance oracles: answer d~(u,v) queries over a graph's shortest-path
// metric. Every oracle promises d(u,v) <= d~(u,v) (never underestimates);
// an oracle with a stretch guarantee S additionally promises
// d~(u,v) <= S * d(u,v). Queries are counted so engines can report and
// tests can bound how many were spent.
#pragma once

#include <atomic>
#include <cstdint>
#include <memory>
#include <mutex>
#include <optional>
#include <random>
#include <unordered_map>
#include <vector>

#include "gfd/graph.hpp"
#include "gfd/ratio.hpp"
#include "gfd/weight.hpp"

namespace gfd {

class DistanceOracle {
 public:
  explicit DistanceOracle(const Graph& g) : graph_(&g) {}
  virtual ~DistanceOracle() = default;
  DistanceOracle(const DistanceOracle&) = delete;
  DistanceOracle& operator=(const DistanceOracle&) = delete;

  // Estimate of the shortest-path distance between u and v. Counted.
  Weight query(VertexId u, VertexId v) const {
    query_count_.fetch_add(1, std::memory_order_relaxed);
    return do_query(u, v);
  }

  // Worst-case multiplicative stretch S such that d~ <= S*d on every pair,
  // or nullopt if this oracle cannot promise one.
  virtual std::optional<Ratio> stretch_guarantee() const = 0;

  const Graph& graph() const { return *graph_; }

  std::uint64_t query_count() const {
    return query_count_.load(std::memory_order_relaxed);
  }
  void reset_query_count() const {
    query_count_.store(0, std::memory_order_relaxed);
  }

  // Number of full single-source shortest-path computations performed so
  // far (construction + lazy fills), for cost reporting.
  virtual std::uint64_t dijkstra_runs() const = 0;

 protected:
  virtual Weight do_query(VertexId u, VertexId v) const = 0;

 private:
  const Graph* graph_;
  mutable std::atomic<std::uint64_t> query_count_{0};
};

// Exact distances (stretch 1), via one lazy, memoized Dijkstra run per
// distinct queried source. Memory grows as O(#distinct sources * N); no
// eviction. Thread-safe: concurrent first-queries of the same source may
// both compute it, but the result is identical, so callers observe a pure
// function.
class ExactOracle final : public DistanceOracle {
 public:
  explicit ExactOracle(const Graph& g) : DistanceOracle(g) {}

  std::optional<Ratio> stretch_guarantee() const override {
    return Ratio::from_int(1);
  }
  std::uint64_t dijkstra_runs() const override {
    return dijkstra_runs_.load(std::memory_order_relaxed);
  }

 protected:
  Weight do_query(VertexId u, VertexId v) const override;

 private:
  const std::vector<Weight>& rows_for(VertexId source) const;

  mutable std::mutex mutex_;
  mutable std::unordered_map<VertexId, std::shared_ptr<std::vector<Weight>>>
      cache_;
  mutable std::atomic<std::uint64_t> dijkstra_runs_{0};
};

// Landmark-based estimator: stores full distance arrays for k landmarks
// chosen by farthest-point sampling from a seeded random start vertex.
// query(u,v) returns
//   max( max_l |d(u,l) - d(v,l)|,  min_l d(u,l) + d(l,v) )
// — the second term never underestimates (triangle inequality), the first
// clamps it from below. There is NO worst-case stretch guarantee
// (stretch_guarantee() is nullopt); run validate_stretch on the instance
// before trusting it inside an approximation engine.
class LandmarkOracle final : public DistanceOracle {
 public:
  LandmarkOracle(const Graph& g, std::size_t landmark_count,
                 std::uint64_t seed);

  std::optional<Ratio> stretch_guarantee() const override {
    return std::nullopt;
  }
  std::uint64_t dijkstra_runs() const override { return landmarks_.size(); }

  const std::vector<VertexId>& landmarks() const { return landmarks_; }

 protected:
  Weight do_query(VertexId u, VertexId v) const override;

 private:
  std::vector<VertexId> landmarks_;
  // dist_[l][v] = exact distance from landmarks_[l] to v.
  std::vector<std::vector<Weight>> dist_;
};

// One pair where an oracle's estimate broke the stretch contract.
struct StretchViolation {
  VertexId u = 0;
  VertexId v = 0;
  Weight exact = Weight::zero();
  Weight estimate = Weight::zero();
};

struct StretchReport {
  std::vector<StretchViolation> violations;
  std::size_t pairs_checked = 0;
  bool ok() const { return violations.empty(); }
};

// Checks d <= d~ <= stretch*d on each sample pair against exact Dijkstra
// distances. An empty violation list means the oracle honored the contract
// on this sample (not a proof for unsampled pairs).
StretchReport validate_stretch(const DistanceOracle& oracle, const Graph& g,
                               const Ratio& stretch,
                               const std::vector<std::pair<VertexId, VertexId>>& sample);

}  // namespace gfd
