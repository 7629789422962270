// Fine-grained gap decisions with sublinear-in-n query cost: the path is
// compressed so consecutive kept vertices are at least beta*rho apart along
// the walk, a graph Voronoi diagram over the path's vertices localizes each
// q_j to a narrow horizontal window of compressed indices, and a small grid
// graph over the windowed cells decides
//   "distance > rho"  vs  "distance <= (1+alpha)(1+alpha+beta) * rho"
// for the strong (monotone) and weak (unrestricted) distances. Choosing
// alpha = beta from a target epsilon makes the gap at most 1+epsilon.
//
// Cell values come from PERCEIVED distances: any oracle whose estimates
// satisfy d <= d~ <= (1+alpha)*d is admissible.
#pragma once

#include <cstdint>
#include <vector>

#include "gfd/frechet_types.hpp"
#include "gfd/graph.hpp"
#include "gfd/oracle.hpp"
#include "gfd/voronoi.hpp"

namespace gfd {

enum class FrechetMode : std::uint8_t { kStrong, kWeak };

// Sparse skeleton of a path: pi lists the kept positions (0-based indices
// into the source path), strictly increasing, always containing both
// endpoints. Any three compression gaps together span more than beta*rho
// of walk length, and every removed vertex lies within beta*rho of the kept
// vertices around it.
struct CompressedPath {
  const WalkRef* source = nullptr;
  std::vector<std::size_t> pi;
  // For each source index x: the largest t with pi[t] <= x.
  std::vector<std::size_t> pred_of_source;

  std::size_t size() const { return pi.size(); }
};

// Three-step compression: (1) greedily drop vertices closer than beta*rho
// along the walk to the last kept anchor; (2) re-add the predecessor of
// every anchor; (3) re-add the final vertex. A degenerate beta*rho = 0
// keeps everything. Requires p to be a simple path.
CompressedPath compress_path(const Graph& g, const WalkRef& p,
                             const Ratio& beta, Weight rho);

// Which compressed indices may match q_j at threshold rho: empty when even
// the nearest path vertex is farther than rho from q_j (exact, from the
// Voronoi diagram); otherwise the compressed predecessor of that nearest
// vertex, widened by ceil(9*kappa/beta) on both sides and clamped.
struct BetaWindow {
  bool empty = true;
  std::size_t lo = 0;
  std::size_t hi = 0;  // inclusive
};

// vd must be voronoi(g, p.vertices()) for cp's source path p.
std::vector<BetaWindow> build_windows(const VoronoiDiagram& vd,
                                      const CompressedPath& cp,
                                      const WalkRef& q, Weight rho,
                                      const Ratio& kappa, const Ratio& beta);

// Cell thresholds at rho: Near iff d~ <= ceil((1+alpha)*rho); Far iff
// d~ > floor((1+alpha)(1+alpha+beta)*rho); Mid otherwise. Far wins when
// milli-unit rounding makes the two thresholds cross (tiny rho), which
// keeps both verdict guarantees intact.
struct EpsThresholds {
  Weight near_t = Weight::zero();
  Weight far_t = Weight::zero();
};

EpsThresholds eps_thresholds(Weight rho, const Ratio& alpha, const Ratio& beta);
FreeSpaceValue classify_eps(Weight perceived, const EpsThresholds& t);

struct EpsOptions {
  // Accept an oracle that declares no stretch guarantee (e.g. landmarks).
  // Callers set this only after validate_stretch(1+alpha) passed on the
  // instance; the verdict guarantees are conditional on that bound.
  bool trust_unverified_oracle = false;
  // Diagnostics: number of kept path vertices (n') and of windowed grid
  // cells (|A|), when non-null.
  std::size_t* compressed_size = nullptr;
  std::size_t* grid_cells = nullptr;
};

// Strong-distance gap decision at rho over the windowed grid, with
// monotone (directed) moves. Requires p kappa-straight (asserted, not
// re-checked), alpha <= 1/2, beta > 0, and vd = voronoi(g, p.vertices()).
//   AtMostScaled   => strong distance <= (1+alpha)(1+alpha+beta) * rho
//   GreaterThanRho => strong distance > rho
VerdictAtRho decide_eps_strong(const DistanceOracle& oracle,
                               const VoronoiDiagram& vd, const WalkRef& p,
                               const WalkRef& q, Weight rho,
                               const Ratio& kappa, const Ratio& alpha,
                               const Ratio& beta, const EpsOptions& options = {});

// Weak-distance variant: same windows, undirected grid (backtracking
// allowed). Guarantees as above for the weak distance.
VerdictAtRho decide_eps_weak(const DistanceOracle& oracle,
                             const VoronoiDiagram& vd, const WalkRef& p,
                             const WalkRef& q, Weight rho, const Ratio& kappa,
                             const Ratio& alpha, const Ratio& beta,
                             const EpsOptions& options = {});

// alpha = beta = (sqrt(8*epsilon+9)-3)/4, rounded DOWN to a multiple of
// 1/1024 and clamped to 1/2, so that (1+alpha)(1+alpha+beta) <= 1+epsilon
// exactly. Throws when epsilon <= 0 or so small that the rounded alpha
// would be zero (epsilon below ~0.00294).
Ratio derive_eps_alpha(const Ratio& epsilon);

// Value search with explicit parameters: factor (1+alpha)(1+alpha+beta)
// up to the search slack eta. Builds the Voronoi diagram once and probes
// decide_eps_{strong,weak} across rho values.
ApproxInterval approx_value_eps_params(const DistanceOracle& oracle,
                                       const WalkRef& p, const WalkRef& q,
                                       const Ratio& kappa, const Ratio& alpha,
                                       const Ratio& beta, FrechetMode mode,
                                       const Ratio& eta,
                                       const EpsOptions& options = {});

// (1+epsilon)-approximation: derives alpha = beta from epsilon, then runs
// the parameterized search.
ApproxInterval approx_value_eps(const DistanceOracle& oracle, const WalkRef& p,
                                const WalkRef& q, const Ratio& kappa,
                                const Ratio& epsilon, FrechetMode mode,
                                const Ratio& eta,
                                const EpsOptions& options = {});

}  // namespace gfd
