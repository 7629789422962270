#include "gfd/frechet_exact.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace gfd {

namespace {

void check_inputs(const DistanceOracle& oracle, const WalkRef& p,
                  const WalkRef& q) {
  if (&p.graph() != &q.graph()) {
    throw std::invalid_argument("walks live in different graphs");
  }
  if (&p.graph() != &oracle.graph()) {
    throw std::invalid_argument("oracle built over a different graph");
  }
  auto stretch = oracle.stretch_guarantee();
  if (!stretch.has_value() || *stretch != Ratio::from_int(1)) {
    throw std::invalid_argument(
        "exact engines need an exact oracle (declared stretch 1)");
  }
}

}  // namespace

Weight exact_strong(const DistanceOracle& oracle, const WalkRef& p,
                    const WalkRef& q) {
  check_inputs(oracle, p, q);
  // Roll rows over the shorter side.
  const WalkRef& a = p.size() >= q.size() ? p : q;
  const WalkRef& b = p.size() >= q.size() ? q : p;
  const std::size_t n = a.size();
  const std::size_t m = b.size();

  std::vector<Weight> prev(m), cur(m);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      Weight cell = oracle.query(a[i], b[j]);
      Weight best;
      if (i == 0 && j == 0) {
        best = Weight::zero();
      } else if (i == 0) {
        best = cur[j - 1];
      } else if (j == 0) {
        best = prev[j];
      } else {
        best = min(min(prev[j], cur[j - 1]), prev[j - 1]);
      }
      cur[j] = max(cell, best);
    }
    std::swap(prev, cur);
  }
  return prev[m - 1];
}

StrongResult exact_strong_with_witness(const DistanceOracle& oracle,
                                       const WalkRef& p, const WalkRef& q) {
  check_inputs(oracle, p, q);
  const std::size_t n = p.size();
  const std::size_t m = q.size();
  std::vector<std::vector<Weight>> dp(n, std::vector<Weight>(m));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      Weight cell = oracle.query(p[i], q[j]);
      Weight best;
      if (i == 0 && j == 0) {
        best = Weight::zero();
      } else if (i == 0) {
        best = dp[i][j - 1];
      } else if (j == 0) {
        best = dp[i - 1][j];
      } else {
        best = min(min(dp[i - 1][j], dp[i][j - 1]), dp[i - 1][j - 1]);
      }
      dp[i][j] = max(cell, best);
    }
  }

  StrongResult result;
  result.value = dp[n - 1][m - 1];
  // Walk back greedily: from (i,j), step to any predecessor whose DP value
  // does not exceed dp[i][j]; one always exists because the recurrence takes
  // the minimum over the available predecessors.
  LatticeWalk reversed;
  std::size_t i = n - 1, j = m - 1;
  reversed.push_back({i, j});
  while (i > 0 || j > 0) {
    if (i > 0 && j > 0 && dp[i - 1][j - 1] <= dp[i][j]) {
      --i;
      --j;
    } else if (i > 0 && dp[i - 1][j] <= dp[i][j]) {
      --i;
    } else {
      --j;
    }
    reversed.push_back({i, j});
  }
  result.witness.assign(reversed.rbegin(), reversed.rend());
  return result;
}

namespace {

// Union-find over lattice cells, path-halving + union by size.
class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n) : parent_(n), size_(n, 1) {
    std::iota(parent_.begin(), parent_.end(), std::size_t{0});
  }
  std::size_t find(std::size_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (size_[a] < size_[b]) std::swap(a, b);
    parent_[b] = a;
    size_[a] += size_[b];
  }

 private:
  std::vector<std::size_t> parent_;
  std::vector<std::size_t> size_;
};

}  // namespace

Weight exact_weak(const DistanceOracle& oracle, const WalkRef& p,
                  const WalkRef& q) {
  check_inputs(oracle, p, q);
  const std::size_t n = p.size();
  const std::size_t m = q.size();
  std::vector<Weight> cell(n * m);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      cell[i * m + j] = oracle.query(p[i], q[j]);
    }
  }
  if (n == 1 && m == 1) return cell[0];

  // Activate cells in ascending value; connect 8-neighbors among active
  // cells; the answer is the first threshold joining (0,0) and (n-1,m-1).
  std::vector<std::size_t> order(n * m);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return cell[a] < cell[b];
  });

  DisjointSets sets(n * m);
  std::vector<char> active(n * m, 0);
  const std::size_t start = 0;
  const std::size_t goal = (n - 1) * m + (m - 1);

  std::size_t k = 0;
  while (k < order.size()) {
    Weight threshold = cell[order[k]];
    if (threshold.is_infinite()) break;  // infinite cells never help
    // Activate the whole tie group before testing connectivity.
    std::size_t first = k;
    while (k < order.size() && cell[order[k]] == threshold) {
      active[order[k]] = 1;
      ++k;
    }
    for (std::size_t t = first; t < k; ++t) {
      std::size_t idx = order[t];
      std::size_t i = idx / m, j = idx % m;
      for (int di = -1; di <= 1; ++di) {
        for (int dj = -1; dj <= 1; ++dj) {
          if (di == 0 && dj == 0) continue;
          if ((di < 0 && i == 0) || (dj < 0 && j == 0)) continue;
          std::size_t ni = i + static_cast<std::size_t>(di);
          std::size_t nj = j + static_cast<std::size_t>(dj);
          if (ni >= n || nj >= m) continue;
          std::size_t nidx = ni * m + nj;
          if (active[nidx]) sets.unite(idx, nidx);
        }
      }
    }
    if (active[start] && active[goal] && sets.find(start) == sets.find(goal)) {
      return threshold;
    }
  }
  return Weight::infinity();
}

namespace {

struct BruteState {
  const std::vector<Weight>* cell;
  std::size_t n, m;
  Weight best;
};

// Monotone family: plain DFS over {right, down, diagonal} moves; at most
// 3^(n+m) paths, fine at n*m <= 64.
void brute_monotone(BruteState& st, std::size_t i, std::size_t j,
                    Weight so_far) {
  so_far = max(so_far, (*st.cell)[i * st.m + j]);
  if (so_far >= st.best) return;  // cannot improve a minimax
  if (i == st.n - 1 && j == st.m - 1) {
    st.best = so_far;
    return;
  }
  if (i + 1 < st.n && j + 1 < st.m) brute_monotone(st, i + 1, j + 1, so_far);
  if (i + 1 < st.n) brute_monotone(st, i + 1, j, so_far);
  if (j + 1 < st.m) brute_monotone(st, i, j + 1, so_far);
}

// Unrestricted family: a minimax over 8-connected walks equals the smallest
// cell value whose sublevel set connects the two corners, so try every
// distinct cell value in ascending order with a fresh flood fill each time.
// (Enumerating simple walks directly is correct but blows up combinatorially
// even on a 6x6 grid.)
Weight brute_weak_flood(const std::vector<Weight>& cell, std::size_t n,
                        std::size_t m) {
  std::vector<Weight> values(cell);
  std::sort(values.begin(), values.end());
  values.erase(std::unique(values.begin(), values.end()), values.end());
  const std::size_t start = 0;
  const std::size_t goal = n * m - 1;
  for (const Weight threshold : values) {
    if (threshold.is_infinite()) break;
    if (cell[start] > threshold || cell[goal] > threshold) continue;
    std::vector<char> seen(n * m, 0);
    std::vector<std::size_t> stack = {start};
    seen[start] = 1;
    while (!stack.empty()) {
      const std::size_t idx = stack.back();
      stack.pop_back();
      const std::size_t i = idx / m;
      const std::size_t j = idx % m;
      for (int di = -1; di <= 1; ++di) {
        for (int dj = -1; dj <= 1; ++dj) {
          if (di == 0 && dj == 0) continue;
          if ((di < 0 && i == 0) || (dj < 0 && j == 0)) continue;
          const std::size_t ni = i + static_cast<std::size_t>(di);
          const std::size_t nj = j + static_cast<std::size_t>(dj);
          if (ni >= n || nj >= m) continue;
          const std::size_t nidx = ni * m + nj;
          if (seen[nidx] || cell[nidx] > threshold) continue;
          seen[nidx] = 1;
          stack.push_back(nidx);
        }
      }
    }
    if (seen[goal]) return threshold;
  }
  return Weight::infinity();
}

}  // namespace

Weight brute_force(const DistanceOracle& oracle, const WalkRef& p,
                   const WalkRef& q, bool monotone) {
  check_inputs(oracle, p, q);
  const std::size_t n = p.size();
  const std::size_t m = q.size();
  if (n * m > 64) {
    throw std::invalid_argument("brute_force limited to n*m <= 64");
  }
  std::vector<Weight> cell(n * m);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      cell[i * m + j] = oracle.query(p[i], q[j]);
    }
  }
  if (!monotone) return brute_weak_flood(cell, n, m);
  BruteState st{&cell, n, m, Weight::infinity()};
  brute_monotone(st, 0, 0, Weight::zero());
  return st.best;
}

}  // namespace gfd
