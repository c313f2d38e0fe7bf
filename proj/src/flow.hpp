#pragma once

#include <algorithm>
#include <limits>
#include <queue>
#include <vector>

namespace icol {

// Dinic maximum flow, used for regular-subgraph extraction and the sparsity
// check. Small instances only; long long capacities for the closure weights.
class max_flow {
 public:
  explicit max_flow(int n) : head_(n) {}

  int add_edge(int from, int to, long long cap) {
    int id = static_cast<int>(arcs_.size());
    head_[from].push_back(id);
    arcs_.push_back({to, cap, 0});
    head_[to].push_back(id + 1);
    arcs_.push_back({from, 0, 0});
    return id;
  }

  long long run(int s, int t) {
    long long total = 0;
    while (bfs(s, t)) {
      iter_.assign(head_.size(), 0);
      while (long long pushed = dfs(s, t, kInf)) total += pushed;
    }
    return total;
  }

  long long flow_on(int id) const { return arcs_[id].flow; }

 private:
  static constexpr long long kInf = std::numeric_limits<long long>::max() / 4;

  struct arc {
    int to;
    long long cap;   // residual capacity
    long long flow;  // pushed so far (forward arcs)
  };

  bool bfs(int s, int t) {
    level_.assign(head_.size(), -1);
    std::queue<int> q;
    level_[s] = 0;
    q.push(s);
    while (!q.empty()) {
      int v = q.front();
      q.pop();
      for (int id : head_[v]) {
        const arc& a = arcs_[id];
        if (a.cap > 0 && level_[a.to] < 0) {
          level_[a.to] = level_[v] + 1;
          q.push(a.to);
        }
      }
    }
    return level_[t] >= 0;
  }

  long long dfs(int v, int t, long long limit) {
    if (v == t) return limit;
    for (std::size_t& i = iter_[v]; i < head_[v].size(); ++i) {
      int id = head_[v][i];
      arc& a = arcs_[id];
      if (a.cap <= 0 || level_[a.to] != level_[v] + 1) continue;
      long long got = dfs(a.to, t, std::min(limit, a.cap));
      if (got > 0) {
        a.cap -= got;
        a.flow += got;
        arcs_[id ^ 1].cap += got;
        arcs_[id ^ 1].flow -= got;
        return got;
      }
    }
    return 0;
  }

  std::vector<std::vector<int>> head_;
  std::vector<arc> arcs_;
  std::vector<int> level_;
  std::vector<std::size_t> iter_;
};

}  // namespace icol
