#include <numeric>
#include <queue>
#include <stdexcept>
#include <vector>

#include "icol/decompose.hpp"

namespace icol {

namespace {

struct dsu {
  std::vector<int> parent;
  explicit dsu(int n) : parent(n) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  int find(int x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[a] = b;
    return true;
  }
};

bool fits_forest(const Graph& g, const std::vector<int>& owner, int forest,
                 int x) {
  dsu d(g.vertex_count());
  for (int e = 0; e < g.edge_count(); ++e)
    if (owner[e] == forest) d.unite(g.edge(e).u, g.edge(e).v);
  return d.find(g.edge(x).u) != d.find(g.edge(x).v);
}

// Edges of the unique cycle in forest + x, excluding x itself: the tree path
// between x's endpoints.
std::vector<int> cycle_edges(const Graph& g, const std::vector<int>& owner,
                             int forest, int x) {
  int n = g.vertex_count();
  std::vector<std::vector<AdjEntry>> adj(n);
  for (int e = 0; e < g.edge_count(); ++e) {
    if (owner[e] != forest) continue;
    adj[g.edge(e).u].push_back({g.edge(e).v, e});
    adj[g.edge(e).v].push_back({g.edge(e).u, e});
  }
  int from = g.edge(x).u, to = g.edge(x).v;
  std::vector<int> via_edge(n, -1), via_vertex(n, -1);
  std::queue<int> q;
  q.push(from);
  via_vertex[from] = from;
  while (!q.empty() && via_vertex[to] < 0) {
    int v = q.front();
    q.pop();
    for (const AdjEntry& a : adj[v]) {
      if (via_vertex[a.to] >= 0) continue;
      via_vertex[a.to] = v;
      via_edge[a.to] = a.edge;
      q.push(a.to);
    }
  }
  std::vector<int> path;
  for (int v = to; v != from; v = via_vertex[v]) path.push_back(via_edge[v]);
  return path;
}

// Matroid-union augmentation: move edges between forests along an exchange
// chain so that edge e0 becomes assignable. Labels are set breadth-first
// against the pre-augment forests; the chain is executed backwards.
bool augment(const Graph& g, std::vector<int>& owner, int k, int e0) {
  int m = g.edge_count();
  std::vector<int> parent(m, -2);  // -2 unvisited, -1 root
  std::queue<int> q;
  parent[e0] = -1;
  q.push(e0);
  while (!q.empty()) {
    int x = q.front();
    q.pop();
    for (int j = 0; j < k; ++j) {
      if (owner[x] == j) continue;
      if (fits_forest(g, owner, j, x)) {
        int place = j, cur = x;
        while (true) {
          int prev = owner[cur];
          owner[cur] = place;
          if (parent[cur] < 0) break;
          place = prev;
          cur = parent[cur];
        }
        return true;
      }
      for (int f : cycle_edges(g, owner, j, x)) {
        if (parent[f] == -2) {
          parent[f] = x;
          q.push(f);
        }
      }
    }
  }
  return false;
}

void assert_forests(const Graph& g, const std::vector<int>& owner, int k,
                    int upto) {
  std::vector<dsu> checks(k, dsu(g.vertex_count()));
  for (int e = 0; e <= upto; ++e) {
    if (owner[e] < 0 || owner[e] >= k)
      throw std::logic_error("forest partition lost an edge");
    if (!checks[owner[e]].unite(g.edge(e).u, g.edge(e).v))
      throw std::logic_error("forest partition created a cycle");
  }
}

}  // namespace

std::vector<EdgeSubset> forest_decomposition(const Graph& g) {
  int m = g.edge_count();
  int n = g.vertex_count();
  if (m == 0) return {};
  int k = std::max(1, (m + n - 2) / (n - 1));  // Nash-Williams lower bound
  for (;; ++k) {
    std::vector<int> owner(m, -1);
    std::vector<dsu> forest(k, dsu(n));
    bool ok = true;
    for (int e = 0; e < m; ++e) {
      int u = g.edge(e).u, v = g.edge(e).v;
      bool placed = false;
      for (int j = 0; j < k && !placed; ++j) {
        if (forest[j].find(u) != forest[j].find(v)) {
          owner[e] = j;
          forest[j].unite(u, v);
          placed = true;
        }
      }
      if (placed) continue;
      if (!augment(g, owner, k, e)) {
        ok = false;
        break;
      }
      assert_forests(g, owner, k, e);
      forest.assign(k, dsu(n));
      for (int f = 0; f <= e; ++f)
        forest[owner[f]].unite(g.edge(f).u, g.edge(f).v);
    }
    if (!ok) continue;
    std::vector<EdgeSubset> out(k, EdgeSubset(m));
    for (int e = 0; e < m; ++e) out[owner[e]].add(e);
    return out;
  }
}

}  // namespace icol
