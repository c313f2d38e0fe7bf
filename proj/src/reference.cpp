#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <unordered_map>
#include <vector>

#include "icol/reference.hpp"

namespace icol {

namespace {

// oracle search: edges in input order, colours tried ascending
struct brute_state {
  const Graph& g;
  int palette;
  std::vector<std::uint64_t> used;  // per-vertex colour bitmask
  std::vector<int> colour;
  std::vector<int> last_edge;  // highest incident edge index per vertex

  explicit brute_state(const Graph& g_in) : g(g_in) {
    int n = g.vertex_count();
    int base = std::max(1, 2 * n - 4);
    if (base > 64)
      throw std::logic_error("brute force oracle limited to 2n-4 <= 64");
    palette = base;
    used.assign(n, 0);
    colour.assign(g.edge_count(), 0);
    last_edge.assign(n, -1);
    for (int e = 0; e < g.edge_count(); ++e) {
      last_edge[g.edge(e).u] = e;
      last_edge[g.edge(e).v] = e;
    }
  }

  bool consecutive_at(int v) const {
    std::vector<int> seen;
    for (const AdjEntry& a : g.neighbours(v)) seen.push_back(colour[a.edge]);
    std::sort(seen.begin(), seen.end());
    for (std::size_t i = 1; i < seen.size(); ++i)
      if (seen[i] != seen[i - 1] + 1) return false;
    return true;
  }

  bool extend(int e) {
    if (e == g.edge_count()) return true;
    int u = g.edge(e).u, v = g.edge(e).v;
    for (int c = 1; c <= palette; ++c) {
      std::uint64_t bit = std::uint64_t{1} << (c - 1);
      if ((used[u] | used[v]) & bit) continue;
      colour[e] = c;
      used[u] |= bit;
      used[v] |= bit;
      bool ok = (last_edge[u] != e || consecutive_at(u)) &&
                (last_edge[v] != e || consecutive_at(v));
      if (ok && extend(e + 1)) return true;
      used[u] &= ~bit;
      used[v] &= ~bit;
    }
    return false;
  }

  // exhaustive variant: visit every interval colouring, track the largest
  // number of distinct colours seen at the leaves
  std::vector<int> use_count;
  int distinct = 0;
  int best = -1;

  void extend_max(int e) {
    if (e == g.edge_count()) {
      best = std::max(best, distinct);
      return;
    }
    int u = g.edge(e).u, v = g.edge(e).v;
    for (int c = 1; c <= palette; ++c) {
      std::uint64_t bit = std::uint64_t{1} << (c - 1);
      if ((used[u] | used[v]) & bit) continue;
      colour[e] = c;
      used[u] |= bit;
      used[v] |= bit;
      if (use_count[c]++ == 0) ++distinct;
      bool ok = (last_edge[u] != e || consecutive_at(u)) &&
                (last_edge[v] != e || consecutive_at(v));
      if (ok) extend_max(e + 1);
      if (--use_count[c] == 0) --distinct;
      used[u] &= ~bit;
      used[v] &= ~bit;
    }
  }
};

bool mask_connected(int n, const std::vector<int>& adj_mask) {
  int start = -1;
  for (int v = 0; v < n; ++v)
    if (adj_mask[v]) {
      start = v;
      break;
    }
  if (start < 0) return n == 1;  // single isolated vertex counts as connected
  int reached = 1 << start, frontier = reached;
  while (frontier) {
    int next = 0;
    for (int v = 0; v < n; ++v)
      if (frontier >> v & 1) next |= adj_mask[v];
    frontier = next & ~reached;
    reached |= next;
  }
  if (reached != (1 << n) - 1) return false;
  return true;
}

// per-vertex signature: degree then sorted neighbour degrees
using vsig = std::vector<int>;

std::vector<vsig> signatures(int n, const std::vector<int>& adj_mask) {
  std::vector<int> deg(n);
  for (int v = 0; v < n; ++v) deg[v] = __builtin_popcount(adj_mask[v]);
  std::vector<vsig> sig(n);
  for (int v = 0; v < n; ++v) {
    sig[v].push_back(deg[v]);
    std::vector<int> nd;
    for (int u = 0; u < n; ++u)
      if (adj_mask[v] >> u & 1) nd.push_back(deg[u]);
    std::sort(nd.begin(), nd.end());
    sig[v].insert(sig[v].end(), nd.begin(), nd.end());
  }
  return sig;
}

std::uint64_t invariant_hash(int n, const std::vector<int>& adj_mask,
                             const std::vector<vsig>& sig) {
  std::vector<vsig> sorted = sig;
  std::sort(sorted.begin(), sorted.end());
  int triangles = 0;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      if (adj_mask[a] >> b & 1)
        triangles += __builtin_popcount(adj_mask[a] & adj_mask[b] &
                                        ~((1 << (b + 1)) - 1));
  std::uint64_t h = 1469598103934665603ull;
  auto mix = [&h](int x) {
    h ^= static_cast<std::uint64_t>(x) + 0x9e3779b97f4a7c15ull;
    h *= 1099511628211ull;
  };
  mix(triangles);
  for (const vsig& s : sorted) {
    mix(-1);
    for (int x : s) mix(x);
  }
  return h;
}

struct iso_tester {
  int n;
  const std::vector<int>&a1, &a2;
  const std::vector<vsig>&s1, &s2;
  std::vector<int> map_to;  // vertex of g1 -> vertex of g2
  int used_mask = 0;

  iso_tester(int n_in, const std::vector<int>& adj1,
             const std::vector<int>& adj2, const std::vector<vsig>& sig1,
             const std::vector<vsig>& sig2)
      : n(n_in), a1(adj1), a2(adj2), s1(sig1), s2(sig2), map_to(n_in, -1) {}

  bool place(int v) {
    if (v == n) return true;
    for (int w = 0; w < n; ++w) {
      if (used_mask >> w & 1) continue;
      if (s1[v] != s2[w]) continue;
      bool ok = true;
      for (int p = 0; p < v; ++p) {
        if (((a1[v] >> p) & 1) != ((a2[w] >> map_to[p]) & 1)) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;
      map_to[v] = w;
      used_mask |= 1 << w;
      if (place(v + 1)) return true;
      used_mask &= ~(1 << w);
      map_to[v] = -1;
    }
    return false;
  }
};

bool isomorphic(int n, const std::vector<int>& a1, const std::vector<int>& a2,
                const std::vector<vsig>& s1, const std::vector<vsig>& s2) {
  std::vector<vsig> c1 = s1, c2 = s2;
  std::sort(c1.begin(), c1.end());
  std::sort(c2.begin(), c2.end());
  if (c1 != c2) return false;
  iso_tester t(n, a1, a2, s1, s2);
  return t.place(0);
}

}  // namespace

bool brute_force_interval_colourable(const Graph& g) {
  if (g.edge_count() == 0) return true;
  brute_state st(g);
  return st.extend(0);
}

int brute_force_t_max(const Graph& g) {
  if (g.edge_count() == 0) return 0;
  brute_state st(g);
  st.use_count.assign(st.palette + 1, 0);
  st.extend_max(0);
  return st.best;
}

int arboricity_by_subsets(const Graph& g) {
  int n = g.vertex_count();
  if (n > 24) throw std::logic_error("subset arboricity limited to n <= 24");
  int best = 0;
  for (int mask = 0; mask < (1 << n); ++mask) {
    int size = __builtin_popcount(mask);
    if (size < 2) continue;
    int inside = 0;
    for (const Edge& e : g.edges())
      if ((mask >> e.u & 1) && (mask >> e.v & 1)) ++inside;
    best = std::max(best, (inside + size - 2) / (size - 1));
  }
  return best;
}

std::vector<Graph> enumerate_connected_graphs(int n) {
  if (n < 1 || n > 7)
    throw std::logic_error("graph enumeration limited to 1 <= n <= 7");
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) pairs.push_back({i, j});
  int np = static_cast<int>(pairs.size());
  struct rep {
    std::vector<int> adj;
    std::vector<vsig> sig;
    std::uint32_t mask;
  };
  std::vector<rep> reps;
  std::unordered_map<std::uint64_t, std::vector<int>> buckets;
  for (std::uint32_t mask = 0; mask < (1u << np); ++mask) {
    std::vector<int> adj(n, 0);
    for (int k = 0; k < np; ++k) {
      if (mask >> k & 1) {
        adj[pairs[k].first] |= 1 << pairs[k].second;
        adj[pairs[k].second] |= 1 << pairs[k].first;
      }
    }
    if (!mask_connected(n, adj)) continue;
    std::vector<vsig> sig = signatures(n, adj);
    std::uint64_t h = invariant_hash(n, adj, sig);
    auto& bucket = buckets[h];
    bool fresh = true;
    for (int idx : bucket) {
      if (isomorphic(n, adj, reps[idx].adj, sig, reps[idx].sig)) {
        fresh = false;
        break;
      }
    }
    if (fresh) {
      bucket.push_back(static_cast<int>(reps.size()));
      reps.push_back({std::move(adj), std::move(sig), mask});
    }
  }
  std::vector<Graph> out;
  out.reserve(reps.size());
  for (const rep& r : reps) {
    Graph g(n);
    for (int k = 0; k < np; ++k)
      if (r.mask >> k & 1) g.add_edge(pairs[k].first, pairs[k].second);
    out.push_back(std::move(g));
  }
  return out;
}

int max_cut_by_enumeration(const Graph& g) {
  int n = g.vertex_count();
  if (n > 24) throw std::logic_error("max cut enumeration limited to n <= 24");
  if (n == 0) return 0;
  int best = 0;
  for (int mask = 0; mask < (1 << (n - 1)); ++mask) {
    int side = mask << 1;  // vertex 0 pinned to side 0
    int crossing = 0;
    for (const Edge& e : g.edges())
      if (((side >> e.u) & 1) != ((side >> e.v) & 1)) ++crossing;
    best = std::max(best, crossing);
  }
  return best;
}

namespace {

void dsd_paths(const Graph& g, int at, int target, long long cost,
               std::vector<bool>& visited, long long& best) {
  if (best >= 0 && cost >= best) return;
  if (at == target) {
    best = cost;
    return;
  }
  for (const AdjEntry& a : g.neighbours(at)) {
    if (visited[a.to]) continue;
    visited[a.to] = true;
    dsd_paths(g, a.to, target, cost + g.degree(a.to), visited, best);
    visited[a.to] = false;
  }
}

}  // namespace

long long degree_sum_distance_by_paths(const Graph& g, int v, int w) {
  std::vector<bool> visited(g.vertex_count(), false);
  visited[v] = true;
  long long best = -1;
  dsd_paths(g, v, w, g.degree(v), visited, best);
  return best;
}

}  // namespace icol
