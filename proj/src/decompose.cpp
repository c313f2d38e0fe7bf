#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <queue>
#include <stdexcept>
#include <unordered_map>
#include <vector>

#include "flow.hpp"
#include "icol/decompose.hpp"

namespace icol {

namespace {

using clock_type = std::chrono::steady_clock;

constexpr long long kClosureInf = 1LL << 60;

}  // namespace

EdgeColouring colour_forest(const Graph& g, const EdgeSubset& edges) {
  std::vector<int> idx = edges.indices();
  std::vector<int> pos(g.edge_count(), -1);
  for (std::size_t i = 0; i < idx.size(); ++i) pos[idx[i]] = static_cast<int>(i);
  int n = g.vertex_count();
  std::vector<std::vector<AdjEntry>> adj(n);
  for (int e : idx) {
    adj[g.edge(e).u].push_back({g.edge(e).v, e});
    adj[g.edge(e).v].push_back({g.edge(e).u, e});
  }
  EdgeColouring out;
  out.colour.assign(idx.size(), 0);
  std::vector<int> entered(n, -1);  // colour of the edge a vertex was reached by
  std::vector<bool> seen(n, false);
  int assigned = 0;
  for (int root = 0; root < n; ++root) {
    if (seen[root] || adj[root].empty()) continue;
    seen[root] = true;
    entered[root] = 0;  // root behaves as if entered by colour 0
    std::queue<int> q;
    q.push(root);
    while (!q.empty()) {
      int v = q.front();
      q.pop();
      int next = entered[v];
      for (const AdjEntry& a : adj[v]) {
        if (out.colour[pos[a.edge]] == 0 && !seen[a.to]) {
          out.colour[pos[a.edge]] = ++next;
          ++assigned;
          seen[a.to] = true;
          entered[a.to] = next;
          q.push(a.to);
        }
      }
    }
  }
  if (assigned != static_cast<int>(idx.size()))
    throw std::invalid_argument("edge subset is not a forest");
  return out;
}

std::optional<EdgeSubset> find_regular_bipartite(const Graph& g,
                                                 const Bipartition& bip,
                                                 int r) {
  if (r < 1) throw std::invalid_argument("regularity must be positive");
  int n = g.vertex_count();
  if (static_cast<int>(bip.side.size()) != n)
    throw std::invalid_argument("bipartition size mismatch");
  // crossing edges only; alive tracks the surviving vertex set
  std::vector<bool> alive(n, false);
  std::vector<int> crossing;
  for (int e = 0; e < g.edge_count(); ++e) {
    const Edge& ed = g.edge(e);
    if (bip.side[ed.u] != bip.side[ed.v]) {
      crossing.push_back(e);
      alive[ed.u] = alive[ed.v] = true;
    }
  }
  if (crossing.empty()) return std::nullopt;
  auto degree_of = [&](int v) {
    int d = 0;
    for (int e : crossing) {
      const Edge& ed = g.edge(e);
      if ((ed.u == v || ed.v == v) && alive[ed.u] && alive[ed.v]) ++d;
    }
    return d;
  };
  while (true) {
    // peel vertices under the target degree
    bool changed = true;
    while (changed) {
      changed = false;
      for (int v = 0; v < n; ++v) {
        if (alive[v] && degree_of(v) < r) {
          alive[v] = false;
          changed = true;
        }
      }
    }
    std::vector<int> side_a, side_b;
    for (int v = 0; v < n; ++v) {
      if (!alive[v]) continue;
      (bip.side[v] == 0 ? side_a : side_b).push_back(v);
    }
    if (side_a.empty() || side_b.empty()) return std::nullopt;
    if (side_a.size() != side_b.size()) {
      // drop the lightest vertex from the larger side and re-peel
      std::vector<int>& larger = side_a.size() > side_b.size() ? side_a : side_b;
      int victim = larger.front();
      for (int v : larger)
        if (degree_of(v) < degree_of(victim)) victim = v;
      alive[victim] = false;
      continue;
    }
    // exact-degree instance: every surviving vertex wants degree exactly r
    int na = static_cast<int>(side_a.size());
    std::vector<int> node(n, -1);
    int next_node = 2;  // 0 = source, 1 = sink
    for (int v : side_a) node[v] = next_node++;
    for (int v : side_b) node[v] = next_node++;
    max_flow flow(next_node);
    for (int v : side_a) flow.add_edge(0, node[v], r);
    for (int v : side_b) flow.add_edge(node[v], 1, r);
    std::vector<std::pair<int, int>> arc_of;  // (edge index, arc id)
    for (int e : crossing) {
      const Edge& ed = g.edge(e);
      if (!alive[ed.u] || !alive[ed.v]) continue;
      int a = bip.side[ed.u] == 0 ? ed.u : ed.v;
      int b = bip.side[ed.u] == 0 ? ed.v : ed.u;
      arc_of.push_back({e, flow.add_edge(node[a], node[b], 1)});
    }
    if (flow.run(0, 1) == static_cast<long long>(r) * na) {
      EdgeSubset out(g.edge_count());
      for (const auto& [e, arc] : arc_of)
        if (flow.flow_on(arc) > 0) out.add(e);
      return out;
    }
    // infeasible: drop the overall lightest vertex and try again
    int victim = -1;
    for (int v = 0; v < n; ++v)
      if (alive[v] && (victim < 0 || degree_of(v) < degree_of(victim)))
        victim = v;
    if (victim < 0) return std::nullopt;
    alive[victim] = false;
  }
}

EdgeColouring colour_regular_bipartite(const Graph& g, const EdgeSubset& edges,
                                       int r) {
  std::vector<int> idx = edges.indices();
  SubgraphResult sub = subgraph(g, edges);
  std::optional<Bipartition> bip = bipartition(sub.graph);
  if (!bip) throw std::invalid_argument("subset is not bipartite");
  for (int v = 0; v < sub.graph.vertex_count(); ++v) {
    int d = sub.graph.degree(v);
    if (d != 0 && d != r)
      throw std::invalid_argument("subset is not regular of the given degree");
  }
  EdgeColouring out;
  out.colour.assign(idx.size(), 0);
  // r rounds of Kuhn's matching; regularity keeps a perfect matching alive
  std::vector<bool> removed(idx.size(), false);
  std::vector<int> covered_a;
  for (int v = 0; v < sub.graph.vertex_count(); ++v)
    if (sub.graph.degree(v) > 0 && bip->side[v] == 0) covered_a.push_back(v);
  for (int round = 1; round <= r; ++round) {
    std::vector<int> match_of(sub.graph.vertex_count(), -1);  // B -> edge pos
    std::vector<int> match_a(sub.graph.vertex_count(), -1);   // A -> edge pos
    for (int a : covered_a) {
      std::vector<bool> tried(sub.graph.vertex_count(), false);
      // iterative stack-free Kuhn would obscure things; recursion is shallow
      std::function<bool(int)> try_augment = [&](int x) -> bool {
        for (const AdjEntry& ae : sub.graph.neighbours(x)) {
          if (removed[ae.edge] || tried[ae.to]) continue;
          tried[ae.to] = true;
          if (match_of[ae.to] < 0) {
            match_of[ae.to] = ae.edge;
            match_a[x] = ae.edge;
            return true;
          }
          int other_pos = match_of[ae.to];
          int holder = sub.graph.edge(other_pos).u == ae.to
                           ? sub.graph.edge(other_pos).v
                           : sub.graph.edge(other_pos).u;
          if (try_augment(holder)) {
            match_of[ae.to] = ae.edge;
            match_a[x] = ae.edge;
            return true;
          }
        }
        return false;
      };
      if (!try_augment(a))
        throw std::logic_error("regular bipartite subset lost a matching");
    }
    for (int a : covered_a) {
      out.colour[match_a[a]] = round;
      removed[match_a[a]] = true;
    }
  }
  return out;
}

namespace {

std::vector<int> default_thresholds(int m) {
  std::vector<int> out;
  for (int t = m / 2; t >= 4; t /= 2) out.push_back(t);
  return out;
}

Part make_forest_part(const Graph& g, const EdgeSubset& edges) {
  Part part;
  part.edges = edges;
  part.kind = PartKind::forest;
  part.colours = colour_forest(g, edges);
  return part;
}

}  // namespace

Decomposition decompose_pipeline(const Graph& g, const PipelineConfig& cfg) {
  if (cfg.min_regularity < 2)
    throw std::invalid_argument("min_regularity must be at least 2");
  std::vector<int> thresholds = cfg.density_thresholds.empty()
                                    ? default_thresholds(g.edge_count())
                                    : cfg.density_thresholds;
  for (std::size_t i = 1; i < thresholds.size(); ++i)
    if (thresholds[i] >= thresholds[i - 1])
      throw std::invalid_argument("thresholds must be strictly decreasing");
  Decomposition out;
  EdgeSubset remainder = EdgeSubset::full(g.edge_count());
  bool stuck = false;
  for (int threshold : thresholds) {
    if (stuck) break;
    while (remainder.count() > threshold) {
      SubgraphResult sub = subgraph(g, remainder);
      MaxCutResult cut = max_cut_bipartite_subgraph(sub.graph, cfg.max_cut_seed);
      // degree ceilings on the two sides of the crossing subgraph
      int max_a = 0, max_b = 0;
      std::vector<int> cross_deg(sub.graph.vertex_count(), 0);
      for (int e = 0; e < sub.graph.edge_count(); ++e) {
        const Edge& ed = sub.graph.edge(e);
        if (cut.partition.side[ed.u] != cut.partition.side[ed.v]) {
          ++cross_deg[ed.u];
          ++cross_deg[ed.v];
        }
      }
      for (int v = 0; v < sub.graph.vertex_count(); ++v) {
        if (cut.partition.side[v] == 0)
          max_a = std::max(max_a, cross_deg[v]);
        else
          max_b = std::max(max_b, cross_deg[v]);
      }
      std::optional<EdgeSubset> found;
      int found_r = 0;
      for (int r = std::min(max_a, max_b); r >= cfg.min_regularity; --r) {
        found = find_regular_bipartite(sub.graph, cut.partition, r);
        if (found) {
          found_r = r;
          break;
        }
      }
      if (!found) {
        stuck = true;
        break;
      }
      Part part;
      part.edges = EdgeSubset(g.edge_count());
      for (int e : found->indices()) part.edges.add(sub.orig_edge[e]);
      part.kind = PartKind::regular_bipartite;
      part.regularity = found_r;
      part.colours = colour_regular_bipartite(g, part.edges, found_r);
      for (int e : part.edges.indices()) remainder.remove(e);
      out.parts.push_back(std::move(part));
    }
  }
  if (!remainder.empty()) {
    SubgraphResult sub = subgraph(g, remainder);
    for (const EdgeSubset& forest : forest_decomposition(sub.graph)) {
      EdgeSubset lifted(g.edge_count());
      for (int e : forest.indices()) lifted.add(sub.orig_edge[e]);
      out.parts.push_back(make_forest_part(g, lifted));
    }
  }
  return out;
}

ThicknessResult theta_upper(const Graph& g, const PipelineConfig& cfg) {
  ThicknessResult out;
  out.decomposition = decompose_pipeline(g, cfg);
  out.theta = static_cast<int>(out.decomposition.parts.size());
  out.exact = false;
  return out;
}

namespace {

// theta search: assign edges 0..m-1 to parts with restricted growth; when a
// component of some part can no longer gain edges (all its vertices have
// exhausted their future edges), its colourability is decided and memoized
// on the exact edge bitmask. Non-colourable frozen components kill the
// branch; reaching a full assignment therefore certifies every part.
class theta_searcher {
 public:
  theta_searcher(const Graph& g, int k,
                 const std::optional<clock_type::time_point>& deadline)
      : g_(g), k_(k), deadline_(deadline) {
    int n = g_.vertex_count();
    remaining_.assign(n, 0);
    for (const Edge& e : g_.edges()) {
      ++remaining_[e.u];
      ++remaining_[e.v];
    }
    part_of_.assign(g_.edge_count(), -1);
  }

  bool run() { return dfs(0, 0); }

  const std::vector<int>& assignment() const { return part_of_; }
  std::uint64_t nodes() const { return nodes_; }
  bool timed_out() const { return timed_out_; }

  // shared across k values: part colourability keyed by exact edge set
  static bool colourable_mask(const Graph& g, std::uint64_t mask,
                              std::unordered_map<std::uint64_t, bool>& memo) {
    auto it = memo.find(mask);
    if (it != memo.end()) return it->second;
    EdgeSubset sub(g.edge_count());
    for (int e = 0; e < g.edge_count(); ++e)
      if (mask >> e & 1) sub.add(e);
    SolveResult res = decide_interval_colourable(subgraph(g, sub).graph);
    bool ok = res.status == SolveStatus::colourable_with_witness;
    memo[mask] = ok;
    return ok;
  }

  std::unordered_map<std::uint64_t, bool>* memo = nullptr;

 private:
  // edge bitmask of the part-p component containing vertex x
  std::uint64_t component_mask(int p, int x) const {
    std::uint64_t mask = 0;
    std::vector<int> stack{x};
    std::vector<bool> seen(g_.vertex_count(), false);
    seen[x] = true;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (const AdjEntry& a : g_.neighbours(v)) {
        if (part_of_[a.edge] != p) continue;
        mask |= std::uint64_t{1} << a.edge;
        if (!seen[a.to]) {
          seen[a.to] = true;
          stack.push_back(a.to);
        }
      }
    }
    return mask;
  }

  bool frozen(int p, int x) const {
    std::vector<int> stack{x};
    std::vector<bool> seen(g_.vertex_count(), false);
    seen[x] = true;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      if (remaining_[v] > 0) return false;
      for (const AdjEntry& a : g_.neighbours(v)) {
        if (part_of_[a.edge] != p) continue;
        if (!seen[a.to]) {
          seen[a.to] = true;
          stack.push_back(a.to);
        }
      }
    }
    return true;
  }

  bool dfs(int e, int opened) {
    if (timed_out_) return false;
    if (e == g_.edge_count()) return true;
    int u = g_.edge(e).u, v = g_.edge(e).v;
    --remaining_[u];
    --remaining_[v];
    int limit = std::min(opened + 1, k_);
    for (int p = 0; p < limit; ++p) {
      ++nodes_;
      if ((nodes_ & 0x3ff) == 0 && deadline_ &&
          clock_type::now() > *deadline_) {
        timed_out_ = true;
        break;
      }
      part_of_[e] = p;
      bool ok = true;
      for (int x : {u, v}) {
        if (remaining_[x] > 0) continue;
        // x's component in any part it touches may just have frozen
        for (int q = 0; q < k_; ++q) {
          bool touches = false;
          for (const AdjEntry& a : g_.neighbours(x))
            if (part_of_[a.edge] == q) {
              touches = true;
              break;
            }
          if (!touches) continue;
          if (frozen(q, x) &&
              !colourable_mask(g_, component_mask(q, x), *memo)) {
            ok = false;
            break;
          }
        }
        if (!ok) break;
      }
      if (ok && dfs(e + 1, std::max(opened, p + 1))) {
        ++remaining_[u];
        ++remaining_[v];
        return true;
      }
      part_of_[e] = -1;
      if (timed_out_) break;
    }
    ++remaining_[u];
    ++remaining_[v];
    return false;
  }

  const Graph& g_;
  int k_;
  std::optional<clock_type::time_point> deadline_;
  std::vector<int> remaining_, part_of_;
  std::uint64_t nodes_ = 0;
  bool timed_out_ = false;
};

Part classify_part(const Graph& g, const EdgeSubset& edges) {
  SubgraphResult sub = subgraph(g, edges);
  bool acyclic = true;
  {
    std::vector<int> parent(sub.graph.vertex_count());
    for (int v = 0; v < sub.graph.vertex_count(); ++v) parent[v] = v;
    std::function<int(int)> find = [&](int x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    for (const Edge& ed : sub.graph.edges()) {
      int a = find(ed.u), b = find(ed.v);
      if (a == b) {
        acyclic = false;
        break;
      }
      parent[a] = b;
    }
  }
  if (acyclic) return make_forest_part(g, edges);
  Part part;
  part.edges = edges;
  std::optional<Bipartition> bip = bipartition(sub.graph);
  int r = 0;
  bool regular = bip.has_value();
  for (int v = 0; regular && v < sub.graph.vertex_count(); ++v) {
    int d = sub.graph.degree(v);
    if (d == 0) continue;
    if (r == 0) r = d;
    if (d != r) regular = false;
  }
  if (regular && bip && r >= 1) {
    part.kind = PartKind::regular_bipartite;
    part.regularity = r;
    part.colours = colour_regular_bipartite(g, edges, r);
    return part;
  }
  part.kind = PartKind::generic;
  SolveResult res = decide_interval_colourable(sub.graph);
  if (res.status != SolveStatus::colourable_with_witness)
    throw std::logic_error("theta part failed its colourability recheck");
  part.colours = res.witness;
  return part;
}

}  // namespace

ThetaExactOutcome theta_exact(const Graph& g, int k_max,
                              const SolveOptions& opts) {
  if (g.edge_count() > 64)
    throw std::invalid_argument("theta_exact limited to 64 edges");
  if (k_max < 1) throw std::invalid_argument("k_max must be positive");
  std::optional<clock_type::time_point> deadline;
  if (opts.time_limit_ms)
    deadline =
        clock_type::now() + std::chrono::milliseconds(*opts.time_limit_ms);
  ThetaExactOutcome out;
  if (g.edge_count() == 0) {
    out.status = ThetaStatus::found;
    out.result = ThicknessResult{0, {}, true};
    // an edgeless graph needs no parts at all; report theta 0 with exact flag
    return out;
  }
  std::unordered_map<std::uint64_t, bool> memo;
  for (int k = 1; k <= k_max; ++k) {
    theta_searcher searcher(g, k, deadline);
    searcher.memo = &memo;
    bool found = searcher.run();
    out.nodes_explored += searcher.nodes();
    if (searcher.timed_out()) {
      out.status = ThetaStatus::timeout;
      return out;
    }
    if (!found) continue;
    ThicknessResult result;
    result.theta = k;
    result.exact = true;
    std::vector<EdgeSubset> sets(k, EdgeSubset(g.edge_count()));
    for (int e = 0; e < g.edge_count(); ++e)
      sets[searcher.assignment()[e]].add(e);
    for (const EdgeSubset& s : sets)
      if (!s.empty()) result.decomposition.parts.push_back(classify_part(g, s));
    result.theta = static_cast<int>(result.decomposition.parts.size());
    out.status = ThetaStatus::found;
    out.result = std::move(result);
    return out;
  }
  out.status = ThetaStatus::infeasible;
  return out;
}

bool check_sparsity(const Graph& g, const Rational& k) {
  if (k < Rational(0, 1)) throw std::invalid_argument("k must be >= 0");
  int n = g.vertex_count();
  long long p = k.num(), q = k.den();
  if (n <= 20) {
    // e_in[S] by lowest-bit recursion, then test every |S| >= 3
    std::vector<int> adj_mask(n, 0);
    for (const Edge& e : g.edges()) {
      adj_mask[e.u] |= 1 << e.v;
      adj_mask[e.v] |= 1 << e.u;
    }
    std::size_t total = std::size_t{1} << n;
    std::vector<int> e_in(total, 0);
    for (std::size_t mask = 1; mask < total; ++mask) {
      int b = __builtin_ctzll(mask);
      std::size_t rest = mask & (mask - 1);
      e_in[mask] =
          e_in[rest] +
          __builtin_popcount(adj_mask[b] & static_cast<int>(rest));
      int size = __builtin_popcountll(mask);
      if (size >= 3 &&
          q * e_in[mask] > p * (size - 2))
        return false;
    }
    return true;
  }
  // max-weight closure with a forced triple: includes T free of charge, so
  // the best closure value exceeds p exactly when some S >= T violates
  // q e(S) <= p(|S|-2).
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      for (int c = b + 1; c < n; ++c) {
        max_flow flow(2 + n + g.edge_count());
        long long excess = 0;
        for (int e = 0; e < g.edge_count(); ++e) {
          flow.add_edge(0, 2 + n + e, q);
          excess += q;
          flow.add_edge(2 + n + e, 2 + g.edge(e).u, kClosureInf);
          flow.add_edge(2 + n + e, 2 + g.edge(e).v, kClosureInf);
        }
        for (int v = 0; v < n; ++v) {
          long long cost = (v == a || v == b || v == c) ? 0 : p;
          flow.add_edge(2 + v, 1, cost);
        }
        long long closure = excess - flow.run(0, 1);
        if (closure > p) return false;
      }
    }
  }
  return true;
}

TBoundsReport check_t_bounds(const Graph& g, int t) {
  if (t < 0) throw std::invalid_argument("t must be non-negative");
  int n = g.vertex_count();
  TBoundsReport report;
  auto push = [&report](std::string name, bool applicable, double bound,
                        bool satisfied) {
    report.entries.push_back({std::move(name), applicable, bound, satisfied});
    if (applicable && !satisfied) report.all_satisfied = false;
  };
  push("gkm", n >= 3, 2.0 * n - 4, n < 3 || t <= 2 * n - 4);
  bool tf = !has_triangle(g);
  push("triangle-free", tf, n - 1.0, !tf || t <= n - 1);
  const std::pair<long long, long long> ks[] = {
      {2, 1}, {5, 2}, {3, 1}, {7, 2}, {4, 1}};
  for (const auto& [p, q] : ks) {
    Rational k(p, q);
    bool applicable = n >= 3 && check_sparsity(g, k);
    // t <= (k/2)n + 1 - k, exactly: 2q t <= p n + 2q - 2p
    bool satisfied =
        !applicable || 2 * q * t <= p * n + 2 * q - 2 * p;
    std::string name = "sparsity-" + k.str();
    push(std::move(name), applicable, 0.5 * p / q * n + 1.0 - 1.0 * p / q,
         satisfied);
  }
  return report;
}

}  // namespace icol
