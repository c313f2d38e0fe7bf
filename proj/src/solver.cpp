#include <algorithm>
#include <chrono>
#include <queue>
#include <random>
#include <stdexcept>
#include <vector>

#include "icol/colouring.hpp"
#include "icol/decompose.hpp"

namespace icol {

namespace {

using clock_type = std::chrono::steady_clock;

struct comp_instance {
  Graph graph;
  std::vector<int> orig_edge;
};

std::vector<comp_instance> split_components(const Graph& g) {
  auto verts = components(g);
  int n = g.vertex_count();
  std::vector<int> comp_of(n, -1), local_id(n, -1);
  std::vector<comp_instance> out(verts.size());
  for (std::size_t i = 0; i < verts.size(); ++i) {
    for (std::size_t j = 0; j < verts[i].size(); ++j) {
      comp_of[verts[i][j]] = static_cast<int>(i);
      local_id[verts[i][j]] = static_cast<int>(j);
    }
    out[i].graph = Graph(static_cast<int>(verts[i].size()));
  }
  for (int e = 0; e < g.edge_count(); ++e) {
    const Edge& ed = g.edge(e);
    comp_instance& ci = out[comp_of[ed.u]];
    ci.graph.add_edge(local_id[ed.u], local_id[ed.v]);
    ci.orig_edge.push_back(e);
  }
  return out;
}

enum class search_outcome { found, exhausted, timed_out };

// Backtracking search over one connected component. Edges are assigned in
// BFS order from a maximum-degree root, so after the first edge every edge
// has at least one endpoint with known colours. A candidate colour must be
// unused at both endpoints, keep each endpoint's span within its window,
// and leave the endpoint enough palette room for its remaining edges.
// Symmetry: the first edge's colour is capped at ceil(P/2), justified by
// the palette reversal c -> P+1-c.
class comp_solver {
 public:
  comp_solver(const Graph& g, int palette, std::vector<int> window,
              bool surjective,
              const std::optional<clock_type::time_point>& deadline,
              std::uint64_t seed)
      : g_(g),
        p_(palette),
        w_(std::move(window)),
        surjective_(surjective),
        deadline_(deadline) {
    int n = g_.vertex_count();
    int m = g_.edge_count();
    words_ = (p_ >> 6) + 1;
    mn_.assign(n, 0);
    mx_.assign(n, 0);
    cnt_.assign(n, 0);
    used_.assign(static_cast<std::size_t>(n) * words_, 0);
    colour_.assign(m, 0);
    use_count_.assign(p_ + 1, 0);
    tag_.resize(p_ + 1);
    for (int c = 0; c <= p_; ++c) tag_[c] = c;
    if (seed != 0) {
      std::mt19937_64 rng(seed);
      std::shuffle(tag_.begin() + 1, tag_.end(), rng);
    }
    cand_.resize(m);
    build_edge_order();
  }

  search_outcome run() {
    if (order_.empty()) return search_outcome::found;
    if (dfs(0)) return search_outcome::found;
    return timed_out_ ? search_outcome::timed_out : search_outcome::exhausted;
  }

  const std::vector<int>& witness() const { return colour_; }
  std::uint64_t nodes() const { return nodes_; }

 private:
  void build_edge_order() {
    int n = g_.vertex_count();
    int root = 0;
    for (int v = 1; v < n; ++v)
      if (g_.degree(v) > g_.degree(root)) root = v;
    std::vector<bool> vseen(n, false), eseen(g_.edge_count(), false);
    std::queue<int> q;
    q.push(root);
    vseen[root] = true;
    while (!q.empty()) {
      int x = q.front();
      q.pop();
      for (const AdjEntry& a : g_.neighbours(x)) {
        if (!eseen[a.edge]) {
          eseen[a.edge] = true;
          order_.push_back(a.edge);
        }
        if (!vseen[a.to]) {
          vseen[a.to] = true;
          q.push(a.to);
        }
      }
    }
  }

  bool colour_used(int v, int c) const {
    return (used_[static_cast<std::size_t>(v) * words_ + ((c - 1) >> 6)] >>
            ((c - 1) & 63)) &
           1u;
  }
  void flip_colour(int v, int c) {
    used_[static_cast<std::size_t>(v) * words_ + ((c - 1) >> 6)] ^=
        std::uint64_t{1} << ((c - 1) & 63);
  }

  // With colour c added at x, every completing window of length w_[x] lies
  // inside [mx-w+1, mn+w-1] clipped to the palette; x still needs degree(x)
  // distinct colours in there.
  bool room_ok(int x, int c) const {
    int new_mn = cnt_[x] ? std::min(mn_[x], c) : c;
    int new_mx = cnt_[x] ? std::max(mx_[x], c) : c;
    if (new_mx - new_mn + 1 > w_[x]) return false;
    int lo = std::max(1, new_mx - w_[x] + 1);
    int hi = std::min(p_, new_mn + w_[x] - 1);
    return hi - lo + 1 >= g_.degree(x);
  }

  int stretch_key(int x, int c) const {
    if (!cnt_[x]) return 0;
    if (c < mn_[x]) return mn_[x] - c;
    if (c > mx_[x]) return c - mx_[x];
    return 0;
  }

  bool dfs(std::size_t idx) {
    if (idx == order_.size()) return !surjective_ || distinct_ == p_;
    if (surjective_ &&
        static_cast<int>(order_.size() - idx) < p_ - distinct_)
      return false;
    int e = order_[idx];
    int u = g_.edge(e).u, v = g_.edge(e).v;
    int lo = 1, hi = p_;
    if (cnt_[u]) {
      lo = std::max(lo, mx_[u] - w_[u] + 1);
      hi = std::min(hi, mn_[u] + w_[u] - 1);
    }
    if (cnt_[v]) {
      lo = std::max(lo, mx_[v] - w_[v] + 1);
      hi = std::min(hi, mn_[v] + w_[v] - 1);
    }
    if (idx == 0) hi = std::min(hi, (p_ + 1) / 2);
    auto& cand = cand_[idx];
    cand.clear();
    for (int c = lo; c <= hi; ++c) {
      if (colour_used(u, c) || colour_used(v, c)) continue;
      if (!room_ok(u, c) || !room_ok(v, c)) continue;
      cand.push_back({(stretch_key(u, c) + stretch_key(v, c)) * (p_ + 1) +
                          tag_[c],
                      c});
    }
    std::sort(cand.begin(), cand.end());
    int old_mn_u = mn_[u], old_mx_u = mx_[u];
    int old_mn_v = mn_[v], old_mx_v = mx_[v];
    for (const auto& kc : cand) {
      int c = kc.second;
      ++nodes_;
      if ((nodes_ & 0x3fff) == 0 && deadline_ &&
          clock_type::now() > *deadline_) {
        timed_out_ = true;
        return false;
      }
      colour_[e] = c;
      flip_colour(u, c);
      flip_colour(v, c);
      mn_[u] = cnt_[u] ? std::min(mn_[u], c) : c;
      mx_[u] = cnt_[u] ? std::max(mx_[u], c) : c;
      ++cnt_[u];
      mn_[v] = cnt_[v] ? std::min(mn_[v], c) : c;
      mx_[v] = cnt_[v] ? std::max(mx_[v], c) : c;
      ++cnt_[v];
      if (++use_count_[c] == 1) ++distinct_;
      if (dfs(idx + 1)) return true;
      if (--use_count_[c] == 0) --distinct_;
      --cnt_[u];
      --cnt_[v];
      mn_[u] = old_mn_u;
      mx_[u] = old_mx_u;
      mn_[v] = old_mn_v;
      mx_[v] = old_mx_v;
      flip_colour(u, c);
      flip_colour(v, c);
      if (timed_out_) return false;
    }
    return false;
  }

  const Graph& g_;
  int p_;
  std::vector<int> w_;
  bool surjective_;
  std::optional<clock_type::time_point> deadline_;
  int words_ = 1;
  std::vector<int> order_, mn_, mx_, cnt_, colour_, use_count_, tag_;
  std::vector<std::uint64_t> used_;
  std::vector<std::vector<std::pair<int, int>>> cand_;
  int distinct_ = 0;
  std::uint64_t nodes_ = 0;
  bool timed_out_ = false;
};

std::vector<int> vertex_windows(const Graph& g, const Rational& alpha) {
  std::vector<int> w(g.vertex_count());
  for (int v = 0; v < g.vertex_count(); ++v)
    w[v] = static_cast<int>(alpha.floor_scaled(g.degree(v)));
  return w;
}

int complete_palette_bound(int n) { return std::max(1, 2 * n - 4); }

void check_options(const SolveOptions& opts) {
  if (opts.alpha < Rational(1, 1))
    throw std::invalid_argument("alpha must be at least 1");
  if (opts.palette_max && *opts.palette_max < 1)
    throw std::invalid_argument("palette_max must be at least 1");
}

}  // namespace

SolveResult decide_interval_colourable(const Graph& g,
                                       const SolveOptions& opts) {
  check_options(opts);
  std::optional<clock_type::time_point> deadline;
  if (opts.time_limit_ms)
    deadline = clock_type::now() + std::chrono::milliseconds(*opts.time_limit_ms);
  SolveResult res;
  EdgeColouring wit;
  wit.colour.assign(g.edge_count(), 0);
  bool any_unknown = false;
  for (const comp_instance& ci : split_components(g)) {
    int nc = ci.graph.vertex_count();
    int mc = ci.graph.edge_count();
    if (mc == 0) continue;
    int base = complete_palette_bound(nc);
    int palette =
        opts.palette_max
            ? *opts.palette_max
            : std::max(1, static_cast<int>(opts.alpha.floor_scaled(base)));
    bool complete = opts.alpha == Rational(1, 1) && palette >= base;
    comp_solver solver(ci.graph, palette, vertex_windows(ci.graph, opts.alpha),
                       false, deadline, opts.seed);
    search_outcome out = solver.run();
    res.nodes_explored += solver.nodes();
    if (out == search_outcome::timed_out) {
      res.status = SolveStatus::timeout;
      return res;
    }
    if (out == search_outcome::exhausted) {
      if (complete) {
        res.status = SolveStatus::not_colourable;
        return res;
      }
      any_unknown = true;  // palette not known complete: no verdict
      continue;
    }
    int shift = 0;
    if (mc > 0) {
      int low = solver.witness()[0];
      for (int c : solver.witness()) low = std::min(low, c);
      shift = 1 - low;
    }
    for (int e = 0; e < mc; ++e)
      wit.colour[ci.orig_edge[e]] = solver.witness()[e] + shift;
  }
  if (any_unknown) {
    res.status = SolveStatus::timeout;
    return res;
  }
  res.status = SolveStatus::colourable_with_witness;
  res.witness = std::move(wit);
  return res;
}

TMaxResult t_max(const Graph& g, const SolveOptions& opts) {
  check_options(opts);
  if (!(opts.alpha == Rational(1, 1)))
    throw std::invalid_argument("t_max requires alpha = 1");
  std::optional<clock_type::time_point> deadline;
  if (opts.time_limit_ms)
    deadline = clock_type::now() + std::chrono::milliseconds(*opts.time_limit_ms);
  TMaxResult res;
  long long total = 0;
  for (const comp_instance& ci : split_components(g)) {
    int nc = ci.graph.vertex_count();
    int mc = ci.graph.edge_count();
    if (mc == 0) continue;
    std::vector<int> windows = vertex_windows(ci.graph, Rational(1, 1));
    comp_solver decision(ci.graph, complete_palette_bound(nc), windows, false,
                         deadline, opts.seed);
    search_outcome out = decision.run();
    res.nodes_explored += decision.nodes();
    if (out == search_outcome::timed_out) {
      res.status = TMaxStatus::timeout;
      return res;
    }
    if (out == search_outcome::exhausted) {
      res.status = TMaxStatus::not_colourable;
      return res;
    }
    int lo_colour = decision.witness()[0], hi_colour = decision.witness()[0];
    for (int c : decision.witness()) {
      lo_colour = std::min(lo_colour, c);
      hi_colour = std::max(hi_colour, c);
    }
    int t_known = hi_colour - lo_colour + 1;  // witness span = distinct count
    int ub = std::min(mc, complete_palette_bound(nc));
    if (nc == 2) ub = 1;
    if (nc >= 3 && !has_triangle(ci.graph)) ub = std::min(ub, nc - 1);
    if (nc >= 3 && check_sparsity(ci.graph, Rational(3, 1)))
      ub = std::min(ub, 3 * nc / 2 - 2);
    int comp_t = t_known;
    for (int t = ub; t > t_known; --t) {
      comp_solver probe(ci.graph, t, windows, true, deadline, opts.seed);
      search_outcome pout = probe.run();
      res.nodes_explored += probe.nodes();
      if (pout == search_outcome::timed_out) {
        res.status = TMaxStatus::timeout;
        return res;
      }
      if (pout == search_outcome::found) {
        comp_t = t;
        break;
      }
    }
    total += comp_t;
  }
  res.status = TMaxStatus::found;
  res.value = static_cast<int>(total);
  return res;
}

}  // namespace icol
