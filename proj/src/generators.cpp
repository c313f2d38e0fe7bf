#include <algorithm>
#include <cmath>
#include <random>
#include <set>
#include <stdexcept>
#include <vector>

#include "icol/generators.hpp"

namespace icol {

namespace {

int isqrt(int n) {
  int r = static_cast<int>(std::sqrt(static_cast<double>(n)));
  while (r * r > n) --r;
  while ((r + 1) * (r + 1) <= n) ++r;
  return r;
}

}  // namespace

ExtremalGraph gen_extremal(const ExtremalSpec& spec) {
  if (spec.s < 2) throw std::invalid_argument("s must be at least 2");
  std::set<int> blue(spec.blue.begin(), spec.blue.end());
  if (blue.size() != spec.blue.size())
    throw std::invalid_argument("duplicate blue indices");
  for (int b : blue)
    if (b < 1 || b > spec.s - 2)
      throw std::invalid_argument("blue indices must lie in 1..s-2");
  int s = spec.s;
  auto id = [](int x, int row) { return 2 * (x - 1) + (row - 1); };
  int n = 2 * s + (spec.odd_extension ? 1 : 0);
  Graph g(n);
  EdgeColouring col;
  auto put = [&](int u, int v, int colour) {
    g.add_edge(u, v);
    col.colour.push_back(colour);
  };
  for (int x = 1; x <= s; ++x) put(id(x, 1), id(x, 2), 3 * x - 2);
  for (int x = 1; x < s; ++x) {
    put(id(x, 1), id(x + 1, 1), 3 * x);
    put(id(x, 2), id(x + 1, 2), 3 * x);
    put(id(x, 1), id(x + 1, 2), 3 * x - 1);
    put(id(x, 2), id(x + 1, 1), 3 * x - 1);
  }
  for (int b : blue) put(id(b, 1), id(b + 2, 1), 3 * b + 1);
  if (spec.odd_extension) {
    // the unique maximum-colour edge is the last vertical; its
    // lexicographically least endpoint is (s, 1)
    put(id(s, 1), 2 * s, 3 * s - 1);
  }
  ExtremalGraph out{std::move(g), std::move(col)};
  if (!verify_interval(out.graph, out.colouring))
    throw std::logic_error("extremal construction failed verification");
  return out;
}

LayerGraph gen_lower_bound_layer(const LowerBoundSpec& spec) {
  if (spec.a < 1 || spec.n < 1)
    throw std::invalid_argument("part sizes must be positive");
  if (!(Rational(0, 1) < spec.alpha) || spec.alpha > Rational(1, 2))
    throw std::invalid_argument("alpha must lie in (0, 1/2]");
  double p = spec.p ? *spec.p : 4.0 * spec.alpha.to_double() / 3.0;
  if (p < 0.0 || p > 1.0) throw std::invalid_argument("p must lie in [0, 1]");
  int target = static_cast<int>(spec.alpha.floor_scaled(spec.n));
  std::mt19937_64 rng(spec.seed);
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  Graph g(spec.a + spec.n);
  std::vector<std::vector<int>> rows(spec.a);
  for (int x = 0; x < spec.a; ++x) {
    std::vector<int> row;
    for (int attempt = 0; attempt < 100; ++attempt) {
      row.clear();
      for (int j = 0; j < spec.n; ++j)
        if (coin(rng) < p) row.push_back(j);
      if (!spec.trim) break;
      if (static_cast<int>(row.size()) >= target) {
        std::shuffle(row.begin(), row.end(), rng);
        row.resize(target);
        break;
      }
      row.clear();  // underfull: resample the whole vertex
    }
    if (spec.trim && static_cast<int>(row.size()) != target)
      throw std::runtime_error(
          "resampling budget exceeded; parameters outside the target regime");
    std::sort(row.begin(), row.end());
    rows[x] = std::move(row);
  }
  for (int x = 0; x < spec.a; ++x)
    for (int j : rows[x]) g.add_edge(x, spec.a + j);
  LayerGraph out;
  out.graph = std::move(g);
  out.bipartition.side.assign(spec.a + spec.n, 0);
  for (int v = spec.a; v < spec.a + spec.n; ++v) out.bipartition.side[v] = 1;
  out.bipartition.valid = true;
  return out;
}

StarPropertyReport check_star_property(const Graph& g, const Bipartition& bip,
                                       const Rational& alpha, int samples,
                                       std::uint64_t seed) {
  if (samples < 1) throw std::invalid_argument("need at least one sample");
  if (static_cast<int>(bip.side.size()) != g.vertex_count())
    throw std::invalid_argument("bipartition size mismatch");
  std::vector<int> left, right;
  for (int v = 0; v < g.vertex_count(); ++v)
    (bip.side[v] == 0 ? left : right).push_back(v);
  StarPropertyReport report;
  if (right.empty()) return report;
  std::vector<int> sizes;
  for (int sz = 1; sz <= static_cast<int>(right.size()); sz *= 2)
    sizes.push_back(sz);
  std::mt19937_64 rng(seed);
  long long nn = static_cast<long long>(right.size());
  std::vector<char> in_u(g.vertex_count(), 0);
  for (int i = 0; i < samples; ++i) {
    int size = sizes[i % sizes.size()];
    std::vector<int> pool = right;
    std::shuffle(pool.begin(), pool.end(), rng);
    pool.resize(size);
    for (int v : pool) in_u[v] = 1;
    int over = 0;
    for (int y : left) {
      int hit = 0;
      for (const AdjEntry& a : g.neighbours(y))
        if (in_u[a.to]) ++hit;
      // |U cap N(y)| > 2 alpha |U|, compared exactly
      if (static_cast<long long>(hit) * alpha.den() >
          2 * alpha.num() * static_cast<long long>(size))
        ++over;
    }
    for (int v : pool) in_u[v] = 0;
    StarSample sample;
    sample.subset_size = size;
    sample.over_count = over;
    sample.threshold =
        24.0 * static_cast<double>(nn) / (alpha.to_double() * size);
    // over <= 24 n / (alpha |U|), compared exactly
    sample.pass = static_cast<long long>(over) * alpha.num() * size <=
                  24 * nn * alpha.den();
    if (!sample.pass) ++report.violations;
    report.samples.push_back(sample);
  }
  report.violation_rate =
      static_cast<double>(report.violations) / report.samples.size();
  return report;
}

UnionGraph gen_union(const UnionSpec& spec) {
  if (spec.t < 1) throw std::invalid_argument("t must be at least 1");
  if (spec.n < 1 || (spec.n >> spec.t) < 1)
    throw std::invalid_argument("n must satisfy floor(n / 2^t) >= 1");
  int a = isqrt(spec.n);
  UnionGraph out;
  out.left_block = a;
  out.graph = Graph(spec.n + spec.t * a);
  out.bipartition.side.assign(spec.n + spec.t * a, 0);
  for (int v = 0; v < spec.n; ++v) out.bipartition.side[v] = 1;
  out.bipartition.valid = true;
  for (int layer = 1; layer <= spec.t; ++layer) {
    LowerBoundSpec ls;
    ls.a = a;
    ls.n = spec.n;
    ls.alpha = Rational(1, 1LL << layer);
    ls.seed = spec.seed ^ (0x9e3779b97f4a7c15ull * layer);
    ls.trim = true;
    LayerGraph lg = gen_lower_bound_layer(ls);
    int base = spec.n + (layer - 1) * a;
    for (const Edge& e : lg.graph.edges()) {
      int x = e.u < a ? e.u : e.v;  // left endpoint in the layer graph
      int j = (e.u < a ? e.v : e.u) - a;
      out.graph.add_edge(base + x, j);
      out.edge_layer.push_back(layer);
    }
  }
  return out;
}

namespace {

Graph prufer_tree(int n, std::mt19937_64& rng) {
  Graph g(n);
  if (n <= 1) return g;
  if (n == 2) {
    g.add_edge(0, 1);
    return g;
  }
  std::uniform_int_distribution<int> pick(0, n - 1);
  std::vector<int> seq(n - 2);
  for (int& x : seq) x = pick(rng);
  std::vector<int> deg(n, 1);
  for (int x : seq) ++deg[x];
  std::set<int> leaves;
  for (int v = 0; v < n; ++v)
    if (deg[v] == 1) leaves.insert(v);
  std::vector<std::pair<int, int>> edges;
  for (int x : seq) {
    int leaf = *leaves.begin();
    leaves.erase(leaves.begin());
    edges.push_back({std::min(leaf, x), std::max(leaf, x)});
    if (--deg[x] == 1) leaves.insert(x);
  }
  int u = *leaves.begin(), v = *std::next(leaves.begin());
  edges.push_back({std::min(u, v), std::max(u, v)});
  for (const auto& [p, q] : edges) g.add_edge(p, q);
  return g;
}

Graph biregular(int a, int b, int d_a, int d_b, std::mt19937_64& rng) {
  if (a < 1 || b < 1 || d_a < 1 || d_b < 1)
    throw std::invalid_argument("biregular parameters must be positive");
  if (a * d_a != b * d_b)
    throw std::invalid_argument("biregular requires a*d_A = b*d_B");
  if (d_a > b || d_b > a)
    throw std::invalid_argument("biregular degree exceeds the opposite side");
  int stubs = a * d_a;
  std::vector<int> left(stubs), right(stubs);
  for (int i = 0; i < stubs; ++i) left[i] = i / d_a;
  for (int i = 0; i < stubs; ++i) right[i] = i / d_b;
  std::uniform_int_distribution<int> pick(0, stubs - 1);
  for (int round = 0; round < 100; ++round) {
    std::shuffle(right.begin(), right.end(), rng);
    // repair multi-edges by random transpositions of right stubs
    auto pair_count = [&](int i) {
      int c = 0;
      for (int j = 0; j < stubs; ++j)
        if (left[j] == left[i] && right[j] == right[i]) ++c;
      return c;
    };
    bool clean = false;
    for (int tries = 0; tries < 20000; ++tries) {
      int bad = -1;
      for (int i = 0; i < stubs; ++i)
        if (pair_count(i) > 1) {
          bad = i;
          break;
        }
      if (bad < 0) {
        clean = true;
        break;
      }
      int j = pick(rng);
      std::swap(right[bad], right[j]);
      if (pair_count(bad) > 1 || pair_count(j) > 1)
        std::swap(right[bad], right[j]);  // swap made things no better
    }
    if (!clean) continue;
    Graph g(a + b);
    for (int i = 0; i < stubs; ++i) g.add_edge(left[i], a + right[i]);
    return g;
  }
  throw std::runtime_error("biregular sampling failed to avoid multi-edges");
}

}  // namespace

Graph gen_standard(Family family, const FamilyParams& params,
                   std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  switch (family) {
    case Family::path: {
      if (params.n < 1) throw std::invalid_argument("path needs n >= 1");
      Graph g(params.n);
      for (int v = 0; v + 1 < params.n; ++v) g.add_edge(v, v + 1);
      return g;
    }
    case Family::cycle: {
      if (params.n < 3) throw std::invalid_argument("cycle needs n >= 3");
      Graph g(params.n);
      for (int v = 0; v + 1 < params.n; ++v) g.add_edge(v, v + 1);
      g.add_edge(params.n - 1, 0);
      return g;
    }
    case Family::complete: {
      if (params.n < 1) throw std::invalid_argument("complete needs n >= 1");
      Graph g(params.n);
      for (int u = 0; u < params.n; ++u)
        for (int v = u + 1; v < params.n; ++v) g.add_edge(u, v);
      return g;
    }
    case Family::complete_bipartite: {
      if (params.a < 1 || params.b < 1)
        throw std::invalid_argument("complete_bipartite needs a, b >= 1");
      Graph g(params.a + params.b);
      for (int u = 0; u < params.a; ++u)
        for (int v = 0; v < params.b; ++v) g.add_edge(u, params.a + v);
      return g;
    }
    case Family::random_tree: {
      if (params.n < 1) throw std::invalid_argument("random_tree needs n >= 1");
      return prufer_tree(params.n, rng);
    }
    case Family::random_biregular:
      return biregular(params.a, params.b, params.d_a, params.d_b, rng);
    case Family::knsqrtn: {
      if (params.n < 1) throw std::invalid_argument("knsqrtn needs n >= 1");
      int b = isqrt(params.n);
      Graph g(params.n + b);
      for (int u = 0; u < params.n; ++u)
        for (int v = 0; v < b; ++v) g.add_edge(u, params.n + v);
      return g;
    }
  }
  throw std::invalid_argument("unknown family");
}

}  // namespace icol
