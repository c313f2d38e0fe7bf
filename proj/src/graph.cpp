#include "icol/graph.hpp"

#include <algorithm>
#include <fstream>
#include <queue>
#include <random>
#include <sstream>

namespace icol {

Graph::Graph(int n) : n_(n) {
  if (n < 0) throw std::invalid_argument("Graph: negative vertex count");
  adj_.resize(n);
}

Graph Graph::from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
  Graph g(n);
  for (const auto& [u, v] : edges) g.add_edge(u, v);
  return g;
}

int Graph::max_degree() const {
  int d = 0;
  for (int v = 0; v < n_; ++v) d = std::max(d, degree(v));
  return d;
}

bool Graph::has_edge(int u, int v) const {
  for (const AdjEntry& a : adj_[u])
    if (a.to == v) return true;
  return false;
}

int Graph::add_edge(int u, int v) {
  if (u < 0 || v < 0 || u >= n_ || v >= n_)
    throw std::invalid_argument("add_edge: vertex out of range");
  if (u == v) throw std::invalid_argument("add_edge: self-loop");
  if (has_edge(u, v)) throw std::invalid_argument("add_edge: duplicate edge");
  int idx = static_cast<int>(edges_.size());
  edges_.push_back({u, v});
  adj_[u].push_back({v, idx});
  adj_[v].push_back({u, idx});
  return idx;
}

EdgeSubset EdgeSubset::full(int universe) {
  EdgeSubset s(universe);
  s.member_.assign(universe, true);
  s.count_ = universe;
  return s;
}

EdgeSubset EdgeSubset::from_indices(int universe, const std::vector<int>& idx) {
  EdgeSubset s(universe);
  for (int e : idx) s.add(e);
  return s;
}

void EdgeSubset::add(int e) {
  if (e < 0 || e >= universe())
    throw std::out_of_range("EdgeSubset: index out of range");
  if (!member_[e]) {
    member_[e] = true;
    ++count_;
  }
}

void EdgeSubset::remove(int e) {
  if (e < 0 || e >= universe())
    throw std::out_of_range("EdgeSubset: index out of range");
  if (member_[e]) {
    member_[e] = false;
    --count_;
  }
}

std::vector<int> EdgeSubset::indices() const {
  std::vector<int> out;
  out.reserve(count_);
  for (int e = 0; e < universe(); ++e)
    if (member_[e]) out.push_back(e);
  return out;
}

namespace {

// Strips a '#'-comment, returns remaining fields or empty for blank lines.
std::vector<std::string> data_fields(const std::string& line) {
  std::string body = line.substr(0, line.find('#'));
  std::istringstream ss(body);
  std::vector<std::string> fields;
  std::string f;
  while (ss >> f) fields.push_back(f);
  return fields;
}

int parse_int(const std::string& s, int line_no, const char* what) {
  try {
    std::size_t pos = 0;
    int v = std::stoi(s, &pos);
    if (pos != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw ParseError(line_no, std::string("expected integer ") + what +
                                  ", got '" + s + "'");
  }
}

}  // namespace

Graph load_graph(std::istream& in) {
  std::string line;
  int line_no = 0;
  int n = -1, m = -1;
  Graph g;
  int seen = 0;
  while (std::getline(in, line)) {
    ++line_no;
    auto fields = data_fields(line);
    if (fields.empty()) continue;
    if (n < 0) {
      if (fields.size() != 2)
        throw ParseError(line_no, "expected header 'n m'");
      n = parse_int(fields[0], line_no, "n");
      m = parse_int(fields[1], line_no, "m");
      if (n < 0 || m < 0) throw ParseError(line_no, "negative count in header");
      g = Graph(n);
      continue;
    }
    if (seen >= m) throw ParseError(line_no, "more edges than declared");
    if (fields.size() != 2) throw ParseError(line_no, "expected edge 'u v'");
    int u = parse_int(fields[0], line_no, "u");
    int v = parse_int(fields[1], line_no, "v");
    try {
      g.add_edge(u, v);
    } catch (const std::invalid_argument& e) {
      throw ParseError(line_no, e.what());
    }
    ++seen;
  }
  if (n < 0) throw ParseError(line_no, "missing header 'n m'");
  if (seen != m)
    throw ParseError(line_no, "declared " + std::to_string(m) +
                                  " edges, found " + std::to_string(seen));
  return g;
}

Graph load_graph_string(const std::string& text) {
  std::istringstream ss(text);
  return load_graph(ss);
}

Graph load_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  return load_graph(in);
}

std::string save_graph(const Graph& g) {
  std::ostringstream out;
  out << g.vertex_count() << ' ' << g.edge_count() << '\n';
  for (const Edge& e : g.edges()) out << e.u << ' ' << e.v << '\n';
  return out.str();
}

std::vector<std::vector<int>> components(const Graph& g) {
  int n = g.vertex_count();
  std::vector<int> comp(n, -1);
  std::vector<std::vector<int>> out;
  for (int s = 0; s < n; ++s) {
    if (comp[s] >= 0) continue;
    int id = static_cast<int>(out.size());
    out.emplace_back();
    std::queue<int> q;
    q.push(s);
    comp[s] = id;
    while (!q.empty()) {
      int v = q.front();
      q.pop();
      out[id].push_back(v);
      for (const AdjEntry& a : g.neighbours(v)) {
        if (comp[a.to] < 0) {
          comp[a.to] = id;
          q.push(a.to);
        }
      }
    }
    std::sort(out[id].begin(), out[id].end());
  }
  return out;
}

std::optional<Bipartition> bipartition(const Graph& g) {
  int n = g.vertex_count();
  Bipartition bip;
  bip.side.assign(n, 0);
  std::vector<int> seen(n, 0);
  for (int s = 0; s < n; ++s) {
    if (seen[s]) continue;
    seen[s] = 1;
    bip.side[s] = 0;
    std::queue<int> q;
    q.push(s);
    while (!q.empty()) {
      int v = q.front();
      q.pop();
      for (const AdjEntry& a : g.neighbours(v)) {
        if (!seen[a.to]) {
          seen[a.to] = 1;
          bip.side[a.to] = bip.side[v] ^ 1;
          q.push(a.to);
        } else if (bip.side[a.to] == bip.side[v]) {
          return std::nullopt;
        }
      }
    }
  }
  bip.valid = true;
  return bip;
}

namespace {

// BFS 2-colouring ignoring conflicts: a sensible start that is exact on
// bipartite inputs.
std::vector<std::uint8_t> bfs_labels(const Graph& g) {
  int n = g.vertex_count();
  std::vector<std::uint8_t> side(n, 0);
  std::vector<int> seen(n, 0);
  for (int s = 0; s < n; ++s) {
    if (seen[s]) continue;
    seen[s] = 1;
    std::queue<int> q;
    q.push(s);
    while (!q.empty()) {
      int v = q.front();
      q.pop();
      for (const AdjEntry& a : g.neighbours(v)) {
        if (!seen[a.to]) {
          seen[a.to] = 1;
          side[a.to] = side[v] ^ 1;
          q.push(a.to);
        }
      }
    }
  }
  return side;
}

int crossing_count(const Graph& g, const std::vector<std::uint8_t>& side) {
  int c = 0;
  for (const Edge& e : g.edges())
    if (side[e.u] != side[e.v]) ++c;
  return c;
}

// First-improvement sweeps until a local optimum: every vertex then has at
// least half its edges crossing, so the cut is >= ceil(m/2).
void improve(const Graph& g, std::vector<std::uint8_t>& side) {
  int n = g.vertex_count();
  bool moved = true;
  while (moved) {
    moved = false;
    for (int v = 0; v < n; ++v) {
      int cross = 0, same = 0;
      for (const AdjEntry& a : g.neighbours(v))
        (side[a.to] != side[v] ? cross : same)++;
      if (same > cross) {
        side[v] ^= 1;
        moved = true;
      }
    }
  }
}

}  // namespace

MaxCutResult max_cut_bipartite_subgraph(const Graph& g, std::uint64_t seed) {
  int n = g.vertex_count();
  std::mt19937_64 rng(seed);
  std::vector<std::uint8_t> best = bfs_labels(g);
  improve(g, best);
  int best_cut = crossing_count(g, best);
  for (int restart = 0; restart < 8; ++restart) {
    std::vector<std::uint8_t> side(n);
    for (int v = 0; v < n; ++v) side[v] = static_cast<std::uint8_t>(rng() & 1);
    improve(g, side);
    int cut = crossing_count(g, side);
    if (cut > best_cut) {
      best_cut = cut;
      best = side;
    }
  }
  MaxCutResult res;
  res.partition.side = best;
  res.partition.valid = (best_cut == g.edge_count());
  res.crossing = EdgeSubset(g.edge_count());
  for (int e = 0; e < g.edge_count(); ++e)
    if (best[g.edge(e).u] != best[g.edge(e).v]) res.crossing.add(e);
  return res;
}

SubgraphResult subgraph(const Graph& g, const EdgeSubset& edges) {
  if (edges.universe() != g.edge_count())
    throw std::invalid_argument("subgraph: subset universe mismatch");
  SubgraphResult out;
  out.graph = Graph(g.vertex_count());
  for (int e = 0; e < g.edge_count(); ++e) {
    if (edges.contains(e)) {
      out.graph.add_edge(g.edge(e).u, g.edge(e).v);
      out.orig_edge.push_back(e);
    }
  }
  return out;
}

bool has_triangle(const Graph& g) {
  int n = g.vertex_count();
  std::vector<std::vector<char>> adj(n, std::vector<char>(n, 0));
  for (const Edge& e : g.edges()) adj[e.u][e.v] = adj[e.v][e.u] = 1;
  for (const Edge& e : g.edges())
    for (int w = 0; w < n; ++w)
      if (adj[e.u][w] && adj[e.v][w]) return true;
  return false;
}

}  // namespace icol
