#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace icol {

// Thrown by load_graph on malformed edge-list input; line() is 1-based.
class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what),
        line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

struct AdjEntry {
  int to;    // neighbour vertex
  int edge;  // edge index
};

struct Edge {
  int u;
  int v;
};

// Simple undirected graph on vertices 0..n-1. Edges carry stable indices in
// insertion order; colourings and decompositions reference edges by index.
// Immutable after construction (all mutation via add_edge during build).
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n);
  static Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges);

  int vertex_count() const { return n_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  const Edge& edge(int e) const { return edges_[e]; }
  const std::vector<Edge>& edges() const { return edges_; }
  const std::vector<AdjEntry>& neighbours(int v) const { return adj_[v]; }
  int degree(int v) const { return static_cast<int>(adj_[v].size()); }
  int max_degree() const;
  bool has_edge(int u, int v) const;

  // Rejects loops, duplicates and out-of-range endpoints. Returns the index.
  int add_edge(int u, int v);

 private:
  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<AdjEntry>> adj_;
};

// Subset of a graph's edge indices with cached cardinality.
class EdgeSubset {
 public:
  EdgeSubset() = default;
  explicit EdgeSubset(int universe) : member_(universe, false) {}
  static EdgeSubset full(int universe);
  static EdgeSubset from_indices(int universe, const std::vector<int>& idx);

  int universe() const { return static_cast<int>(member_.size()); }
  int count() const { return count_; }
  bool empty() const { return count_ == 0; }
  bool contains(int e) const { return member_[e]; }
  void add(int e);
  void remove(int e);
  std::vector<int> indices() const;

  friend bool operator==(const EdgeSubset&, const EdgeSubset&) = default;

 private:
  std::vector<bool> member_;
  int count_ = 0;
};

// Two-sided vertex labelling; side[v] is 0 (A) or 1 (B). valid means every
// edge of the graph it was computed for crosses sides.
struct Bipartition {
  std::vector<std::uint8_t> side;
  bool valid = false;
};

struct SubgraphResult {
  Graph graph;                 // same vertex set as the parent
  std::vector<int> orig_edge;  // new edge index -> parent edge index
};

struct MaxCutResult {
  Bipartition partition;  // valid iff every edge crosses (G bipartite)
  EdgeSubset crossing;
};

// Edge-list format: first line "n m"; then m lines "u v"; '#' starts a
// comment. Throws ParseError on malformed input.
Graph load_graph(std::istream& in);
Graph load_graph_string(const std::string& text);
Graph load_graph_file(const std::string& path);

// Canonical edge-list text; load(save(g)) is the identity on (n, edges).
std::string save_graph(const Graph& g);

std::vector<std::vector<int>> components(const Graph& g);

std::optional<Bipartition> bipartition(const Graph& g);

// Local-search max cut: one BFS-2-colouring start plus 8 random restarts,
// keep the best. Crossing set always has >= ceil(m/2) edges; on bipartite
// inputs the BFS start already yields the full edge set.
MaxCutResult max_cut_bipartite_subgraph(const Graph& g, std::uint64_t seed = 0);

SubgraphResult subgraph(const Graph& g, const EdgeSubset& edges);

bool has_triangle(const Graph& g);

// Exact planarity test (Demoucron's algorithm per biconnected component).
bool is_planar(const Graph& g);

}  // namespace icol
