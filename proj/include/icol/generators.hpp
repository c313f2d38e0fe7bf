#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "icol/colouring.hpp"
#include "icol/graph.hpp"
#include "icol/rational.hpp"

namespace icol {

// 2 x s grid-like planar family. Vertex (x, row) for x in 1..s, row in
// {1, 2} is index 2(x-1) + (row-1); the optional pendant vertex is 2s.
struct ExtremalSpec {
  int s = 2;
  std::vector<int> blue;  // subset of {1..s-2}, long edges (b,1)-(b+2,1)
  bool odd_extension = false;
};

struct ExtremalGraph {
  Graph graph;
  EdgeColouring colouring;  // verified at construction; 3s-2 (+1) colours
};

// Colour formulas: verticals 3x-2, horizontals 3x, diagonals 3x-1, blue
// 3b+1; the odd extension hangs a pendant coloured t+1 off the
// lexicographically least endpoint of a maximum-colour edge.
ExtremalGraph gen_extremal(const ExtremalSpec& spec);

struct LowerBoundSpec {
  int a = 1;               // left part size
  int n = 1;               // right part size
  Rational alpha{1, 2};    // in (0, 1/2]
  std::optional<double> p; // edge probability, default 4*alpha/3
  std::uint64_t seed = 0;
  bool trim = true;        // enforce left degrees exactly floor(alpha*n)
};

struct LayerGraph {
  Graph graph;        // A = 0..a-1, B = a..a+n-1
  Bipartition bipartition;
};

// Random bipartite layer; with trim, overfull left vertices lose uniformly
// random edges and underfull ones are resampled (up to 100 attempts each)
// until every left degree is exactly floor(alpha*n).
LayerGraph gen_lower_bound_layer(const LowerBoundSpec& spec);

struct StarSample {
  int subset_size = 0;
  int over_count = 0;      // left vertices y with |U cap N(y)| > 2*alpha*|U|
  double threshold = 0.0;  // 24n / (alpha |U|)
  bool pass = true;
};

struct StarPropertyReport {
  std::vector<StarSample> samples;
  int violations = 0;
  double violation_rate = 0.0;
};

// Statistical spot check of the pseudo-randomness property: samples random
// subsets U of the right side (sizes stratified over powers of two) and
// tests the over-representation count against 24n/(alpha |U|).
StarPropertyReport check_star_property(const Graph& g, const Bipartition& bip,
                                       const Rational& alpha, int samples,
                                       std::uint64_t seed);

struct UnionSpec {
  int n = 2;  // shared right part size; requires floor(n / 2^t) >= 1
  int t = 1;  // number of layers, alpha_i = 2^-i
  std::uint64_t seed = 0;
};

struct UnionGraph {
  Graph graph;  // B = 0..n-1, layer i left block follows at n+(i-1)*a
  Bipartition bipartition;
  std::vector<int> edge_layer;  // per edge, 1-based layer index
  int left_block = 0;           // a = floor(sqrt(n))
};

// Union of t trimmed layers sharing the right part B, disjoint left parts of
// size floor(sqrt(n)), alpha_i = 2^-i.
UnionGraph gen_union(const UnionSpec& spec);

enum class Family {
  path,
  cycle,
  complete,
  complete_bipartite,
  random_tree,
  random_biregular,
  knsqrtn
};

struct FamilyParams {
  int n = 0;
  int a = 0;
  int b = 0;
  int d_a = 0;
  int d_b = 0;
};

// Standard graph families; random ones deterministic under seed. Biregular
// uses the configuration model with edge-swap repair of multi-edges.
Graph gen_standard(Family family, const FamilyParams& params,
                   std::uint64_t seed = 0);

}  // namespace icol
