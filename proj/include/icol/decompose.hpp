#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "icol/colouring.hpp"
#include "icol/graph.hpp"
#include "icol/rational.hpp"

namespace icol {

enum class PartKind { forest, regular_bipartite, generic };

// One part of an edge decomposition. colours, when present, are indexed by
// the part's edges in ascending original edge index (the order produced by
// subgraph(g, edges)).
struct Part {
  EdgeSubset edges;
  PartKind kind = PartKind::generic;
  std::optional<EdgeColouring> colours;
  std::optional<int> regularity;
};

struct Decomposition {
  std::vector<Part> parts;
};

struct ThicknessResult {
  int theta = 0;
  Decomposition decomposition;
  bool exact = false;
};

struct PipelineConfig {
  // Edge-count cutoffs, strictly decreasing. Empty means a geometric
  // schedule m/2, m/4, ... derived from the input.
  std::vector<int> density_thresholds;
  int min_regularity = 2;
  std::uint64_t max_cut_seed = 0;
};

// Interval colouring of a forest subset: root each tree, walk outward, and
// give the edges past a vertex entered by colour gamma the colours
// gamma+1, gamma+2, ... so every incident set stays consecutive.
// Throws std::invalid_argument if the subset contains a cycle.
EdgeColouring colour_forest(const Graph& g, const EdgeSubset& edges);

// Exact minimum forest partition (Nash-Williams arboricity many forests) by
// matroid-union augmenting paths. Count is always <= ceil(sqrt(m/2)).
std::vector<EdgeSubset> forest_decomposition(const Graph& g);

// Edge set in which every covered vertex has degree exactly r: peel vertices
// of degree < r, balance the sides, then solve the exact-degree instance as
// a feasible circulation (maximum flow with unit edge capacities). Greedy on
// covered vertices, not optimal; nullopt when the heuristic finds nothing.
std::optional<EdgeSubset> find_regular_bipartite(const Graph& g,
                                                 const Bipartition& bip,
                                                 int r);

// Colours 1..r, each colour class a perfect matching on the covered
// vertices (repeated augmenting-path matching; existence guaranteed by
// regularity). Throws on a subset that is not r-regular bipartite.
EdgeColouring colour_regular_bipartite(const Graph& g, const EdgeSubset& edges,
                                       int r);

// While the remainder is denser than the current threshold, extract the
// largest-r regular bipartite part from a max-cut crossing subgraph; finish
// with an exact forest partition. Every part carries a verified colouring;
// parts partition E(G).
Decomposition decompose_pipeline(const Graph& g, const PipelineConfig& cfg = {});

enum class ThetaStatus { found, infeasible, timeout };

struct ThetaExactOutcome {
  ThetaStatus status = ThetaStatus::infeasible;
  std::optional<ThicknessResult> result;
  std::uint64_t nodes_explored = 0;
};

// Exact interval colouring thickness by searching assignments of edges to
// k unlabelled parts for k = 1..k_max (edge i may only open part number
// opened+1; part colourability memoized on the exact edge bitmask, m <= 64).
// Intended for e(G) <= ~12 or with tight time limits.
ThetaExactOutcome theta_exact(const Graph& g, int k_max,
                              const SolveOptions& opts = {});

// Pipeline part count as a non-exact upper bound with witness decomposition.
ThicknessResult theta_upper(const Graph& g, const PipelineConfig& cfg = {});

// True iff every subgraph H on >= 3 vertices has e(H) <= k(|V(H)|-2).
// Subset enumeration for n <= 20; exact flow reduction (max-weight closure
// per forced vertex triple) above that.
bool check_sparsity(const Graph& g, const Rational& k);

struct TBoundEntry {
  std::string name;
  bool applicable = false;
  double bound = 0.0;  // display value; satisfied is decided exactly
  bool satisfied = true;
};

struct TBoundsReport {
  std::vector<TBoundEntry> entries;
  bool all_satisfied = true;  // over applicable entries
};

// Evaluates t against every applicable upper bound: 2n-4 (n >= 3), n-1 when
// triangle-free, and (k/2)n+1-k for each k in {2, 5/2, 3, 7/2, 4} where
// check_sparsity passes.
TBoundsReport check_t_bounds(const Graph& g, int t);

}  // namespace icol
