#pragma once

#include <vector>

#include "icol/graph.hpp"

namespace icol {

// Independent reference implementations used to cross-check the main
// algorithms (corpus runs and tests). Deliberately kept free of any solver
// machinery: plain enumeration only.

// Brute-force interval colourability decision: enumerate proper colourings
// with palette 1..max(1, 2n-4) in input edge order, discarding a branch only
// on a properness conflict or when a vertex finishes with a non-consecutive
// colour set. Intended for n <= 6.
bool brute_force_interval_colourable(const Graph& g);

// Exhaustive t(G) for connected graphs: enumerates every interval colouring
// with palette 1..max(1, 2n-4) and reports the best distinct-colour count;
// -1 when no interval colouring exists. Intended for n <= 5.
int brute_force_t_max(const Graph& g);

// Nash-Williams subset formula: max over vertex subsets S, |S| >= 2, of
// ceil(e(G[S]) / (|S|-1)). Exponential; n <= ~20.
int arboricity_by_subsets(const Graph& g);

// All connected graphs on exactly n vertices, one representative per
// isomorphism class, in a deterministic order. Counts for n = 1..7:
// 1, 1, 2, 6, 21, 112, 853.
std::vector<Graph> enumerate_connected_graphs(int n);

// Exhaustive max cut value (2^n labellings); n <= ~20.
int max_cut_by_enumeration(const Graph& g);

// Minimum vertex-degree sum over all simple v-w paths, by DFS path
// enumeration; -1 if none. Cross-checks degree_sum_distance on small graphs.
long long degree_sum_distance_by_paths(const Graph& g, int v, int w);

}  // namespace icol
