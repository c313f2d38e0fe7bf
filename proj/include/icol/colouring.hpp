#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "icol/graph.hpp"
#include "icol/rational.hpp"

namespace icol {

// colour[e] is the colour of edge e, always >= 1 once assigned.
struct EdgeColouring {
  std::vector<int> colour;
};

// True iff c is proper and every vertex of positive degree sees a set of
// consecutive integers. Throws std::invalid_argument if c does not assign a
// positive colour to every edge.
bool verify_interval(const Graph& g, const EdgeColouring& c);

// True iff c is proper and every vertex's incident colours fit in a window of
// size floor(alpha * d(x)). alpha = 1 is equivalent to verify_interval.
bool verify_alpha_interval(const Graph& g, const EdgeColouring& c,
                           const Rational& alpha);

struct SolveOptions {
  std::optional<int> palette_max;  // per-component cap; default max(1, 2n-4)
  Rational alpha{1, 1};            // per-vertex window factor, >= 1
  std::optional<long long> time_limit_ms;
  std::uint64_t seed = 0;  // branching tie randomization; 0 = none
};

enum class SolveStatus { colourable_with_witness, not_colourable, timeout };

struct SolveResult {
  SolveStatus status = SolveStatus::timeout;
  std::optional<EdgeColouring> witness;
  std::uint64_t nodes_explored = 0;
};

// Complete decision when the palette cap is at least max(1, 2n-4) per
// component (the default). Components are solved independently; witnesses are
// normalized so each component's minimum colour is 1. Exhausting a palette
// that is not known complete (alpha > 1, or an explicit cap below the
// completeness bound) reports timeout rather than not-colourable.
SolveResult decide_interval_colourable(const Graph& g,
                                       const SolveOptions& opts = {});

enum class TMaxStatus { found, not_colourable, timeout };

struct TMaxResult {
  TMaxStatus status = TMaxStatus::timeout;
  std::optional<int> value;
  std::uint64_t nodes_explored = 0;
};

// Exact t(G): maximum number of distinct colours over interval colourings.
// Sum over components for disconnected graphs (components may use disjoint
// palettes). Scans t downward from the best applicable upper bound, asking
// for a colouring using colours exactly 1..t.
TMaxResult t_max(const Graph& g, const SolveOptions& opts = {});

struct SplitParts {
  int gamma = 0;     // the uniquely used interior colour
  EdgeSubset lower;  // edges coloured < gamma, plus the unique edge itself
  EdgeSubset upper;  // edges coloured > gamma
};

// For a verified interval colouring of a connected graph: if some interior
// colour gamma is used by exactly one edge vw, every other vertex sees only
// colours < gamma or only colours > gamma, and the edge set splits into two
// parts whose induced colourings are both interval. The unique edge goes to
// the lower part so the parts cover E(G) without overlap.
std::optional<SplitParts> split_at_unique_colour(const Graph& g,
                                                 const EdgeColouring& c);

}  // namespace icol
