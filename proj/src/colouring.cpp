#include <algorithm>
#include <stdexcept>
#include <vector>

#include "icol/colouring.hpp"

namespace icol {

namespace {

void validate_assignment(const Graph& g, const EdgeColouring& c) {
  if (static_cast<int>(c.colour.size()) != g.edge_count())
    throw std::invalid_argument("colouring size does not match edge count");
  for (int col : c.colour)
    if (col < 1) throw std::invalid_argument("edge colours must be >= 1");
}

}  // namespace

bool verify_interval(const Graph& g, const EdgeColouring& c) {
  validate_assignment(g, c);
  std::vector<int> seen;
  for (int v = 0; v < g.vertex_count(); ++v) {
    if (g.degree(v) == 0) continue;
    seen.clear();
    for (const AdjEntry& a : g.neighbours(v)) seen.push_back(c.colour[a.edge]);
    std::sort(seen.begin(), seen.end());
    for (std::size_t i = 1; i < seen.size(); ++i)
      if (seen[i] != seen[i - 1] + 1) return false;
  }
  return true;
}

bool verify_alpha_interval(const Graph& g, const EdgeColouring& c,
                           const Rational& alpha) {
  validate_assignment(g, c);
  if (alpha < Rational(1, 1))
    throw std::invalid_argument("alpha must be at least 1");
  std::vector<int> seen;
  for (int v = 0; v < g.vertex_count(); ++v) {
    if (g.degree(v) == 0) continue;
    seen.clear();
    for (const AdjEntry& a : g.neighbours(v)) seen.push_back(c.colour[a.edge]);
    std::sort(seen.begin(), seen.end());
    for (std::size_t i = 1; i < seen.size(); ++i)
      if (seen[i] == seen[i - 1]) return false;
    int span = seen.back() - seen.front() + 1;
    if (span > alpha.floor_scaled(g.degree(v))) return false;
  }
  return true;
}

std::optional<SplitParts> split_at_unique_colour(const Graph& g,
                                                 const EdgeColouring& c) {
  int m = g.edge_count();
  if (m == 0) return std::nullopt;
  if (!verify_interval(g, c)) return std::nullopt;
  if (components(g).size() != 1) return std::nullopt;
  int lo = *std::min_element(c.colour.begin(), c.colour.end());
  int hi = *std::max_element(c.colour.begin(), c.colour.end());
  std::vector<int> uses(hi + 1, 0);
  for (int e = 0; e < m; ++e) ++uses[c.colour[e]];
  for (int gamma = lo + 1; gamma < hi; ++gamma) {
    if (uses[gamma] != 1) continue;
    SplitParts parts;
    parts.gamma = gamma;
    parts.lower = EdgeSubset(m);
    parts.upper = EdgeSubset(m);
    for (int e = 0; e < m; ++e) {
      if (c.colour[e] <= gamma)
        parts.lower.add(e);
      else
        parts.upper.add(e);
    }
    return parts;
  }
  return std::nullopt;
}

}  // namespace icol
