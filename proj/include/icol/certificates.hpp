#pragma once

#include <optional>
#include <string>
#include <vector>

#include "icol/graph.hpp"

namespace icol {

// Witness that G is not interval colourable: a vertex set U whose pairs are
// all connected by paths of vertex-degree sum <= d, together with a vertex
// u seeing more than d members of U. Paths are stored for every unordered
// pair (U[i], U[j]), i < j, in lexicographic index order, when |U| <= 64;
// larger certificates omit paths and are re-checked via degree_sum_distance.
struct NonColourabilityCertificate {
  std::vector<int> U;
  int d = 0;
  int u = 0;
  std::vector<std::vector<int>> paths;
};

// Minimum over v-w paths of the sum of ambient degrees of the path's
// vertices (endpoints included); nullopt if v and w are disconnected.
std::optional<long long> degree_sum_distance(const Graph& g, int v, int w);

struct CertCheckResult {
  bool ok = false;
  std::string reason;  // "ok", "no violation", "bad path", ...
};

// True iff the certificate verifies against G; a true result is a sound
// proof of non-colourability (contrapositive of the degree-sum observation).
CertCheckResult check_certificate(const Graph& g,
                                  const NonColourabilityCertificate& cert);

enum class CertEffort { neighbourhoods, balls, exhaustive };

// Heuristic search over candidate sets U: open neighbourhoods, closed balls
// of radius <= 3, or (exhaustive, n <= 20 only) all subsets. Returns the
// first certificate found; many non-colourable graphs have none — odd
// cycles, for example, are non-colourable yet certificate-free.
std::optional<NonColourabilityCertificate> search_certificate(
    const Graph& g, CertEffort effort);

}  // namespace icol
