#include <algorithm>
#include <climits>
#include <queue>
#include <vector>

#include "icol/certificates.hpp"

namespace icol {

namespace {

constexpr long long kUnreachable = -1;

// Dijkstra with vertex weights: cost of a path is the sum of ambient degrees
// of its vertices, endpoints included. All weights positive, so the optimum
// is attained on a simple path.
std::vector<long long> dsd_from(const Graph& g, int source,
                                std::vector<int>* parent = nullptr) {
  int n = g.vertex_count();
  std::vector<long long> dist(n, kUnreachable);
  if (parent) parent->assign(n, -1);
  using item = std::pair<long long, int>;
  std::priority_queue<item, std::vector<item>, std::greater<item>> pq;
  dist[source] = g.degree(source);
  pq.push({dist[source], source});
  while (!pq.empty()) {
    auto [d, x] = pq.top();
    pq.pop();
    if (d != dist[x]) continue;
    for (const AdjEntry& a : g.neighbours(x)) {
      long long cand = d + g.degree(a.to);
      if (dist[a.to] == kUnreachable || cand < dist[a.to]) {
        dist[a.to] = cand;
        if (parent) (*parent)[a.to] = x;
        pq.push({cand, a.to});
      }
    }
  }
  return dist;
}

CertCheckResult fail(const std::string& reason) { return {false, reason}; }

std::optional<NonColourabilityCertificate> build_certificate(
    const Graph& g, const std::vector<int>& members, long long dmax) {
  // the violation needs a vertex seeing more than dmax members
  int best_u = -1, best_count = 0;
  for (int u = 0; u < g.vertex_count(); ++u) {
    int count = 0;
    for (const AdjEntry& a : g.neighbours(u))
      if (std::binary_search(members.begin(), members.end(), a.to)) ++count;
    if (count > best_count) {
      best_count = count;
      best_u = u;
    }
  }
  if (best_u < 0 || best_count <= dmax) return std::nullopt;
  NonColourabilityCertificate cert;
  cert.U = members;
  cert.d = static_cast<int>(dmax);
  cert.u = best_u;
  if (members.size() <= 64) {
    for (std::size_t i = 0; i < members.size(); ++i) {
      std::vector<int> parent;
      dsd_from(g, members[i], &parent);
      for (std::size_t j = i + 1; j < members.size(); ++j) {
        std::vector<int> path;
        for (int x = members[j]; x != -1; x = parent[x]) path.push_back(x);
        std::reverse(path.begin(), path.end());
        cert.paths.push_back(std::move(path));
      }
    }
  }
  return cert;
}

std::optional<NonColourabilityCertificate> try_candidate(
    const Graph& g, std::vector<int> members) {
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  if (members.size() < 2) return std::nullopt;
  long long dmax = 0;
  for (std::size_t i = 0; i < members.size(); ++i) {
    std::vector<long long> dist = dsd_from(g, members[i]);
    for (std::size_t j = i + 1; j < members.size(); ++j) {
      if (dist[members[j]] == kUnreachable) return std::nullopt;
      dmax = std::max(dmax, dist[members[j]]);
    }
  }
  return build_certificate(g, members, dmax);
}

std::optional<NonColourabilityCertificate> exhaustive_search(const Graph& g) {
  int n = g.vertex_count();
  // all-pairs distances once, then a subset DP for the pairwise maximum
  std::vector<std::vector<long long>> dist(n);
  for (int v = 0; v < n; ++v) dist[v] = dsd_from(g, v);
  std::vector<int> adj_mask(n, 0);
  for (const Edge& e : g.edges()) {
    adj_mask[e.u] |= 1 << e.v;
    adj_mask[e.v] |= 1 << e.u;
  }
  std::size_t total = std::size_t{1} << n;
  constexpr long long kInf = LLONG_MAX / 4;
  std::vector<long long> dmax(total, 0);
  for (std::size_t mask = 1; mask < total; ++mask) {
    int b = __builtin_ctzll(mask);
    std::size_t rest = mask & (mask - 1);
    if (rest == 0) continue;
    long long best = dmax[rest];
    for (std::size_t r = rest; r; r &= r - 1) {
      int y = __builtin_ctzll(r);
      long long d = dist[b][y];
      best = std::max(best, d == kUnreachable ? kInf : d);
    }
    dmax[mask] = best;
    if (best >= kInf) continue;
    for (int u = 0; u < n; ++u) {
      if (__builtin_popcount(adj_mask[u] & static_cast<int>(mask)) > best) {
        std::vector<int> members;
        for (int v = 0; v < n; ++v)
          if (mask >> v & 1) members.push_back(v);
        return build_certificate(g, members, best);
      }
    }
  }
  return std::nullopt;
}

}  // namespace

std::optional<long long> degree_sum_distance(const Graph& g, int v, int w) {
  if (v < 0 || w < 0 || v >= g.vertex_count() || w >= g.vertex_count())
    throw std::invalid_argument("vertex out of range");
  long long d = dsd_from(g, v)[w];
  if (d == kUnreachable) return std::nullopt;
  return d;
}

CertCheckResult check_certificate(const Graph& g,
                                  const NonColourabilityCertificate& cert) {
  int n = g.vertex_count();
  if (cert.U.empty()) return fail("empty U");
  for (int v : cert.U)
    if (v < 0 || v >= n) return fail("vertex out of range");
  if (cert.u < 0 || cert.u >= n) return fail("vertex out of range");
  std::vector<int> sorted = cert.U;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    return fail("duplicate vertices in U");
  if (cert.d < 1) return fail("d must be positive");
  int count = 0;
  for (const AdjEntry& a : g.neighbours(cert.u))
    if (std::binary_search(sorted.begin(), sorted.end(), a.to)) ++count;
  if (count <= cert.d) return fail("no violation");
  std::size_t k = cert.U.size();
  if (!cert.paths.empty()) {
    if (cert.paths.size() != k * (k - 1) / 2) return fail("path count mismatch");
    std::size_t idx = 0;
    for (std::size_t i = 0; i < k; ++i) {
      for (std::size_t j = i + 1; j < k; ++j, ++idx) {
        const std::vector<int>& path = cert.paths[idx];
        if (path.empty() || path.front() != cert.U[i] ||
            path.back() != cert.U[j])
          return fail("bad path");
        long long sum = 0;
        for (std::size_t p = 0; p < path.size(); ++p) {
          int x = path[p];
          if (x < 0 || x >= n) return fail("bad path");
          if (p > 0 && !g.has_edge(path[p - 1], x)) return fail("bad path");
          sum += g.degree(x);  // walks only overcount, so they stay sound
        }
        if (sum > cert.d) return fail("path too heavy");
      }
    }
  } else {
    for (std::size_t i = 0; i < k; ++i) {
      std::vector<long long> dist = dsd_from(g, cert.U[i]);
      for (std::size_t j = i + 1; j < k; ++j) {
        long long d = dist[cert.U[j]];
        if (d == kUnreachable || d > cert.d) return fail("pair too far");
      }
    }
  }
  return {true, "ok"};
}

std::optional<NonColourabilityCertificate> search_certificate(
    const Graph& g, CertEffort effort) {
  int n = g.vertex_count();
  if (effort == CertEffort::exhaustive) {
    if (n > 20)
      throw std::invalid_argument("exhaustive certificate search needs n <= 20");
    return exhaustive_search(g);
  }
  for (int x = 0; x < n; ++x) {
    std::vector<int> nb;
    for (const AdjEntry& a : g.neighbours(x)) nb.push_back(a.to);
    if (auto cert = try_candidate(g, std::move(nb))) return cert;
  }
  if (effort == CertEffort::balls) {
    for (int radius = 1; radius <= 3; ++radius) {
      for (int x = 0; x < n; ++x) {
        // closed ball by BFS depth
        std::vector<int> depth(n, -1), members;
        std::queue<int> q;
        depth[x] = 0;
        q.push(x);
        while (!q.empty()) {
          int y = q.front();
          q.pop();
          members.push_back(y);
          if (depth[y] == radius) continue;
          for (const AdjEntry& a : g.neighbours(y)) {
            if (depth[a.to] < 0) {
              depth[a.to] = depth[y] + 1;
              q.push(a.to);
            }
          }
        }
        if (auto cert = try_candidate(g, std::move(members))) return cert;
      }
    }
  }
  return std::nullopt;
}

}  // namespace icol
