#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "icol/certificates.hpp"
#include "icol/colouring.hpp"
#include "icol/generators.hpp"
#include "icol/graph.hpp"
#include "icol/reference.hpp"

using namespace icol;

namespace {

// Hub adjacent to twenty members; members pairwise reachable through a
// shallow relay tree of low-degree vertices. Every member pair has a path of
// degree sum <= 19 while the hub meets 20 of them, so the graph carries a
// valid non-colourability certificate.
//
// ids: 0 hub, 1 relay root, 2..6 relays, 7..26 members
Graph deep_star() {
  Graph g(27);
  for (int r = 0; r < 5; ++r) g.add_edge(1, 2 + r);
  for (int i = 0; i < 20; ++i) {
    int member = 7 + i;
    g.add_edge(0, member);
    g.add_edge(2 + i / 4, member);
  }
  return g;
}

NonColourabilityCertificate deep_star_certificate() {
  NonColourabilityCertificate cert;
  for (int i = 0; i < 20; ++i) cert.U.push_back(7 + i);
  cert.d = 19;
  cert.u = 0;
  return cert;  // no paths: the checker recomputes distances
}

}  // namespace

TEST_CASE("degree sum distance") {
  Graph p3 = load_graph_string("3 2\n0 1\n1 2\n");
  CHECK(degree_sum_distance(p3, 0, 2) == 4);  // 1 + 2 + 1
  CHECK(degree_sum_distance(p3, 0, 1) == 3);
  CHECK(degree_sum_distance(p3, 0, 0) == 1);

  Graph two = Graph::from_edges(4, {{0, 1}, {2, 3}});
  CHECK_FALSE(degree_sum_distance(two, 0, 3).has_value());

  // heavier direct edge vs lighter detour: 0-1 direct costs deg0+deg1,
  // the detour 0-2-1 costs more, so the direct path wins
  Graph tri = load_graph_string("3 3\n0 1\n1 2\n2 0\n");
  CHECK(degree_sum_distance(tri, 0, 1) == 4);
}

TEST_CASE("degree sum distance agrees with path enumeration") {
  for (int n = 2; n <= 5; ++n) {
    for (const Graph& g : enumerate_connected_graphs(n)) {
      for (int v = 0; v < n; ++v)
        for (int w = v; w < n; ++w) {
          auto fast = degree_sum_distance(g, v, w);
          long long slow = degree_sum_distance_by_paths(g, v, w);
          REQUIRE(fast.has_value());
          CHECK(*fast == slow);
        }
    }
  }
}

TEST_CASE("a hand-built certificate verifies") {
  Graph g = deep_star();
  NonColourabilityCertificate cert = deep_star_certificate();
  CertCheckResult res = check_certificate(g, cert);
  CHECK(res.ok);
  CHECK(res.reason == "ok");
}

TEST_CASE("tampered certificates are rejected with a reason") {
  Graph g = deep_star();
  auto reason = [&](NonColourabilityCertificate cert) {
    return check_certificate(g, cert).reason;
  };

  NonColourabilityCertificate base = deep_star_certificate();

  NonColourabilityCertificate too_tight = base;
  too_tight.d = 18;  // cross-relay pairs cost 19
  CHECK(reason(too_tight) == "pair too far");

  NonColourabilityCertificate wrong_hub = base;
  wrong_hub.u = 1;  // the relay root only meets 5 vertices, none in U
  CHECK(reason(wrong_hub) == "no violation");

  NonColourabilityCertificate too_loose = base;
  too_loose.d = 20;  // now the hub no longer exceeds d
  CHECK(reason(too_loose) == "no violation");

  NonColourabilityCertificate empty;
  empty.d = 1;
  empty.u = 0;
  CHECK(reason(empty) == "empty U");

  NonColourabilityCertificate range = base;
  range.U.push_back(99);
  CHECK(reason(range) == "vertex out of range");

  NonColourabilityCertificate dup = base;
  dup.U.push_back(base.U.front());
  CHECK(reason(dup) == "duplicate vertices in U");

  NonColourabilityCertificate nonpositive = base;
  nonpositive.d = 0;
  CHECK(reason(nonpositive) == "d must be positive");
}

TEST_CASE("explicit paths are validated") {
  Graph g = deep_star();
  auto found = search_certificate(g, CertEffort::neighbourhoods);
  REQUIRE(found.has_value());
  REQUIRE_FALSE(found->paths.empty());
  CHECK(found->paths.size() == found->U.size() * (found->U.size() - 1) / 2);
  CHECK(check_certificate(g, *found).ok);

  SUBCASE("wrong path count") {
    NonColourabilityCertificate cert = *found;
    cert.paths.pop_back();
    CHECK(check_certificate(g, cert).reason == "path count mismatch");
  }
  SUBCASE("path with a non-edge step") {
    NonColourabilityCertificate cert = *found;
    cert.paths[0] = {cert.U[0], cert.U[1]};  // members are never adjacent
    CHECK(check_certificate(g, cert).reason == "bad path");
  }
  SUBCASE("detour through the hub exceeds d") {
    NonColourabilityCertificate cert = *found;
    cert.paths[0] = {cert.U[0], 0, cert.U[1]};
    CHECK(check_certificate(g, cert).reason == "path too heavy");
  }
}

TEST_CASE("search finds the deep star certificate at every effort") {
  Graph g = deep_star();
  for (CertEffort effort : {CertEffort::neighbourhoods, CertEffort::balls}) {
    auto cert = search_certificate(g, effort);
    REQUIRE(cert.has_value());
    CHECK(cert->u == 0);
    CHECK(cert->U.size() == 20);
    CHECK(cert->d < static_cast<int>(cert->U.size()));
    CHECK(check_certificate(g, *cert).ok);
  }
}

TEST_CASE("certificate-free graphs") {
  auto none = [](const Graph& g) {
    return !search_certificate(g, CertEffort::exhaustive).has_value();
  };
  CHECK(none(gen_standard(Family::cycle, {5, 0, 0, 0, 0})));
  CHECK(none(gen_standard(Family::cycle, {7, 0, 0, 0, 0})));
  CHECK(none(gen_standard(Family::cycle, {3, 0, 0, 0, 0})));
  CHECK(none(gen_standard(Family::complete, {5, 0, 0, 0, 0})));
  CHECK(none(gen_standard(Family::path, {6, 0, 0, 0, 0})));
}

TEST_CASE("no false positives on small graphs") {
  for (int n = 1; n <= 5; ++n) {
    for (const Graph& g : enumerate_connected_graphs(n)) {
      auto cert = search_certificate(g, CertEffort::exhaustive);
      if (!cert) continue;
      CHECK(check_certificate(g, *cert).ok);
      CHECK_FALSE(brute_force_interval_colourable(g));
    }
  }
}

TEST_CASE("exhaustive effort is refused on large graphs") {
  CHECK_THROWS_AS(search_certificate(deep_star(), CertEffort::exhaustive),
                  std::invalid_argument);
}
