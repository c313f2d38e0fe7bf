#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "icol/colouring.hpp"
#include "icol/generators.hpp"
#include "icol/graph.hpp"

using namespace icol;

namespace {

std::vector<int> all_blue(int s) {
  std::vector<int> out;
  for (int b = 1; b <= s - 2; ++b) out.push_back(b);
  return out;
}

int distinct_colours(const EdgeColouring& c) {
  return static_cast<int>(
      std::set<int>(c.colour.begin(), c.colour.end()).size());
}

}  // namespace

TEST_CASE("extremal family, smallest instance") {
  ExtremalGraph eg = gen_extremal({2, {}, false});
  CHECK(eg.graph.vertex_count() == 4);
  CHECK(eg.graph.edge_count() == 6);  // K4
  for (int v = 0; v < 4; ++v) CHECK(eg.graph.degree(v) == 3);
  CHECK(verify_interval(eg.graph, eg.colouring));
  // verticals 1 and 4, horizontals 3, diagonals 2
  std::multiset<int> used(eg.colouring.colour.begin(),
                          eg.colouring.colour.end());
  CHECK(used == std::multiset<int>{1, 2, 2, 3, 3, 4});
  CHECK(distinct_colours(eg.colouring) == 4);  // 3s-2
}

TEST_CASE("extremal family across widths and blue subsets") {
  for (int s = 2; s <= 12; ++s) {
    std::vector<std::vector<int>> blues = {{}, all_blue(s)};
    if (s >= 5) blues.push_back({1, s - 2});
    if (s >= 7) blues.push_back({2, 3, s - 3});
    for (const auto& blue : blues) {
      for (bool odd : {false, true}) {
        CAPTURE(s);
        CAPTURE(odd);
        ExtremalGraph eg = gen_extremal({s, blue, odd});
        CHECK(eg.graph.vertex_count() == 2 * s + (odd ? 1 : 0));
        CHECK(verify_interval(eg.graph, eg.colouring));
        CHECK(distinct_colours(eg.colouring) == 3 * s - 2 + (odd ? 1 : 0));
        CHECK(is_planar(eg.graph));
      }
    }
  }
}

TEST_CASE("blue edges sit at the edge of their endpoints' ranges") {
  int s = 9;
  ExtremalGraph eg = gen_extremal({s, all_blue(s), false});
  for (int e = 0; e < eg.graph.edge_count(); ++e) {
    const Edge& edge = eg.graph.edge(e);
    // blue edges join (b,1) and (b+2,1): both endpoints in row 1, two apart
    bool row1 = edge.u % 2 == 0 && edge.v % 2 == 0;
    if (!row1 || std::abs(edge.u - edge.v) != 4) continue;
    int colour = eg.colouring.colour[e];
    for (int endpoint : {edge.u, edge.v}) {
      int lo = 1 << 30, hi = 0;
      for (const AdjEntry& a : eg.graph.neighbours(endpoint)) {
        lo = std::min(lo, eg.colouring.colour[a.edge]);
        hi = std::max(hi, eg.colouring.colour[a.edge]);
      }
      CHECK((colour == lo || colour == hi));
    }
  }
}

TEST_CASE("removing blue edges leaves the colouring interval") {
  int s = 8;
  ExtremalGraph full = gen_extremal({s, all_blue(s), false});
  ExtremalGraph bare = gen_extremal({s, {}, false});
  // the blue-free instance is exactly the full instance minus blue edges,
  // with the same colours on the surviving edges
  CHECK(verify_interval(bare.graph, bare.colouring));
  for (int e = 0; e < bare.graph.edge_count(); ++e) {
    const Edge& be = bare.graph.edge(e);
    bool found = false;
    for (int f = 0; f < full.graph.edge_count(); ++f) {
      const Edge& fe = full.graph.edge(f);
      if (std::min(fe.u, fe.v) == std::min(be.u, be.v) &&
          std::max(fe.u, fe.v) == std::max(be.u, be.v)) {
        CHECK(full.colouring.colour[f] == bare.colouring.colour[e]);
        found = true;
        break;
      }
    }
    CHECK(found);
  }
}

TEST_CASE("extremal odd extension adds one pendant and one colour") {
  ExtremalGraph even = gen_extremal({5, {1, 2}, false});
  ExtremalGraph odd = gen_extremal({5, {1, 2}, true});
  CHECK(odd.graph.vertex_count() == even.graph.vertex_count() + 1);
  CHECK(odd.graph.edge_count() == even.graph.edge_count() + 1);
  CHECK(odd.graph.degree(10) == 1);  // pendant vertex 2s
  CHECK(distinct_colours(odd.colouring) ==
        distinct_colours(even.colouring) + 1);
}

TEST_CASE("extremal validation") {
  CHECK_THROWS_AS(gen_extremal({1, {}, false}), std::invalid_argument);
  CHECK_THROWS_AS(gen_extremal({4, {3}, false}), std::invalid_argument);
  CHECK_THROWS_AS(gen_extremal({4, {0}, false}), std::invalid_argument);
}

TEST_CASE("lower bound layer") {
  LowerBoundSpec spec;
  spec.a = 4;
  spec.n = 64;
  spec.alpha = Rational(1, 4);
  spec.seed = 5;

  SUBCASE("trimming pins every left degree") {
    LayerGraph layer = gen_lower_bound_layer(spec);
    CHECK(layer.graph.vertex_count() == 68);
    for (int v = 0; v < 4; ++v) CHECK(layer.graph.degree(v) == 16);
    CHECK(layer.bipartition.valid);
    for (const Edge& e : layer.graph.edges())
      CHECK(layer.bipartition.side[e.u] != layer.bipartition.side[e.v]);
  }
  SUBCASE("seeds are reproducible and distinct") {
    LayerGraph a = gen_lower_bound_layer(spec);
    LayerGraph b = gen_lower_bound_layer(spec);
    CHECK(save_graph(a.graph) == save_graph(b.graph));
    LowerBoundSpec other = spec;
    other.seed = 6;
    CHECK(save_graph(gen_lower_bound_layer(other).graph) !=
          save_graph(a.graph));
  }
  SUBCASE("edge probability extremes") {
    LowerBoundSpec empty = spec;
    empty.p = 0.0;
    empty.trim = false;
    CHECK(gen_lower_bound_layer(empty).graph.edge_count() == 0);
    LowerBoundSpec fullp = spec;
    fullp.p = 1.0;
    LayerGraph dense = gen_lower_bound_layer(fullp);
    for (int v = 0; v < 4; ++v) CHECK(dense.graph.degree(v) == 16);
  }
  SUBCASE("alpha outside (0, 1/2] is rejected") {
    LowerBoundSpec bad = spec;
    bad.alpha = Rational(2, 3);
    CHECK_THROWS_AS(gen_lower_bound_layer(bad), std::invalid_argument);
    bad.alpha = Rational(0);
    CHECK_THROWS_AS(gen_lower_bound_layer(bad), std::invalid_argument);
  }
}

TEST_CASE("star property spot check") {
  LowerBoundSpec spec;
  spec.a = 16;
  spec.n = 256;
  spec.alpha = Rational(1, 8);
  spec.seed = 0;
  LayerGraph layer = gen_lower_bound_layer(spec);
  StarPropertyReport report =
      check_star_property(layer.graph, layer.bipartition, spec.alpha, 60, 1);
  CHECK(report.samples.size() == 60);
  CHECK(report.violations == 0);
  CHECK(report.violation_rate == 0.0);
  for (const StarSample& s : report.samples) {
    CHECK(s.pass);
    CHECK(s.subset_size >= 1);
    CHECK((s.subset_size & (s.subset_size - 1)) == 0);  // power of two
  }
}

TEST_CASE("union of layers") {
  UnionSpec spec;
  spec.n = 512;
  spec.t = 3;
  spec.seed = 9;
  UnionGraph ug = gen_union(spec);
  CHECK(ug.left_block == 22);  // floor(sqrt(512))
  CHECK(ug.graph.vertex_count() == 512 + 3 * 22);
  // layer i left vertices all have degree floor(n / 2^i)
  const int expected[] = {256, 128, 64};
  for (int layer = 1; layer <= 3; ++layer)
    for (int j = 0; j < 22; ++j)
      CHECK(ug.graph.degree(512 + (layer - 1) * 22 + j) ==
            expected[layer - 1]);
  CHECK(ug.bipartition.valid);
  REQUIRE(static_cast<int>(ug.edge_layer.size()) == ug.graph.edge_count());
  // edge layers track which left block the edge touches
  for (int e = 0; e < ug.graph.edge_count(); ++e) {
    int left = std::max(ug.graph.edge(e).u, ug.graph.edge(e).v);
    CHECK(ug.edge_layer[e] == (left - 512) / 22 + 1);
  }
  CHECK_THROWS_AS(gen_union({8, 4, 0}), std::invalid_argument);
}

TEST_CASE("standard families") {
  Graph p5 = gen_standard(Family::path, {5, 0, 0, 0, 0});
  CHECK(p5.edge_count() == 4);
  CHECK(p5.degree(0) == 1);
  CHECK(p5.degree(2) == 2);

  Graph c6 = gen_standard(Family::cycle, {6, 0, 0, 0, 0});
  CHECK(c6.edge_count() == 6);
  for (int v = 0; v < 6; ++v) CHECK(c6.degree(v) == 2);

  Graph k5 = gen_standard(Family::complete, {5, 0, 0, 0, 0});
  CHECK(k5.edge_count() == 10);

  Graph k34 = gen_standard(Family::complete_bipartite, {0, 3, 4, 0, 0});
  CHECK(k34.vertex_count() == 7);
  CHECK(k34.edge_count() == 12);
  CHECK(bipartition(k34).has_value());

  Graph knsn = gen_standard(Family::knsqrtn, {16, 0, 0, 0, 0});
  CHECK(knsn.vertex_count() == 20);  // 16 + floor(sqrt(16))
  CHECK(knsn.edge_count() == 64);

  SUBCASE("random trees") {
    Graph t = gen_standard(Family::random_tree, {24, 0, 0, 0, 0}, 8);
    CHECK(t.edge_count() == 23);
    CHECK(components(t).size() == 1);
    Graph t2 = gen_standard(Family::random_tree, {24, 0, 0, 0, 0}, 8);
    CHECK(save_graph(t) == save_graph(t2));
  }
  SUBCASE("biregular graphs have exact degrees") {
    Graph g = gen_standard(Family::random_biregular, {0, 6, 4, 2, 3}, 13);
    CHECK(g.vertex_count() == 10);
    CHECK(g.edge_count() == 12);
    for (int v = 0; v < 6; ++v) CHECK(g.degree(v) == 2);
    for (int v = 6; v < 10; ++v) CHECK(g.degree(v) == 3);
  }
  SUBCASE("family validation") {
    CHECK_THROWS_AS(gen_standard(Family::cycle, {2, 0, 0, 0, 0}),
                    std::invalid_argument);
    CHECK_THROWS_AS(gen_standard(Family::path, {0, 0, 0, 0, 0}),
                    std::invalid_argument);
    // degree products must balance: 5*2 != 3*3
    CHECK_THROWS_AS(
        gen_standard(Family::random_biregular, {0, 5, 3, 2, 3}, 1),
        std::invalid_argument);
    // required degree cannot exceed the other side
    CHECK_THROWS_AS(
        gen_standard(Family::random_biregular, {0, 1, 2, 4, 2}, 1),
        std::invalid_argument);
  }
}
