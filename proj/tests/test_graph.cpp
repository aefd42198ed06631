#include <functional>
#include <set>

#include "doctest.h"
#include "plucker/graph.hpp"

using namespace plucker;

namespace {

// Independent brute force: all multisets of chords, regular of degree d, no crossings.
long long brute_noncrossing_regular(int n, int d) {
  std::vector<Edge> chords;
  for (int a = 1; a <= n; ++a)
    for (int b = a + 1; b <= n; ++b) chords.push_back({a, b});
  std::vector<int> deg(n + 1, 0);
  std::vector<Edge> chosen;
  long long count = 0;
  std::function<void(size_t)> rec = [&](size_t i) {
    bool done = true;
    for (int v = 1; v <= n; ++v) done = done && deg[v] == d;
    if (done) {
      ++count;
      return;
    }
    if (i == chords.size()) return;
    rec(i + 1);
    auto e = chords[i];
    int pushed = 0;
    while (deg[e.a] < d && deg[e.b] < d) {
      bool ok = true;
      for (auto f : chosen) ok = ok && !chords_cross(e.a, e.b, f.a, f.b);
      if (!ok) break;
      chosen.push_back(e);
      ++deg[e.a];
      ++deg[e.b];
      ++pushed;
      rec(i + 1);
    }
    for (int k = 0; k < pushed; ++k) {
      chosen.pop_back();
      --deg[e.a];
      --deg[e.b];
    }
  };
  rec(0);
  return count;
}

}  // namespace

TEST_CASE("canonicalize signs and loops") {
  auto c = canonicalize({2, {{2, 1}}});
  CHECK(c.graph.edges == std::vector<Edge>{{1, 2}});
  CHECK(c.sign == -1);
  CHECK(canonicalize({2, {{1, 1}}}).sign == 0);
  auto c2 = canonicalize({4, {{3, 4}, {2, 1}}});
  CHECK(c2.graph.edges == std::vector<Edge>{{1, 2}, {3, 4}});
  CHECK(c2.sign == -1);
  auto c3 = canonicalize({4, {{2, 1}, {4, 3}}});
  CHECK(c3.sign == 1);
}

TEST_CASE("graph keys round trip") {
  DirectedGraph g{6, {{1, 4}, {2, 6}, {3, 5}, {1, 4}}};
  auto c = canonicalize(g);
  CHECK(graph_of(6, key_of(c.graph)) == c.graph);
}

TEST_CASE("orientation sign") {
  CHECK(orientation_sign(4, {{1, 2}, {3, 4}}) == 1);
  CHECK(orientation_sign(4, {{2, 1}, {3, 4}}) == -1);
  CHECK(orientation_sign(4, {{1, 3}, {2, 4}}) == -1);
  CHECK(orientation_sign(4, {{3, 4}, {1, 2}}) == 1);  // swapping whole edges is even
  CHECK_THROWS_AS(orientation_sign(4, {{1, 2}, {2, 3}}), GraphError);
}

TEST_CASE("connected component partitions") {
  ColoredGraph two{4, {make_matching(4, {{1, 2}, {3, 4}}), make_matching(4, {{1, 2}, {3, 4}})}};
  auto p = connected_component_partition(two);
  CHECK(p.blocks == std::vector<std::vector<int>>{{1, 2}, {3, 4}});
  CHECK(p.shape == std::vector<int>{2, 2});

  ColoredGraph four{6, {make_matching(6, {{1, 2}, {3, 4}, {5, 6}}), make_matching(6, {{2, 3}, {1, 4}, {5, 6}})}};
  CHECK(connected_component_partition(four).shape == std::vector<int>{4, 2});

  ColoredGraph eight{8, {make_matching(8, {{1, 2}, {3, 4}, {5, 6}, {7, 8}}), make_matching(8, {{2, 3}, {4, 5}, {6, 7}, {8, 1}})}};
  CHECK(connected_component_partition(eight).shape == std::vector<int>{8});
}

TEST_CASE("non-crossing enumeration") {
  CHECK(enumerate_noncrossing_regular(2, 1).size() == 1);
  auto g4 = enumerate_noncrossing_regular(4, 1);
  REQUIRE(g4.size() == 2);
  std::set<std::vector<Edge>> got{g4[0].edges, g4[1].edges};
  CHECK(got == std::set<std::vector<Edge>>{{{1, 2}, {3, 4}}, {{1, 4}, {2, 3}}});
  CHECK(enumerate_noncrossing_regular(6, 1).size() == 5);
  for (int n : {2, 4, 6, 8})
    for (int d = 1; d <= 3; ++d) {
      if (n == 8 && d == 3) continue;
      CHECK(static_cast<long long>(enumerate_noncrossing_regular(n, d).size()) == brute_noncrossing_regular(n, d));
    }
  for (int k = 1; k <= 5; ++k) CHECK(static_cast<long long>(enumerate_noncrossing_regular(2 * k, 1).size()) == catalan(k));
}

TEST_CASE("matching enumeration") {
  CHECK(enumerate_matchings(2).size() == 1);
  CHECK(enumerate_matchings(4).size() == 3);
  CHECK(enumerate_matchings(6).size() == 15);
  CHECK(enumerate_matchings(8).size() == 105);
  int nc = 0;
  for (const auto& m : enumerate_matchings(8)) nc += is_noncrossing(m);
  CHECK(nc == 14);
}

TEST_CASE("make_matching validation") {
  CHECK_THROWS_AS(make_matching(4, {{1, 2}}), GraphError);
  CHECK_THROWS_AS(make_matching(4, {{1, 2}, {2, 3}}), GraphError);
  CHECK_THROWS_AS(make_matching(4, {{1, 1}, {3, 4}}), GraphError);
  auto m = make_matching(4, {{4, 3}, {2, 1}});
  CHECK(m.edges == std::vector<Edge>{{1, 2}, {3, 4}});
}

TEST_CASE("permutations") {
  Perm s = perm_with_cycle_type({3, 2, 1});
  CHECK(cycle_type(s) == std::vector<int>{3, 2, 1});
  CHECK(perm_sign(s) == -1);
  CHECK(compose(s, inverse(s)) == identity_perm(6));
  Perm t{0, 2, 1, 3, 4};
  DirectedGraph g{4, {{1, 3}, {2, 4}}};
  CHECK(relabel(t, g).edges == std::vector<Edge>{{2, 3}, {1, 4}});
}

TEST_CASE("valences and products") {
  DirectedGraph g{4, {{1, 2}, {3, 4}}}, h{4, {{1, 3}, {2, 4}}};
  auto p = product(g, h);
  CHECK(p.edges.size() == 4);
  CHECK(regular_degree(p) == 2);
  CHECK(regular_degree(DirectedGraph{4, {{1, 2}}}) == -1);
  CHECK(to_text(g) == "n=4; edges=1-2,3-4");
}
