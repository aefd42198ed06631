#include <set>

#include "doctest.h"
#include "plucker/ring.hpp"
#include "plucker/trees.hpp"

using namespace plucker;

namespace {

// all products of d perfect matchings
std::vector<DirectedGraph> regular_graphs(int n, int d) {
  auto ms = enumerate_matchings(n);
  std::vector<DirectedGraph> out{{n, {}}};
  for (int i = 0; i < d; ++i) {
    std::vector<DirectedGraph> next;
    for (const auto& g : out)
      for (const auto& m : ms) next.push_back(product(g, directed_min_max(m)));
    out = std::move(next);
  }
  return out;
}

}  // namespace

TEST_CASE("tree shapes") {
  for (int r = 3; r <= 6; ++r) {
    auto y = build_y_tree(r);
    CHECK(y.num_leaves() == 2 * r);
    CHECK(y.edges.size() == static_cast<size_t>(2 * y.num_leaves() - 3));
    auto c = build_caterpillar(r);
    CHECK(c.num_leaves() == r);
    CHECK(c.edges.size() == static_cast<size_t>(2 * r - 3));
  }
  CHECK_THROWS_AS(build_y_tree(2), GraphError);
  CHECK_THROWS_AS(make_tree(3, {{0, 1}, {1, 2}, {2, 0}}, {{0, 1}}), GraphError);
}

TEST_CASE("levels") {
  auto c = build_caterpillar(4);
  CHECK(level(DirectedGraph{4, {{1, 2}, {3, 4}}}, c) == 4);
  CHECK(level(DirectedGraph{4, {{1, 3}, {2, 4}}}, c) == 6);
  CHECK(level(DirectedGraph{4, {{1, 4}, {2, 3}}}, c) == 6);
  auto y = build_y_tree(3);
  DirectedGraph g{6, {{1, 2}, {3, 5}, {4, 6}}}, h{6, {{1, 6}, {2, 3}, {4, 5}}};
  CHECK(level(product(g, h), y) == level(g, y) + level(h, y));
}

TEST_CASE("weighting of a single edge follows the path") {
  auto c = build_caterpillar(4);
  auto w = weighting_of_graph(DirectedGraph{4, {{1, 4}}}, c);
  int total = 0;
  for (int x : w.weight) total += x;
  CHECK(total == static_cast<int>(path_edges(c, 1, 4).size()));
  CHECK(w.weight[c.stalk_edge(1)] == 1);
  CHECK(w.weight[c.stalk_edge(2)] == 0);
  CHECK(w.weight[c.base_edge(2)] == 1);
}

TEST_CASE("admissible weightings are exactly the images of regular graphs") {
  for (int r : {3, 4}) {
    auto y = build_y_tree(r);
    for (int d : {1, 2}) {
      if (r == 4 && d == 2) continue;
      std::set<std::vector<int>> images;
      for (const auto& g : regular_graphs(2 * r, d)) images.insert(weighting_of_graph(g, y).weight);
      std::set<std::vector<int>> enumerated;
      for (const auto& w : enumerate_admissible_regular(y, d)) {
        CHECK(is_admissible(w));
        CHECK(leaf_degree(w) == d);
        enumerated.insert(w.weight);
      }
      CHECK(images == enumerated);
      CHECK(count_admissible_regular(y, d) == hilbert_dim(2 * r, d));
    }
  }
  CHECK(count_admissible_regular(build_y_tree(3), 0) == 1);
}

TEST_CASE("greedy graph realizes its weighting") {
  for (int d : {1, 2, 3}) {
    auto t = build_y_tree(3);
    for (const auto& w : enumerate_admissible_regular(t, d)) {
      auto g = greedy_graph(w);
      CHECK(regular_degree(g) == d);
      CHECK(weighting_of_graph(g, t) == w);
    }
  }
}

TEST_CASE("truncation round trip") {
  auto y = build_y_tree(4);
  for (int d : {2, 4}) {
    int done = 0;
    for (const auto& w : enumerate_admissible_regular(y, d)) {
      bool even = true;
      for (size_t e = 0; e < w.weight.size(); ++e)
        if (y.edges[e].role != EdgeRole::Leaf && w.weight[e] % 2) even = false;
      if (!even) {
        CHECK_THROWS_AS(truncate(w), GraphError);
        continue;
      }
      auto red = truncate(w);
      CHECK(red.reduced);
      CHECK(is_admissible(red));
      CHECK(untruncate(red, d) == w);
      ++done;
    }
    CHECK(done > 0);
  }
}

TEST_CASE("toric Plucker applicability") {
  auto c = build_caterpillar(4);
  CHECK_FALSE(toric_plucker_applicable(c, 1, 2, 3, 4));
  CHECK_FALSE(toric_plucker_applicable(c, 1, 3, 2, 4));
  CHECK(toric_plucker_applicable(c, 1, 3, 4, 2));
  CHECK_THROWS_AS(toric_plucker_applicable(c, 1, 1, 2, 3), GraphError);
}

TEST_CASE("truncated degree-1 weighting on the fifth trees") {
  // end base entries of a four-entry listing (1,1,2,1) coincide with the end stalks, leaving (1,2)
  auto c = build_caterpillar(5);
  TreeWeighting red{c, std::vector<int>(c.edges.size(), 0), true};
  std::vector<int> stalks{1, 0, 1, 1, 1};
  for (int i = 1; i <= 5; ++i) red.weight[c.stalk_edge(i)] = stalks[i - 1];
  red.weight[c.base_edge(2)] = 1;
  red.weight[c.base_edge(3)] = 2;
  CHECK(is_admissible(red));
  auto full = untruncate(red, 1);
  CHECK(is_admissible(full));
  CHECK(leaf_degree(full) == 1);
  auto g = greedy_graph(full);
  CHECK(regular_degree(g) == 1);
  CHECK(g.edges.size() == 5);
  CHECK(weighting_of_graph(g, full.tree) == full);
  CHECK(truncate(full) == red);
}

TEST_CASE("truncation is additive") {
  auto y = build_y_tree(4);
  std::vector<TreeWeighting> even;
  for (const auto& w : enumerate_admissible_regular(y, 2)) {
    bool ok = true;
    for (size_t e = 0; e < w.weight.size(); ++e)
      if (y.edges[e].role != EdgeRole::Leaf && w.weight[e] % 2) ok = false;
    if (ok) even.push_back(w);
  }
  REQUIRE(even.size() >= 2);
  for (size_t i = 0; i < even.size(); ++i)
    for (size_t j = i; j < even.size(); ++j) {
      TreeWeighting sum = even[i];
      for (size_t e = 0; e < sum.weight.size(); ++e) sum.weight[e] += even[j].weight[e];
      auto a = truncate(even[i]), b = truncate(even[j]), s = truncate(sum);
      for (size_t e = 0; e < s.weight.size(); ++e) CHECK(s.weight[e] == a.weight[e] + b.weight[e]);
    }
}
