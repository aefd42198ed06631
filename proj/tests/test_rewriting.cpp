#include <deque>
#include <map>
#include <random>
#include <set>

#include "doctest.h"
#include "plucker/rewriting.hpp"

using namespace plucker;

namespace {

MatchingTuple sorted(MatchingTuple t) {
  std::sort(t.begin(), t.end());
  return t;
}

// Classes of 3-tuples under quadratic moves (and optionally Segre moves), within one sum fiber.
std::vector<std::set<MatchingTuple>> classes(const std::vector<MatchingTuple>& fiber, bool with_segre) {
  std::set<MatchingTuple> seen;
  std::vector<std::set<MatchingTuple>> out;
  for (const auto& start : fiber) {
    if (seen.count(start)) continue;
    std::set<MatchingTuple> cls{start};
    std::deque<MatchingTuple> q{start};
    seen.insert(start);
    while (!q.empty()) {
      auto t = q.front();
      q.pop_front();
      std::vector<MatchingTuple> next;
      for (int i = 0; i < 3; ++i)
        for (int j = i + 1; j < 3; ++j)
          for (const auto& [x, y] : quadratic_partners(t[i], t[j], true)) {
            auto u = t;
            u[i] = x;
            u[j] = y;
            next.push_back(sorted(u));
          }
      if (with_segre) {
        auto tv = type_vector(t);
        for (int j = 2; j <= t[0].r - 1; ++j)
          if (tv[j - 2] != '0') next.push_back(sorted(toric_segre_move(t, j)));
      }
      for (auto& u : next)
        if (seen.insert(u).second) {
          cls.insert(u);
          q.push_back(u);
        }
    }
    out.push_back(cls);
  }
  return out;
}

// fibers of the sum map on 3-tuples of unbreakable reduced matchings
std::map<std::vector<int>, std::vector<MatchingTuple>> fibers(int r) {
  std::vector<ReducedMatching> all;
  for (const auto& m : enumerate_reduced_matchings(r))
    if (is_unbreakable(m)) all.push_back(m);
  std::map<std::vector<int>, std::vector<MatchingTuple>> out;
  for (size_t a = 0; a < all.size(); ++a)
    for (size_t b = a; b < all.size(); ++b)
      for (size_t c = b; c < all.size(); ++c) {
        MatchingTuple t{all[a], all[b], all[c]};
        out[sum_of(t)].push_back(t);
      }
  return out;
}

}  // namespace

TEST_CASE("reduced matching enumeration") {
  CHECK(enumerate_reduced_matchings(3).size() == 5);
  CHECK(enumerate_reduced_matchings(4).size() == 14);
  for (const auto& m : enumerate_reduced_matchings(5)) CHECK(is_reduced_matching(m));
  CHECK(enumerate_reduced_matchings(5).size() == 42);
}

TEST_CASE("balanced and unbreakable") {
  ReducedMatching a{4, {1, 1, 1, 1}, {0}}, b{4, {1, 1, 1, 1}, {2}}, c{4, {1, 1, 1, 1}, {1}};
  CHECK_FALSE(is_balanced({a, b}));
  CHECK(is_balanced({a, c}));
  CHECK(is_balanced({c, b}));
  CHECK_FALSE(is_unbreakable(a));
  CHECK(is_unbreakable(c));
  CHECK(is_unbreakable(zero_matching(3)));  // no base edges
}

TEST_CASE("local balancing") {
  auto [x, y] = balance_triples({0, 0, 0}, {2, 1, 2});
  CHECK(x == Triple{1, 0, 1});
  CHECK(y == Triple{1, 1, 1});
  CHECK_THROWS_AS(balance_triples({0, 2, 2}, {0, 0, 0}), RewriteError);
}

TEST_CASE("balance preserves the sum") {
  std::mt19937_64 rng(4);
  auto all = enumerate_reduced_matchings(5);
  for (int t = 0; t < 100; ++t) {
    MatchingTuple tup;
    for (int i = 0; i < 4; ++i) tup.push_back(all[rng() % all.size()]);
    auto b = balance(tup);
    CHECK(sum_of(b) == sum_of(tup));
    CHECK(is_balanced(b));
    for (const auto& m : b) CHECK(is_reduced_matching(m));
  }
}

TEST_CASE("type vectors") {
  ReducedMatching z = zero_matching(3), o{3, {1, 1, 1}, {}};
  ReducedMatching p{3, {1, 1, 0}, {}}, q{3, {0, 1, 1}, {}}, s{3, {1, 0, 1}, {}};
  CHECK(type_vector({z, o, o}) == "A");
  CHECK(type_vector({p, q, s}) == "B");
  CHECK(type_vector({z, z, o}) == "0");
  CHECK_THROWS_AS(type_vector({z, o}), RewriteError);
}

TEST_CASE("Segre move swaps A and B and is an involution on multisets") {
  ReducedMatching z = zero_matching(3), o{3, {1, 1, 1}, {}};
  MatchingTuple t{z, o, o};
  auto u = toric_segre_move(t, 2);
  CHECK(type_vector(u) == "B");
  CHECK(sum_of(u) == sum_of(t));
  CHECK(sorted(toric_segre_move(u, 2)) == sorted(t));
}

TEST_CASE("type classifies quadratic classes, Segre moves connect fibers") {
  for (int r : {3, 4}) {
    for (const auto& [sum, fiber] : fibers(r)) {
      auto q = classes(fiber, false);
      std::set<std::string> types;
      for (const auto& cls : q) {
        std::set<std::string> inside;
        for (const auto& t : cls) inside.insert(type_vector(t));
        CHECK(inside.size() == 1);
        types.insert(*inside.begin());
      }
      CHECK(types.size() == q.size());
      CHECK(classes(fiber, true).size() == 1);
    }
  }
}

TEST_CASE("normal form") {
  ReducedMatching m{4, {1, 1, 1, 1}, {1}};
  CHECK(normal_form({m}) == MatchingTuple{m});
  std::mt19937_64 rng(8);
  std::vector<ReducedMatching> unb;
  for (const auto& x : enumerate_reduced_matchings(5))
    if (is_unbreakable(x)) unb.push_back(x);
  REQUIRE(!unb.empty());
  for (int t = 0; t < 20; ++t) {
    MatchingTuple tup;
    for (int i = 0; i < 3; ++i) tup.push_back(unb[rng() % unb.size()]);
    auto nf = normal_form(tup);
    CHECK(sum_of(nf) == sum_of(tup));
    CHECK(normal_form(nf) == nf);
    MatchingTuple swapped{tup[2], tup[0], tup[1]};
    CHECK(normal_form(swapped) == nf);
    for (int k = 0; k < 5; ++k) CHECK(normal_form(random_equivalent(tup, rng, 10)) == nf);
  }
}

TEST_CASE("reduced matching text round trip") {
  ReducedMatching m{5, {1, 1, 1, 0, 1}, {1, 1}};
  CHECK(to_string(m) == "(1 | 1 1 1 1 0 | 1)");
  CHECK(parse_reduced_matching(to_string(m)) == m);
  for (const auto& x : enumerate_reduced_matchings(4)) CHECK(parse_reduced_matching(to_string(x)) == x);
  CHECK_THROWS_AS(parse_reduced_matching("1 2 3"), RewriteError);
}
