#include <filesystem>
#include <fstream>
#include <random>

#include "doctest.h"
#include "plucker/cache.hpp"
#include "plucker/relations.hpp"
#include "plucker/ring.hpp"
#include "plucker/sym.hpp"

using namespace plucker;

namespace {

DirectedGraph random_regular(int n, int d, std::mt19937_64& rng) {
  auto ms = enumerate_matchings(n);
  DirectedGraph g{n, {}};
  for (int i = 0; i < d; ++i)
    for (auto e : ms[rng() % ms.size()].edges) g.edges.push_back(rng() % 2 ? e : Edge{e.b, e.a});
  return g;
}

Q random_q(std::mt19937_64& rng, unsigned long den) {
  Q q(static_cast<long>(rng() % 41) - 20, 1 + rng() % den);
  q.canonicalize();
  return q;
}

PointConfig rational_config(int n, std::mt19937_64& rng) {
  PointConfig p;
  for (int i = 0; i < n; ++i) {
    Q x = random_q(rng, 7);
    p.points.emplace_back(x, random_q(rng, 5));
  }
  return p;
}

bool noncrossing(int n, const GraphKey& k) {
  auto g = graph_of(n, k);
  for (size_t i = 0; i < g.edges.size(); ++i)
    for (size_t j = i + 1; j < g.edges.size(); ++j)
      if (chords_cross(g.edges[i].a, g.edges[i].b, g.edges[j].a, g.edges[j].b)) return false;
  return true;
}

}  // namespace

TEST_CASE("x_of and y_of") {
  RingElement a = x_of({2, {{2, 1}}});
  CHECK(a == Q(-1) * x_of({2, {{1, 2}}}));
  CHECK(x_of({2, {{1, 1}}}).is_zero());
  CHECK(y_of(make_matching(4, {{1, 2}, {3, 4}})) == x_of({4, {{1, 2}, {3, 4}}}));
  CHECK(y_of(make_matching(4, {{1, 3}, {2, 4}})) == Q(-1) * x_of({4, {{1, 3}, {2, 4}}}));
}

TEST_CASE("multiply") {
  auto x12 = x_of({6, {{1, 2}}}), x34 = x_of({6, {{3, 4}}}), x56 = x_of({6, {{5, 6}}});
  CHECK(multiply(x12, x34) == x_of({6, {{1, 2}, {3, 4}}}));
  CHECK(multiply(x12, x12) == x_of({6, {{1, 2}, {1, 2}}}));
  CHECK(multiply(x12 + x34, x56).terms.size() == 2);
  CHECK_THROWS(multiply(x12, x_of({4, {{1, 2}}})));
}

TEST_CASE("straightening, Plucker relation") {
  auto x1324 = x_of({4, {{1, 3}, {2, 4}}});
  auto want = x_of({4, {{1, 2}, {3, 4}}}) + x_of({4, {{1, 4}, {2, 3}}});
  CHECK(straighten(x_of({4, {{1, 2}, {3, 4}}})) == x_of({4, {{1, 2}, {3, 4}}}));
  CHECK(straighten(x1324) == want);
  CHECK(straighten(x1324 - want).is_zero());
}

TEST_CASE("straightening agrees with evaluation and is a projection") {
  std::mt19937_64 rng(5);
  for (int t = 0; t < 40; ++t) {
    int n = 2 * (2 + rng() % 3), d = 1 + rng() % 3;
    DirectedGraph g = random_regular(n, d, rng);
    RingElement x = x_of(g), s = straighten(x);
    for (const auto& [k, c] : s.terms) CHECK(noncrossing(n, k));
    CHECK(straighten(s) == s);
    for (int i = 0; i < 3; ++i) {
      PointConfig p = rational_config(n, rng);
      CHECK(evaluate(s, p) == evaluate(x, p));
    }
  }
}

TEST_CASE("evaluate") {
  PointConfig p{{{Q(0), Q(1)}, {Q(1), Q(1)}}};
  CHECK(evaluate(x_of({2, {{1, 2}}}), p) == -1);
  CHECK(evaluate(x_of({2, {{1, 1}}}), p) == 0);
}

TEST_CASE("hilbert dimensions") {
  CHECK(hilbert_dim(6, 1) == 5);
  CHECK(hilbert_dim(6, 2) == 15);
  CHECK(hilbert_dim(6, 3) == 34);
  CHECK(hilbert_dim(8, 1) == 14);
  CHECK(hilbert_dim(10, 1) == 42);
}

TEST_CASE("kempe factorization") {
  // every factor matches the first half of the labels to the second half
  auto m = make_matching(4, {{1, 2}, {3, 4}});
  SymElement one = kempe_factor(directed_min_max(m));
  CHECK(one.terms.size() == 2);
  for (const auto& [mono, c] : one.terms)
    for (const auto& f : factors_of(4, mono))
      for (auto e : f.edges) CHECK((e.a <= 2) != (e.b <= 2));
  CHECK(project_to_ring(one) == x_of(directed_min_max(m)));
  CHECK_THROWS_AS(kempe_factor(DirectedGraph{4, {{1, 2}, {1, 3}, {2, 4}}}), GraphError);

  DirectedGraph sq{4, {{1, 2}, {3, 4}, {1, 3}, {2, 4}}};
  CHECK(project_to_ring(kempe_factor(sq)) == straighten(x_of(sq)));

  std::mt19937_64 rng(9);
  for (int t = 0; t < 40; ++t) {
    int n = 2 * (2 + rng() % 3), d = 1 + rng() % 3;
    DirectedGraph g = random_regular(n, d, rng);
    SymElement f = kempe_factor(g);
    CHECK(f.k == d);
    CHECK(project_to_ring(f) == straighten(x_of(g)));
  }
}

TEST_CASE("group action") {
  Perm id = identity_perm(4), t12{0, 2, 1, 3, 4};
  auto y = y_of(make_matching(4, {{1, 2}, {3, 4}}));
  CHECK(act(id, y) == y);
  SymElement s(4, 1);
  s.add({make_matching(4, {{1, 2}, {3, 4}})}, Q(1));
  CHECK(act(t12, s) == Q(-1) * s);
  // action commutes with projection
  std::mt19937_64 rng(2);
  for (int t = 0; t < 20; ++t) {
    Perm p = identity_perm(6);
    std::shuffle(p.begin() + 1, p.end(), rng);
    SymElement e(6, 2);
    auto ms = enumerate_matchings(6);
    e.add({ms[rng() % 15], ms[rng() % 15]}, Q(1 + static_cast<long>(rng() % 4)));
    CHECK(straighten(project_to_ring(act(p, e))) == straighten(act(p, project_to_ring(e))));
  }
}

TEST_CASE("fuel exhaustion is reported") {
  long long old = straighten_fuel();
  StraightenCache::global().set_enabled(false);
  set_straighten_fuel(1);
  CHECK_THROWS_AS(straighten(x_of({8, {{1, 5}, {2, 6}, {3, 7}, {4, 8}}})), FuelExhausted);
  set_straighten_fuel(old);
  StraightenCache::global().set_enabled(true);
}

TEST_CASE("cache save and load reproduce expansions") {
  namespace fs = std::filesystem;
  fs::path dir = fs::temp_directory_path() / "plucker_test_cache";
  fs::remove_all(dir);
  auto& cache = StraightenCache::global();
  cache.clear();
  std::mt19937_64 rng(17);
  std::vector<DirectedGraph> gs;
  std::vector<RingElement> before;
  for (int t = 0; t < 50; ++t) {
    gs.push_back(random_regular(8, 1 + rng() % 2, rng));
    before.push_back(straighten(x_of(gs.back())));
  }
  CHECK(cache.save(dir.string()) >= 1);
  cache.clear();
  CHECK(cache.load(dir.string()) >= 1);
  CHECK(cache.size() > 0);
  for (size_t i = 0; i < gs.size(); ++i) CHECK(straighten(x_of(gs[i])) == before[i]);

  // corrupt one file: loading warns and skips it
  for (const auto& ent : fs::directory_iterator(dir)) {
    std::ofstream(ent.path()) << "{ not json";
    break;
  }
  cache.clear();
  std::vector<std::string> warnings;
  cache.load(dir.string(), &warnings);
  CHECK(warnings.size() == 1);
  for (size_t i = 0; i < gs.size(); ++i) CHECK(straighten(x_of(gs[i])) == before[i]);
  fs::remove_all(dir);
}

TEST_CASE("sym basis and coordinates") {
  CHECK(sym_basis(6, 3).size() == 35);
  CHECK(sym_basis(8, 2).size() == 105);
  // Y of a crossing matching expressed in the non-crossing basis matches straightening
  for (const auto& m : enumerate_matchings(6)) {
    RingElement via_coords(6);
    const auto& vb = sym_basis(6, 1).v_basis();
    for (const auto& [i, c] : v_coordinates(m)) via_coords += c * y_of(vb[i]);
    CHECK(via_coords == straighten(y_of(m)));
  }
}
