#include <random>

#include "doctest.h"
#include "plucker/relations.hpp"
#include "plucker/ring.hpp"

using namespace plucker;

namespace {

bool vanishes_in_ring(const SymElement& e) { return straighten(project_to_ring(e)).is_zero(); }

// Vanishing at random points is an oracle independent of straightening.
bool vanishes_at_points(const SymElement& e, int trials) {
  for (int t = 0; t < trials; ++t)
    if (evaluate(e, random_config(e.n, 1000 + t)) != 0) return false;
  return true;
}

}  // namespace

TEST_CASE("Segre cubic") {
  auto s = segre_cubic();
  CHECK(s.k == 3);
  CHECK_FALSE(s.is_zero());
  CHECK(vanishes_in_ring(s));
  CHECK(vanishes_at_points(s, 10));
  auto o = orbit_span_check(s);
  CHECK(o.rank == 1);
  CHECK(o.ideal_dim == 1);
  CHECK(o.spans_ideal);
}

TEST_CASE("Segre 8 via outer product") {
  std::vector<int> map_a{0, 1, 2, 3, 4, 5, 6}, map_b{0, 7, 8};
  auto e = outer_product(segre_cubic(), map_a, triple_edge(1, 2, 2), map_b, 8);
  CHECK(e == segre8());
  CHECK(vanishes_in_ring(e));
}

TEST_CASE("binomial quadrics") {
  BinomialQuadDatum all_two{6, make_matching(6, {{1, 2}, {3, 4}, {5, 6}}), make_matching(6, {{1, 2}, {3, 4}, {5, 6}}), {1, 2, 3, 4}};
  CHECK(simple_binomial(all_two).is_zero());

  BinomialQuadDatum simplest{8, make_matching(8, {{1, 2}, {5, 6}, {3, 4}, {7, 8}}), make_matching(8, {{2, 6}, {1, 5}, {4, 8}, {3, 7}}), {1, 2, 5, 6}};
  CHECK(is_simplest(simplest));
  CHECK(simple_binomial(simplest) == simplest_binomial_example());
  CHECK(vanishes_in_ring(simplest_binomial_example()));
  CHECK(vanishes_at_points(simplest_binomial_example(), 5));

  BinomialQuadDatum simple10{10, make_matching(10, {{1, 2}, {3, 4}, {5, 6}, {7, 8}, {9, 10}}),
                             make_matching(10, {{2, 3}, {1, 4}, {6, 7}, {8, 9}, {5, 10}}), {1, 2, 3, 4}};
  CHECK(is_simple(simple10));
  CHECK_FALSE(is_simplest(simple10));
  CHECK(vanishes_in_ring(simple_binomial(simple10)));

  BinomialQuadDatum bad = simplest;
  bad.U = {1, 1, 2, 3};
  CHECK_THROWS_AS(validate(bad), GraphError);
}

TEST_CASE("orbit span of zero") {
  auto o = orbit_span_check(SymElement(8, 2));
  CHECK(o.rank == 0);
  CHECK_FALSE(o.spans_ideal);
}

TEST_CASE("simplest binomial generates the quadratic ideal at n = 8") {
  auto o = orbit_span_check(simplest_binomial_example());
  CHECK(o.ideal_dim == 14);
  CHECK(o.rank == 14);
  CHECK(o.spans_ideal);
}

TEST_CASE("ideal dimensions") {
  CHECK(ideal_component_dim(6, 2) == 0);
  CHECK(ideal_component_dim(6, 3) == 1);
  CHECK(ideal_component_dim(8, 2) == 14);
  CHECK(quadratic_ideal_component(6).empty());
  for (const auto& v : ideal_basis(8, 2)) {
    SymElement e(8, 2);
    const auto& b = sym_basis(8, 2);
    for (size_t i = 0; i < v.size(); ++i)
      if (v[i] != 0) e += v[i] * b.element(static_cast<int>(i));
    CHECK(vanishes_at_points(e, 3));
  }
}

TEST_CASE("desk-scale guard") {
  CHECK_THROWS_AS(check_feasible(12, 2), DimensionError);
  CHECK_THROWS_AS(check_feasible(10, 3), DimensionError);
  CHECK_THROWS_AS(check_feasible(8, 4), DimensionError);
  CHECK_THROWS_AS(check_feasible(7, 2), DimensionError);
  CHECK_NOTHROW(check_feasible(10, 2));
  CHECK_NOTHROW(check_feasible(8, 3));
}

TEST_CASE("generalized Segre relations vanish") {
  auto g6 = generalized_segre(genseg6_datum());
  CHECK(vanishes_in_ring(g6));
  CHECK(vanishes_at_points(g6, 5));
  std::mt19937_64 rng(21);
  for (int t = 0; t < 6; ++t) {
    auto d = random_gen_segre_datum(8, rng);
    auto e = generalized_segre(d);
    CHECK(vanishes_in_ring(e));
    CHECK(vanishes_at_points(e, 3));
  }
}

TEST_CASE("square rotations vanish") {
  std::mt19937_64 rng(23);
  for (int t = 0; t < 4; ++t) {
    auto d = random_square_rotation_datum(8, rng);
    auto e = square_rotation(d);
    CHECK(vanishes_in_ring(e));
    CHECK(vanishes_at_points(e, 3));
    auto len = special_path_lengths(d);
    REQUIRE(len.size() == 2);
    if (len[0] % 2 == 0 && len[1] % 2 == 0 && !e.is_zero()) {
      // lies in the cubic part of the ideal generated by quadrics
      auto gens = quadratic_ideal_component(8);
      Subspace s(sym_basis(8, 3).size());
      for (auto& v : gens) s.add(v);
      CHECK(s.contains(sym_coordinates(e)));
    }
  }
}
