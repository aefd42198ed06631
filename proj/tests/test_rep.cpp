#include "doctest.h"
#include "plucker/rep.hpp"

using namespace plucker;

TEST_CASE("partitions") {
  CHECK(partitions(4).size() == 5);
  CHECK(partitions(8).size() == 22);
  CHECK(factorial(6) == 720);
  long long total = 0;
  for (const auto& p : partitions(6)) total += class_size(p);
  CHECK(total == 720);
}

TEST_CASE("characters") {
  for (int n = 1; n <= 7; ++n)
    for (const auto& a : partitions(n)) {
      CHECK(mn_character(a, Partition(n, 1)) == hook_length_dim(a));
      auto ca = irreducible_character(a);
      for (const auto& b : partitions(n)) CHECK(inner_product(ca, irreducible_character(b)) == (a == b ? 1 : 0));
    }
  CHECK(mn_character({2, 2}, {1, 1, 1, 1}) == 2);
  CHECK(mn_character({2, 2}, {2, 2}) == 2);
  CHECK(mn_character({2, 2}, {3, 1}) == -1);
  for (const auto& mu : partitions(5)) {
    long long parity = 0;
    for (int c : mu) parity += c - 1;
    CHECK(mn_character({1, 1, 1, 1, 1}, mu) == (parity % 2 ? -1 : 1));
  }
  CHECK(hook_length_dim({5, 1, 1, 1, 1, 1}) == 126);
}

TEST_CASE("decompose the regular representation of S3") {
  ClassFunction reg{3, {}};
  for (const auto& p : partitions(3)) reg.values[p] = p == Partition{1, 1, 1} ? 6 : 0;
  auto d = decompose(reg);
  CHECK(d[{3}] == 1);
  CHECK(d[{2, 1}] == 2);
  CHECK(d[{1, 1, 1}] == 1);
  ClassFunction half = reg;
  half.values[{1, 1, 1}] = 3;
  CHECK_THROWS_AS(decompose(half), std::logic_error);
}

TEST_CASE("action characters") {
  CHECK(decompose(character_of_action(6, RepSpace::V)) == std::map<Partition, long long>{{{3, 3}, 1}});
  CHECK(decompose(character_of_action(8, RepSpace::V)) == std::map<Partition, long long>{{{4, 4}, 1}});
  auto chi = character_of_action(6, RepSpace::R2);
  CHECK(chi.values[{1, 1, 1, 1, 1, 1}] == 15);
  auto i2 = character_of_action(8, RepSpace::I2);
  CHECK(i2.values[{1, 1, 1, 1, 1, 1, 1, 1}] == 14);
  CHECK(rep_space_from_string("sym2") == RepSpace::Sym2);
  CHECK_THROWS(rep_space_from_string("nope"));
}

TEST_CASE("graded dimensions") {
  CHECK(refines({2, 2}, {4}));
  CHECK_FALSE(refines({4}, {2, 2}));
  long long sum4 = 0, sum6 = 0;
  for (const auto& p : partitions(4)) {
    bool even = std::all_of(p.begin(), p.end(), [](int x) { return x % 2 == 0; });
    if (even) sum4 += gr_dim(4, p);
  }
  for (const auto& p : partitions(6)) {
    bool even = std::all_of(p.begin(), p.end(), [](int x) { return x % 2 == 0; });
    if (even) sum6 += gr_dim(6, p);
  }
  CHECK(sum4 == 4);
  CHECK(sum6 == 35);
  CHECK(benzene_span_rank(6) == 35);
  CHECK(partition_to_string({3, 2, 1}) == "3+2+1");
}
