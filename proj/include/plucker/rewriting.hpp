#pragma once

#include <array>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "plucker/trees.hpp"

namespace plucker {

// Reduced matching on the r-th caterpillar. stalk[i-1] = s_i, base[k-2] = b_k (k = 2..r-2).
struct ReducedMatching {
  int r = 0;
  std::vector<int> stalk;
  std::vector<int> base;
  auto operator<=>(const ReducedMatching&) const = default;
};

using MatchingTuple = std::vector<ReducedMatching>;
using Triple = std::array<int, 3>;  // (left, stalk, right) at a trinode

struct RewriteError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

ReducedMatching zero_matching(int r);
Triple local_triple(const ReducedMatching& m, int j);  // j = 2..r-1
bool is_reduced_matching(const ReducedMatching& m);
ReducedMatching from_weighting(const TreeWeighting& w);
TreeWeighting to_weighting(const ReducedMatching& m);
std::vector<ReducedMatching> enumerate_reduced_matchings(int r);
std::vector<ReducedMatching> enumerate_reduced_matchings(const TrivalentTree& t);

// Sum over entries, flattened as stalks then bases.
std::vector<int> sum_of(const MatchingTuple& tup);
bool is_balanced(const MatchingTuple& tup);
bool is_unbreakable(const ReducedMatching& m);

// Single-trinode balancing of two local triples.
std::pair<Triple, Triple> balance_triples(Triple x, Triple y);

struct RewriteStep {
  int i = 0, j = 0;
  ReducedMatching before_i, before_j, after_i, after_j;
};
using RewriteTrace = std::vector<RewriteStep>;

std::pair<ReducedMatching, ReducedMatching> balance_pair(const ReducedMatching& x, const ReducedMatching& y);
MatchingTuple balance(MatchingTuple tup, RewriteTrace* trace = nullptr, long long fuel = 1'000'000);

// 'A', 'B' or '0' per trinode j = 2..r-1.
std::string type_vector(const MatchingTuple& tup);

// Letter rank of a local triple; ends use E<F<G<H.
int letter_rank(const ReducedMatching& m, int j);
bool letter_less(const ReducedMatching& a, const ReducedMatching& b);

MatchingTuple normal_form(const MatchingTuple& tup, RewriteTrace* trace = nullptr);
MatchingTuple toric_segre_move(const MatchingTuple& tup, int j);

// All pairs (x, y) of reduced matchings with x + y equal to the given pair's sum.
std::vector<std::pair<ReducedMatching, ReducedMatching>> quadratic_partners(const ReducedMatching& x, const ReducedMatching& y,
                                                                            bool unbreakable_only = false);
MatchingTuple random_equivalent(const MatchingTuple& tup, std::mt19937_64& rng, int steps);

std::string to_string(const ReducedMatching& m);
ReducedMatching parse_reduced_matching(const std::string& text);

}  // namespace plucker
