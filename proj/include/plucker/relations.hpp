#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "plucker/linalg.hpp"
#include "plucker/ring.hpp"
#include "plucker/sym.hpp"

namespace plucker {

RingElement project_to_ring(const SymElement& e);

SymElement segre_cubic();
SymElement segre8();  // direct 8-point construction
SymElement triple_edge(int a, int b, int n);

// Sym^k monomial with all factors equal.
SymElement power_of(const Matching& m, int k);

// cycle = (p1 p2 p3 p4): red p1p2, p3p4; green p2p3, p4p1.
SymElement simplest_binomial(const std::vector<int>& cycle_a, const std::vector<int>& cycle_b, const std::vector<Edge>& doubled_rest, int n);
SymElement simplest_binomial_example();  // the 8-point instance

struct BinomialQuadDatum {
  int n = 0;
  Matching red, green;
  std::vector<int> U;
};
void validate(const BinomialQuadDatum& d);
bool is_simple(const BinomialQuadDatum& d);
bool is_simplest(const BinomialQuadDatum& d);
SymElement simple_binomial(const BinomialQuadDatum& d);

// (Y_g ^ Y_g') (x) (Y_d ^ Y_d') -> Y_{g d} Y_{g' d'} - Y_{g' d} Y_{g d'}; g, g' and d, d' cover complementary label sets.
SymElement iota(int n, const std::vector<Edge>& g, const std::vector<Edge>& gp, const std::vector<Edge>& d, const std::vector<Edge>& dp);

struct GenSegreDatum {
  int n = 0;
  std::vector<int> UR, UG, UB;
  Matching red, green, blue;
};
void validate(const GenSegreDatum& s);  // throws GraphError
bool is_small(const GenSegreDatum& s);
bool is_degenerate(const GenSegreDatum& s);
SymElement generalized_segre(const GenSegreDatum& s);
GenSegreDatum genseg6_datum();
GenSegreDatum random_gen_segre_datum(int n, std::mt19937_64& rng);

struct SquareRotationDatum {
  int n = 0;
  std::vector<int> U;          // four labels
  std::vector<Edge> purple;    // valence 2 off U, 1 on U
  std::vector<Edge> black;     // valence 1 off U, 0 on U
};
void validate(const SquareRotationDatum& p);
SymElement square_rotation(const SquareRotationDatum& p);
// Lengths of the two purple paths joining the vertices of U.
std::vector<int> special_path_lengths(const SquareRotationDatum& p);
SquareRotationDatum random_square_rotation_datum(int n, std::mt19937_64& rng);

// a on labels map_a[1..], b on labels map_b[1..] (1-based, index 0 unused).
SymElement outer_product(const SymElement& a, const std::vector<int>& map_a, const SymElement& b, const std::vector<int>& map_b, int n);
SymElement unit_element(int k);

// Rows: non-crossing k-regular graphs; columns: sym_basis(n,k).
QMatrix projection_matrix(int n, int k, int jobs = 0);
void check_feasible(int n, int k);  // throws DimensionError past the desk-scale guard
long long ideal_component_dim(int n, int k, int jobs = 0);
std::vector<DenseVec> ideal_basis(int n, int k, int jobs = 0);

// Action of a permutation on Sym^k coordinates (sign-twisted, matches act()).
SparseVec act_coordinates(const Perm& s, int n, int k, const SparseVec& x);

struct OrbitSpan {
  int rank = 0;
  long long ideal_dim = 0;
  bool spans_ideal = false;
};
OrbitSpan orbit_span_check(const SymElement& rel, int jobs = 0);

// {v * q}: V-basis times a basis of I^(2), in Sym^3 coordinates.
std::vector<SparseVec> quadratic_ideal_component(int n, int jobs = 0);

long long count_good_bipartitions(int n);

// Figure identities, each as (layers, coefficient) terms that should vanish.
using TensorTerms = std::vector<std::pair<std::vector<Matching>, Q>>;
TensorTerms fig_id6();
TensorTerms fig_id8();

}  // namespace plucker
