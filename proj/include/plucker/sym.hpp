#pragma once

#include <map>
#include <vector>

#include "plucker/graph.hpp"
#include "plucker/linalg.hpp"
#include "plucker/rational.hpp"

namespace plucker {

// Monomial in Sym^k(V): sorted multiset of k matching keys.
using Monomial = std::vector<GraphKey>;

struct SymElement {
  int n = 0;
  int k = 0;
  std::map<Monomial, Q> terms;

  SymElement() = default;
  SymElement(int n_, int k_) : n(n_), k(k_) {}
  void add(std::vector<Matching> factors, const Q& c);
  void add_monomial(Monomial m, const Q& c);
  bool is_zero() const { return terms.empty(); }
  SymElement& operator+=(const SymElement& o);
  SymElement& operator-=(const SymElement& o);
  SymElement& operator*=(const Q& c);
  bool operator==(const SymElement&) const = default;
};
SymElement operator+(SymElement a, const SymElement& b);
SymElement operator-(SymElement a, const SymElement& b);
SymElement operator*(const Q& c, SymElement a);

std::vector<Matching> factors_of(int n, const Monomial& m);

// Standard basis of Sym^k(V_n): sorted index tuples into the non-crossing matchings.
class SymBasis {
 public:
  SymBasis(int n, int k);
  int n() const { return n_; }
  int k() const { return k_; }
  int size() const { return static_cast<int>(tuples_.size()); }
  const std::vector<int>& tuple(int i) const { return tuples_[i]; }
  int index_of(std::vector<int> t) const;  // sorts t
  const std::vector<Matching>& v_basis() const { return v_basis_; }
  SymElement element(int i) const;

 private:
  int n_, k_;
  std::vector<Matching> v_basis_;
  std::vector<std::vector<int>> tuples_;
  std::map<std::vector<int>, int> index_;
};

const SymBasis& sym_basis(int n, int k);

// Y_m in the non-crossing Y-basis of V: index -> coefficient.
const SparseVec& v_coordinates(const Matching& m);

// Coordinates in Sym^k(V) over sym_basis(n,k).
SparseVec sym_coordinates(const SymElement& e);
// Coordinates in the ordered tensor power V^{(x)k}: index = sum t_i * C^i.
std::map<std::vector<int>, Q> tensor_coordinates(const std::vector<std::pair<std::vector<Matching>, Q>>& terms);

}  // namespace plucker
