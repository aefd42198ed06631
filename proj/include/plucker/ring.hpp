#pragma once

#include <map>
#include <stdexcept>
#include <vector>

#include "plucker/graph.hpp"
#include "plucker/rational.hpp"
#include "plucker/sym.hpp"

namespace plucker {

class FuelExhausted : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct RingElement {
  int n = 0;
  std::map<GraphKey, Q> terms;  // canonical loop-free graphs

  RingElement() = default;
  explicit RingElement(int n_) : n(n_) {}
  void add(const GraphKey& key, const Q& c);
  bool is_zero() const { return terms.empty(); }
  RingElement& operator+=(const RingElement& o);
  RingElement& operator-=(const RingElement& o);
  RingElement& operator*=(const Q& c);
  bool operator==(const RingElement&) const = default;
};
RingElement operator+(RingElement a, const RingElement& b);
RingElement operator-(RingElement a, const RingElement& b);
RingElement operator*(const Q& c, RingElement a);

// Degree of a homogeneous element, -1 for zero or mixed.
int regular_degree(const RingElement& e);

struct PointConfig {
  std::vector<std::pair<Q, Q>> points;  // (x_i, y_i), 0-indexed for label i+1
};

RingElement x_of(const DirectedGraph& g);
RingElement y_of(const Matching& m);
RingElement multiply(const RingElement& a, const RingElement& b);
RingElement straighten(const RingElement& e);
Q evaluate(const RingElement& e, const PointConfig& p);
Q evaluate(const SymElement& e, const PointConfig& p);
SymElement kempe_factor(const DirectedGraph& g);
long long hilbert_dim(int n, int d);

RingElement act(const Perm& s, const RingElement& e);
SymElement act(const Perm& s, const SymElement& e);

// Random configuration with x in [-9,9] distinct, y = 1.
PointConfig random_config(int n, std::uint64_t seed);

// Rewrite budget per top-level straighten call.
void set_straighten_fuel(long long fuel);
long long straighten_fuel();

}  // namespace plucker
