#pragma once

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace plucker {

struct Edge {
  int a = 0;
  int b = 0;
  auto operator<=>(const Edge&) const = default;
};

// Directed multigraph on {1..n}; repeated edges carry multiplicity.
struct DirectedGraph {
  int n = 0;
  std::vector<Edge> edges;
  bool operator==(const DirectedGraph&) const = default;
};

struct CanonicalForm {
  DirectedGraph graph;
  int sign = 1;  // 0 iff a loop was present
};

// Compact key for canonical graphs: one 16-bit code per edge, sorted.
using GraphKey = std::vector<std::uint16_t>;

inline std::uint16_t edge_code(int a, int b) { return static_cast<std::uint16_t>((a << 8) | b); }
inline int code_a(std::uint16_t c) { return c >> 8; }
inline int code_b(std::uint16_t c) { return c & 0xff; }

struct GraphKeyHash {
  std::size_t operator()(const GraphKey& k) const noexcept {
    std::size_t h = 1469598103934665603ull;
    for (auto c : k) {
      h ^= c;
      h *= 1099511628211ull;
    }
    return h;
  }
};

class GraphError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

CanonicalForm canonicalize(const DirectedGraph& g);
GraphKey key_of(const DirectedGraph& g);  // g must be canonical and loop-free
DirectedGraph graph_of(int n, const GraphKey& key);
std::vector<int> valences(const DirectedGraph& g);
// Returns d if every vertex has valence d, else -1.
int regular_degree(const DirectedGraph& g);
DirectedGraph product(const DirectedGraph& g, const DirectedGraph& h);

// a<b, c<d assumed.
inline bool chords_cross(int a, int b, int c, int d) {
  return (a < c && c < b && b < d) || (c < a && a < d && d < b);
}

// Undirected perfect matching, stored with a<b and sorted.
struct Matching {
  int n = 0;
  std::vector<Edge> edges;
  auto operator<=>(const Matching&) const = default;
};

Matching make_matching(int n, std::vector<Edge> edges);  // validates; throws GraphError
DirectedGraph directed_min_max(const Matching& m);
GraphKey key_of(const Matching& m);
Matching matching_of(int n, const GraphKey& key);
bool is_noncrossing(const Matching& m);

// Sign of the permutation 1..n -> (a1,b1,a2,b2,...); throws on non-matchings.
int orientation_sign(int n, const std::vector<Edge>& directed);
inline int orientation_sign(const Matching& m) { return orientation_sign(m.n, m.edges); }

struct ColoredGraph {
  int n = 0;
  std::vector<Matching> layers;
};
DirectedGraph underlying(const ColoredGraph& c);

struct ComponentPartition {
  std::vector<std::vector<int>> blocks;  // sorted blocks, sorted by first element
  std::vector<int> shape;                // block sizes, descending
};
ComponentPartition connected_component_partition(const DirectedGraph& g);
ComponentPartition connected_component_partition(const ColoredGraph& g);

std::vector<DirectedGraph> enumerate_noncrossing_regular(int n, int d);
std::vector<Matching> enumerate_matchings(int n);

// Permutations of {1..n}: p[i] is the image of i, p[0] unused.
using Perm = std::vector<int>;
Perm identity_perm(int n);
Perm compose(const Perm& s, const Perm& t);  // (s t)(i) = s(t(i))
Perm inverse(const Perm& s);
int perm_sign(const Perm& s);
std::vector<int> cycle_type(const Perm& s);  // descending
Perm perm_with_cycle_type(const std::vector<int>& type);
bool is_perm(const Perm& s, int n);
DirectedGraph relabel(const Perm& s, const DirectedGraph& g);
Matching relabel(const Perm& s, const Matching& m);

std::string to_text(const DirectedGraph& g);

long long catalan(int k);

}  // namespace plucker
