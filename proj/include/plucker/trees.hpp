#pragma once

#include <vector>

#include "plucker/graph.hpp"

namespace plucker {

enum class EdgeRole { Leaf, Stalk, Base, Internal };

struct TreeEdge {
  int u = 0, v = 0;
  EdgeRole role = EdgeRole::Internal;
  int index = 0;  // stalk number, base number, or leaf label
};

enum class TreeKind { Generic, YTree, Caterpillar };

struct TrivalentTree {
  int num_vertices = 0;
  std::vector<TreeEdge> edges;
  std::vector<int> leaf_vertex;  // label -> vertex, entry 0 unused
  std::vector<std::vector<std::pair<int, int>>> adj;  // vertex -> (neighbour, edge index)
  TreeKind kind = TreeKind::Generic;
  int r = 0;

  int num_leaves() const { return static_cast<int>(leaf_vertex.size()) - 1; }
  int leaf_label(int vertex) const;  // 0 if not a leaf
  bool is_leaf(int vertex) const { return adj[vertex].size() == 1; }
  int stalk_edge(int i) const;  // Y-tree / caterpillar only
  int base_edge(int k) const;
};

// Builds adjacency and checks: connected, acyclic, valences 1 or 3, leaves labelled 1..L.
TrivalentTree make_tree(int num_vertices, const std::vector<std::pair<int, int>>& edges, const std::vector<std::pair<int, int>>& leaves);
TrivalentTree build_y_tree(int r);
TrivalentTree build_caterpillar(int r);

struct TreeWeighting {
  TrivalentTree tree;
  std::vector<int> weight;  // per edge index
  bool reduced = false;
  bool operator==(const TreeWeighting& o) const { return weight == o.weight && reduced == o.reduced; }
};

std::vector<int> path_edges(const TrivalentTree& t, int label_a, int label_b);
std::vector<int> path_vertices(const TrivalentTree& t, int label_a, int label_b);
int level(const DirectedGraph& g, const TrivalentTree& t);
TreeWeighting weighting_of_graph(const DirectedGraph& g, const TrivalentTree& t);
bool is_admissible(const TreeWeighting& w);
// Common leaf weight, or -1.
int leaf_degree(const TreeWeighting& w);
DirectedGraph greedy_graph(const TreeWeighting& w);
TreeWeighting truncate(const TreeWeighting& w);                 // Y-tree -> caterpillar
TreeWeighting untruncate(const TreeWeighting& reduced, int d);  // caterpillar -> Y-tree
std::vector<TreeWeighting> enumerate_admissible_regular(const TrivalentTree& t, int d);
long long count_admissible_regular(const TrivalentTree& t, int d);
bool toric_plucker_applicable(const TrivalentTree& t, int a, int b, int c, int d);

}  // namespace plucker
