#include "plucker/trees.hpp"

#include <algorithm>
#include <functional>
#include <queue>
#include <set>

namespace plucker {

int TrivalentTree::leaf_label(int vertex) const {
  for (int l = 1; l <= num_leaves(); ++l)
    if (leaf_vertex[l] == vertex) return l;
  return 0;
}

int TrivalentTree::stalk_edge(int i) const {
  for (size_t e = 0; e < edges.size(); ++e)
    if (edges[e].role == EdgeRole::Stalk && edges[e].index == i) return static_cast<int>(e);
  throw GraphError("no such stalk");
}

int TrivalentTree::base_edge(int k) const {
  for (size_t e = 0; e < edges.size(); ++e)
    if (edges[e].role == EdgeRole::Base && edges[e].index == k) return static_cast<int>(e);
  throw GraphError("no such base edge");
}

namespace {

TrivalentTree finish_tree(int nv, std::vector<TreeEdge> edges, const std::vector<std::pair<int, int>>& leaves) {
  TrivalentTree t;
  t.num_vertices = nv;
  t.edges = std::move(edges);
  t.adj.assign(nv, {});
  for (size_t i = 0; i < t.edges.size(); ++i) {
    auto [u, v, role, idx] = t.edges[i];
    if (u < 0 || v < 0 || u >= nv || v >= nv || u == v) throw GraphError("bad tree edge");
    t.adj[u].emplace_back(v, static_cast<int>(i));
    t.adj[v].emplace_back(u, static_cast<int>(i));
  }
  if (static_cast<int>(t.edges.size()) != nv - 1) throw GraphError("tree must have vertices-1 edges");
  std::vector<char> seen(nv, 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  int count = 0;
  while (!stack.empty()) {
    int x = stack.back();
    stack.pop_back();
    ++count;
    for (auto [y, e] : t.adj[x])
      if (!seen[y]) {
        seen[y] = 1;
        stack.push_back(y);
      }
  }
  if (count != nv) throw GraphError("tree is disconnected");
  int nleaves = 0;
  for (int v = 0; v < nv; ++v) {
    auto deg = t.adj[v].size();
    if (deg != 1 && deg != 3) throw GraphError("tree vertex with valence other than 1 or 3");
    if (deg == 1) ++nleaves;
  }
  if (static_cast<int>(leaves.size()) != nleaves) throw GraphError("every leaf needs exactly one label");
  t.leaf_vertex.assign(nleaves + 1, -1);
  for (auto [v, l] : leaves) {
    if (l < 1 || l > nleaves || t.leaf_vertex[l] != -1) throw GraphError("leaf labels must be 1..L without repeats");
    if (v < 0 || v >= nv || t.adj[v].size() != 1) throw GraphError("label attached to a non-leaf");
    t.leaf_vertex[l] = v;
  }
  for (auto& e : t.edges)
    if (t.adj[e.u].size() == 1 || t.adj[e.v].size() == 1) {
      if (e.role == EdgeRole::Internal) {
        e.role = EdgeRole::Leaf;
        e.index = t.adj[e.u].size() == 1 ? 0 : 0;
      }
    }
  for (auto& e : t.edges)
    if (e.role == EdgeRole::Leaf && e.index == 0) {
      int leafv = t.adj[e.u].size() == 1 ? e.u : e.v;
      for (int l = 1; l <= nleaves; ++l)
        if (t.leaf_vertex[l] == leafv) e.index = l;
    }
  return t;
}

}  // namespace

TrivalentTree make_tree(int num_vertices, const std::vector<std::pair<int, int>>& edges, const std::vector<std::pair<int, int>>& leaves) {
  std::vector<TreeEdge> te;
  for (auto [u, v] : edges) te.push_back({u, v, EdgeRole::Internal, 0});
  return finish_tree(num_vertices, std::move(te), leaves);
}

namespace {
int attach_point(int i, int r) {
  if (i == 1) return 2;
  if (i == r) return r - 1;
  return i;
}
}  // namespace

TrivalentTree build_y_tree(int r) {
  if (r < 3) throw GraphError("Y-tree needs r >= 3");
  const int nv = 4 * r - 2;
  auto top = [&](int i) { return 2 * r + i - 1; };
  auto base = [&](int j) { return 3 * r + j - 2; };
  std::vector<TreeEdge> e;
  std::vector<std::pair<int, int>> leaves;
  for (int i = 1; i <= r; ++i)
    for (int l : {2 * i - 1, 2 * i}) {
      e.push_back({l - 1, top(i), EdgeRole::Leaf, l});
      leaves.emplace_back(l - 1, l);
    }
  for (int i = 1; i <= r; ++i) e.push_back({top(i), base(attach_point(i, r)), EdgeRole::Stalk, i});
  for (int k = 2; k <= r - 2; ++k) e.push_back({base(k), base(k + 1), EdgeRole::Base, k});
  auto t = finish_tree(nv, std::move(e), leaves);
  t.kind = TreeKind::YTree;
  t.r = r;
  return t;
}

TrivalentTree build_caterpillar(int r) {
  if (r < 3) throw GraphError("caterpillar needs r >= 3");
  const int nv = 2 * r - 2;
  auto base = [&](int j) { return r + j - 2; };
  std::vector<TreeEdge> e;
  std::vector<std::pair<int, int>> leaves;
  for (int i = 1; i <= r; ++i) {
    e.push_back({i - 1, base(attach_point(i, r)), EdgeRole::Stalk, i});
    leaves.emplace_back(i - 1, i);
  }
  for (int k = 2; k <= r - 2; ++k) e.push_back({base(k), base(k + 1), EdgeRole::Base, k});
  auto t = finish_tree(nv, std::move(e), leaves);
  t.kind = TreeKind::Caterpillar;
  t.r = r;
  return t;
}

namespace {
// parent-edge BFS from a vertex
std::pair<std::vector<int>, std::vector<int>> bfs_from(const TrivalentTree& t, int src) {
  std::vector<int> parent(t.num_vertices, -2), pedge(t.num_vertices, -1);
  std::queue<int> q;
  q.push(src);
  parent[src] = -1;
  while (!q.empty()) {
    int x = q.front();
    q.pop();
    for (auto [y, e] : t.adj[x])
      if (parent[y] == -2) {
        parent[y] = x;
        pedge[y] = e;
        q.push(y);
      }
  }
  return {parent, pedge};
}

void check_label(const TrivalentTree& t, int l) {
  if (l < 1 || l > t.num_leaves()) throw GraphError("leaf label out of range");
}
}  // namespace

std::vector<int> path_edges(const TrivalentTree& t, int a, int b) {
  check_label(t, a);
  check_label(t, b);
  auto [parent, pedge] = bfs_from(t, t.leaf_vertex[a]);
  std::vector<int> out;
  for (int x = t.leaf_vertex[b]; parent[x] != -1; x = parent[x]) out.push_back(pedge[x]);
  return out;
}

std::vector<int> path_vertices(const TrivalentTree& t, int a, int b) {
  check_label(t, a);
  check_label(t, b);
  auto [parent, pedge] = bfs_from(t, t.leaf_vertex[a]);
  std::vector<int> out;
  for (int x = t.leaf_vertex[b]; x != -1; x = parent[x]) out.push_back(x);
  return out;
}

int level(const DirectedGraph& g, const TrivalentTree& t) {
  if (g.n != t.num_leaves()) throw GraphError("graph labels do not match tree leaves");
  int total = 0;
  for (auto e : g.edges) total += static_cast<int>(path_edges(t, e.a, e.b).size());
  return total;
}

TreeWeighting weighting_of_graph(const DirectedGraph& g, const TrivalentTree& t) {
  if (g.n != t.num_leaves()) throw GraphError("graph labels do not match tree leaves");
  TreeWeighting w{t, std::vector<int>(t.edges.size(), 0), false};
  for (auto e : g.edges)
    for (int x : path_edges(t, e.a, e.b)) ++w.weight[x];
  return w;
}

bool is_admissible(const TreeWeighting& w) {
  const auto& t = w.tree;
  if (w.weight.size() != t.edges.size()) return false;
  for (int x : w.weight)
    if (x < 0) return false;
  for (int v = 0; v < t.num_vertices; ++v) {
    if (t.adj[v].size() != 3) continue;
    int a = w.weight[t.adj[v][0].second], b = w.weight[t.adj[v][1].second], c = w.weight[t.adj[v][2].second];
    if (a > b + c || b > a + c || c > a + b) return false;
    if (!w.reduced && (a + b + c) % 2) return false;
  }
  return true;
}

int leaf_degree(const TreeWeighting& w) {
  int d = -1;
  for (int l = 1; l <= w.tree.num_leaves(); ++l) {
    int x = w.weight[w.tree.adj[w.tree.leaf_vertex[l]][0].second];
    if (d >= 0 && x != d) return -1;
    d = x;
  }
  return d;
}

DirectedGraph greedy_graph(const TreeWeighting& w0) {
  if (w0.reduced) throw GraphError("greedy_graph needs a non-reduced weighting");
  if (!is_admissible(w0)) throw GraphError("greedy_graph needs an admissible weighting");
  const auto& t = w0.tree;
  std::vector<int> w = w0.weight;
  DirectedGraph g{t.num_leaves(), {}};
  auto leaf_edge = [&](int l) { return t.adj[t.leaf_vertex[l]][0].second; };
  while (true) {
    int start = 0;
    for (int l = 1; l <= t.num_leaves() && !start; ++l)
      if (w[leaf_edge(l)] > 0) start = l;
    if (!start) break;
    std::vector<int> used{leaf_edge(start)};
    int prev = t.leaf_vertex[start];
    int cur = t.adj[prev][0].first;
    int in_edge = used[0];
    while (t.adj[cur].size() == 3) {
      int best_v = -1, best_e = -1;
      for (auto [y, e] : t.adj[cur]) {
        if (e == in_edge) continue;
        if (best_e < 0 || w[e] > w[best_e] || (w[e] == w[best_e] && y < best_v)) {
          best_v = y;
          best_e = e;
        }
      }
      if (w[best_e] <= 0) throw std::logic_error("greedy walk stuck: weighting was not admissible");
      used.push_back(best_e);
      in_edge = best_e;
      prev = cur;
      cur = best_v;
    }
    for (int e : used) --w[e];
    int end = t.leaf_label(cur);
    g.edges.push_back({std::min(start, end), std::max(start, end)});
    TreeWeighting rest{t, w, false};
    if (!is_admissible(rest)) throw std::logic_error("greedy step left a non-admissible remainder");
  }
  std::sort(g.edges.begin(), g.edges.end());
  return g;
}

TreeWeighting truncate(const TreeWeighting& w) {
  if (w.tree.kind != TreeKind::YTree) throw GraphError("truncate expects a Y-tree weighting");
  if (leaf_degree(w) < 0) throw GraphError("truncate expects a regular weighting");
  TrivalentTree cat = build_caterpillar(w.tree.r);
  TreeWeighting out{cat, std::vector<int>(cat.edges.size(), 0), true};
  for (size_t e = 0; e < w.tree.edges.size(); ++e) {
    const auto& te = w.tree.edges[e];
    if (te.role == EdgeRole::Leaf) continue;
    if (w.weight[e] % 2) throw GraphError("odd interior weight cannot be truncated");
    int target = te.role == EdgeRole::Stalk ? cat.stalk_edge(te.index) : cat.base_edge(te.index);
    out.weight[target] = w.weight[e] / 2;
  }
  return out;
}

TreeWeighting untruncate(const TreeWeighting& red, int d) {
  if (red.tree.kind != TreeKind::Caterpillar) throw GraphError("untruncate expects a caterpillar weighting");
  TrivalentTree y = build_y_tree(red.tree.r);
  TreeWeighting out{y, std::vector<int>(y.edges.size(), 0), false};
  for (size_t e = 0; e < y.edges.size(); ++e) {
    const auto& te = y.edges[e];
    if (te.role == EdgeRole::Leaf)
      out.weight[e] = d;
    else
      out.weight[e] = 2 * red.weight[te.role == EdgeRole::Stalk ? red.tree.stalk_edge(te.index) : red.tree.base_edge(te.index)];
  }
  return out;
}

namespace {
int leaves_beyond(const TrivalentTree& t, int from, int blocked) {
  int count = 0;
  std::vector<int> stack{from};
  std::vector<char> seen(t.num_vertices, 0);
  seen[from] = seen[blocked] = 1;
  while (!stack.empty()) {
    int x = stack.back();
    stack.pop_back();
    if (t.adj[x].size() == 1) ++count;
    for (auto [y, e] : t.adj[x])
      if (!seen[y]) {
        seen[y] = 1;
        stack.push_back(y);
      }
  }
  return count;
}
}  // namespace

std::vector<TreeWeighting> enumerate_admissible_regular(const TrivalentTree& t, int d) {
  std::vector<int> w(t.edges.size(), -1), bound(t.edges.size(), 0), order;
  for (size_t e = 0; e < t.edges.size(); ++e) {
    if (t.adj[t.edges[e].u].size() == 1 || t.adj[t.edges[e].v].size() == 1) {
      w[e] = d;
    } else {
      int a = leaves_beyond(t, t.edges[e].u, t.edges[e].v), b = leaves_beyond(t, t.edges[e].v, t.edges[e].u);
      bound[e] = d * std::min(a, b);
    }
  }
  // BFS edge order from vertex 0 so trinodes close early
  {
    std::vector<char> seen(t.num_vertices, 0), taken(t.edges.size(), 0);
    std::queue<int> q;
    q.push(0);
    seen[0] = 1;
    while (!q.empty()) {
      int x = q.front();
      q.pop();
      for (auto [y, e] : t.adj[x]) {
        if (!taken[e] && w[e] < 0) {
          taken[e] = 1;
          order.push_back(e);
        }
        if (!seen[y]) {
          seen[y] = 1;
          q.push(y);
        }
      }
    }
  }
  std::vector<int> pos(t.edges.size(), -1);
  for (size_t i = 0; i < order.size(); ++i) pos[order[i]] = static_cast<int>(i);
  std::vector<std::vector<int>> closes(order.size() + 1);  // trinodes checked after assigning order[i]
  for (int v = 0; v < t.num_vertices; ++v) {
    if (t.adj[v].size() != 3) continue;
    int last = -1;
    for (auto [y, e] : t.adj[v]) last = std::max(last, pos[e]);
    closes[last < 0 ? order.size() : last].push_back(v);
  }
  auto ok = [&](int v) {
    int a = w[t.adj[v][0].second], b = w[t.adj[v][1].second], c = w[t.adj[v][2].second];
    return a <= b + c && b <= a + c && c <= a + b && (a + b + c) % 2 == 0;
  };
  for (int v : closes[order.size()])
    if (!ok(v)) return {};
  std::vector<TreeWeighting> out;
  std::function<void(size_t)> rec = [&](size_t i) {
    if (i == order.size()) {
      out.push_back(TreeWeighting{t, w, false});
      return;
    }
    int e = order[i];
    for (int x = 0; x <= bound[e]; ++x) {
      w[e] = x;
      bool good = true;
      for (int v : closes[i])
        if (!ok(v)) {
          good = false;
          break;
        }
      if (good) rec(i + 1);
    }
    w[e] = -1;
  };
  rec(0);
  return out;
}

long long count_admissible_regular(const TrivalentTree& t, int d) {
  return static_cast<long long>(enumerate_admissible_regular(t, d).size());
}

bool toric_plucker_applicable(const TrivalentTree& t, int a, int b, int c, int d) {
  std::set<int> s{a, b, c, d};
  if (s.size() != 4) throw GraphError("toric Plücker test needs four distinct leaves");
  auto meets = [&](int p, int q, int r, int s2) {
    auto x = path_vertices(t, p, q), y = path_vertices(t, r, s2);
    std::sort(x.begin(), x.end());
    std::sort(y.begin(), y.end());
    std::vector<int> both;
    std::set_intersection(x.begin(), x.end(), y.begin(), y.end(), std::back_inserter(both));
    return !both.empty();
  };
  return meets(a, b, c, d) && meets(a, c, b, d);
}

}  // namespace plucker
