#include "plucker/graph.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace plucker {

CanonicalForm canonicalize(const DirectedGraph& g) {
  CanonicalForm out;
  out.graph.n = g.n;
  out.graph.edges.reserve(g.edges.size());
  int flips = 0;
  bool loop = false;
  for (auto e : g.edges) {
    if (e.a == e.b) loop = true;
    if (e.a > e.b) {
      std::swap(e.a, e.b);
      ++flips;
    }
    out.graph.edges.push_back(e);
  }
  std::sort(out.graph.edges.begin(), out.graph.edges.end());
  out.sign = loop ? 0 : (flips % 2 ? -1 : 1);
  return out;
}

GraphKey key_of(const DirectedGraph& g) {
  GraphKey k;
  k.reserve(g.edges.size());
  for (auto e : g.edges) k.push_back(edge_code(e.a, e.b));
  std::sort(k.begin(), k.end());
  return k;
}

DirectedGraph graph_of(int n, const GraphKey& key) {
  DirectedGraph g;
  g.n = n;
  for (auto c : key) g.edges.push_back({code_a(c), code_b(c)});
  return g;
}

std::vector<int> valences(const DirectedGraph& g) {
  std::vector<int> v(g.n + 1, 0);
  for (auto e : g.edges) {
    if (e.a < 1 || e.a > g.n || e.b < 1 || e.b > g.n) throw GraphError("edge endpoint out of range");
    ++v[e.a];
    ++v[e.b];
  }
  return v;
}

int regular_degree(const DirectedGraph& g) {
  auto v = valences(g);
  if (g.n == 0) return 0;
  for (int i = 2; i <= g.n; ++i)
    if (v[i] != v[1]) return -1;
  return v[1];
}

DirectedGraph product(const DirectedGraph& g, const DirectedGraph& h) {
  if (g.n != h.n) throw GraphError("label set mismatch");
  DirectedGraph out = g;
  out.edges.insert(out.edges.end(), h.edges.begin(), h.edges.end());
  return out;
}

Matching make_matching(int n, std::vector<Edge> edges) {
  if (n % 2) throw GraphError("matching needs an even label set");
  std::vector<int> seen(n + 1, 0);
  for (auto& e : edges) {
    if (e.a == e.b) throw GraphError("matching contains a loop");
    if (e.a > e.b) std::swap(e.a, e.b);
    if (e.a < 1 || e.b > n) throw GraphError("edge endpoint out of range");
    if (seen[e.a]++ || seen[e.b]++) throw GraphError("vertex covered twice");
  }
  if (static_cast<int>(edges.size()) * 2 != n) throw GraphError("not a perfect matching");
  std::sort(edges.begin(), edges.end());
  return Matching{n, std::move(edges)};
}

DirectedGraph directed_min_max(const Matching& m) { return DirectedGraph{m.n, m.edges}; }

GraphKey key_of(const Matching& m) { return key_of(directed_min_max(m)); }

Matching matching_of(int n, const GraphKey& key) { return make_matching(n, graph_of(n, key).edges); }

bool is_noncrossing(const Matching& m) {
  for (size_t i = 0; i < m.edges.size(); ++i)
    for (size_t j = i + 1; j < m.edges.size(); ++j)
      if (chords_cross(m.edges[i].a, m.edges[i].b, m.edges[j].a, m.edges[j].b)) return false;
  return true;
}

int orientation_sign(int n, const std::vector<Edge>& directed) {
  if (n % 2 || static_cast<int>(directed.size()) * 2 != n) throw GraphError("not a perfect matching");
  std::vector<Edge> sorted = directed;
  std::sort(sorted.begin(), sorted.end(), [](Edge x, Edge y) { return std::min(x.a, x.b) < std::min(y.a, y.b); });
  Perm p(n + 1, 0);
  std::vector<int> seen(n + 1, 0);
  int pos = 1;
  for (auto e : sorted) {
    if (e.a == e.b) throw GraphError("matching contains a loop");
    for (int v : {e.a, e.b}) {
      if (v < 1 || v > n || seen[v]++) throw GraphError("not a perfect matching");
      p[pos++] = v;
    }
  }
  return perm_sign(p);
}

DirectedGraph underlying(const ColoredGraph& c) {
  DirectedGraph g;
  g.n = c.n;
  for (const auto& m : c.layers) {
    if (m.n != c.n) throw GraphError("layer label set mismatch");
    g.edges.insert(g.edges.end(), m.edges.begin(), m.edges.end());
  }
  return g;
}

namespace {
int find_root(std::vector<int>& parent, int x) {
  while (parent[x] != x) x = parent[x] = parent[parent[x]];
  return x;
}
}  // namespace

ComponentPartition connected_component_partition(const DirectedGraph& g) {
  std::vector<int> parent(g.n + 1);
  std::iota(parent.begin(), parent.end(), 0);
  for (auto e : g.edges) parent[find_root(parent, e.a)] = find_root(parent, e.b);
  std::vector<std::vector<int>> by_root(g.n + 1);
  for (int v = 1; v <= g.n; ++v) by_root[find_root(parent, v)].push_back(v);
  ComponentPartition out;
  for (auto& b : by_root)
    if (!b.empty()) out.blocks.push_back(b);
  std::sort(out.blocks.begin(), out.blocks.end());
  for (auto& b : out.blocks) out.shape.push_back(static_cast<int>(b.size()));
  std::sort(out.shape.rbegin(), out.shape.rend());
  return out;
}

ComponentPartition connected_component_partition(const ColoredGraph& g) {
  return connected_component_partition(underlying(g));
}

namespace {
struct NcEnum {
  int n, d;
  std::vector<Edge> pairs;
  std::vector<int> deg;
  std::vector<Edge> chosen;
  std::vector<DirectedGraph> out;

  void run(size_t idx) {
    if (idx == pairs.size()) {
      for (int v = 1; v <= n; ++v)
        if (deg[v] != d) return;
      out.push_back(DirectedGraph{n, chosen});
      return;
    }
    Edge e = pairs[idx];
    // all pairs starting below e.a are done, so e.a-1 must be saturated
    if (idx == 0 || pairs[idx - 1].a != e.a) {
      if (e.a > 1 && deg[e.a - 1] != d) return;
    }
    int room = std::min(d - deg[e.a], d - deg[e.b]);
    bool ok = room > 0;
    if (ok)
      for (auto c : chosen)
        if (chords_cross(c.a, c.b, e.a, e.b)) {
          ok = false;
          break;
        }
    int max_mult = ok ? room : 0;
    for (int m = max_mult; m >= 0; --m) {
      for (int i = 0; i < m; ++i) chosen.push_back(e);
      deg[e.a] += m;
      deg[e.b] += m;
      run(idx + 1);
      deg[e.a] -= m;
      deg[e.b] -= m;
      chosen.resize(chosen.size() - m);
    }
  }
};
}  // namespace

std::vector<DirectedGraph> enumerate_noncrossing_regular(int n, int d) {
  if (n < 0 || d < 0) throw GraphError("bad enumeration parameters");
  NcEnum e{n, d, {}, std::vector<int>(n + 1, 0), {}, {}};
  for (int a = 1; a <= n; ++a)
    for (int b = a + 1; b <= n; ++b) e.pairs.push_back({a, b});
  if (n == 0) return {DirectedGraph{0, {}}};
  e.run(0);
  std::sort(e.out.begin(), e.out.end(), [](const DirectedGraph& x, const DirectedGraph& y) { return x.edges < y.edges; });
  return e.out;
}

namespace {
void match_rec(int n, std::vector<int>& used, std::vector<Edge>& cur, std::vector<Matching>& out) {
  int first = 1;
  while (first <= n && used[first]) ++first;
  if (first > n) {
    out.push_back(Matching{n, cur});
    return;
  }
  used[first] = 1;
  for (int j = first + 1; j <= n; ++j) {
    if (used[j]) continue;
    used[j] = 1;
    cur.push_back({first, j});
    match_rec(n, used, cur, out);
    cur.pop_back();
    used[j] = 0;
  }
  used[first] = 0;
}
}  // namespace

std::vector<Matching> enumerate_matchings(int n) {
  if (n % 2) throw GraphError("odd label set has no perfect matchings");
  std::vector<Matching> out;
  std::vector<int> used(n + 1, 0);
  std::vector<Edge> cur;
  match_rec(n, used, cur, out);
  return out;
}

Perm identity_perm(int n) {
  Perm p(n + 1);
  std::iota(p.begin(), p.end(), 0);
  return p;
}

Perm compose(const Perm& s, const Perm& t) {
  if (s.size() != t.size()) throw GraphError("permutation size mismatch");
  Perm r(s.size(), 0);
  for (size_t i = 1; i < s.size(); ++i) r[i] = s[t[i]];
  return r;
}

Perm inverse(const Perm& s) {
  Perm r(s.size(), 0);
  for (size_t i = 1; i < s.size(); ++i) r[s[i]] = static_cast<int>(i);
  return r;
}

bool is_perm(const Perm& s, int n) {
  if (static_cast<int>(s.size()) != n + 1) return false;
  std::vector<int> seen(n + 1, 0);
  for (int i = 1; i <= n; ++i) {
    if (s[i] < 1 || s[i] > n || seen[s[i]]++) return false;
  }
  return true;
}

std::vector<int> cycle_type(const Perm& s) {
  int n = static_cast<int>(s.size()) - 1;
  std::vector<int> seen(n + 1, 0), type;
  for (int i = 1; i <= n; ++i) {
    if (seen[i]) continue;
    int len = 0;
    for (int j = i; !seen[j]; j = s[j]) {
      seen[j] = 1;
      ++len;
    }
    type.push_back(len);
  }
  std::sort(type.rbegin(), type.rend());
  return type;
}

int perm_sign(const Perm& s) {
  int parity = 0;
  for (int c : cycle_type(s)) parity += c - 1;
  return parity % 2 ? -1 : 1;
}

Perm perm_with_cycle_type(const std::vector<int>& type) {
  int n = std::accumulate(type.begin(), type.end(), 0);
  Perm p = identity_perm(n);
  int start = 1;
  for (int len : type) {
    for (int i = 0; i < len; ++i) p[start + i] = start + (i + 1) % len;
    start += len;
  }
  return p;
}

DirectedGraph relabel(const Perm& s, const DirectedGraph& g) {
  if (static_cast<int>(s.size()) != g.n + 1) throw GraphError("permutation size mismatch");
  DirectedGraph out{g.n, {}};
  for (auto e : g.edges) out.edges.push_back({s[e.a], s[e.b]});
  return out;
}

Matching relabel(const Perm& s, const Matching& m) {
  return make_matching(m.n, relabel(s, directed_min_max(m)).edges);
}

std::string to_text(const DirectedGraph& g) {
  std::ostringstream os;
  os << "n=" << g.n << "; edges=";
  for (size_t i = 0; i < g.edges.size(); ++i) os << (i ? "," : "") << g.edges[i].a << "-" << g.edges[i].b;
  return os.str();
}

long long catalan(int k) {
  long long c = 1;
  for (int i = 0; i < k; ++i) c = c * 2 * (2 * i + 1) / (i + 2);
  return c;
}

}  // namespace plucker
