#include "plucker/relations.hpp"

#include <algorithm>
#include <functional>
#include <mutex>
#include <numeric>
#include <set>

#include "plucker/parallel.hpp"

namespace plucker {

RingElement project_to_ring(const SymElement& e) {
  RingElement raw(e.n);
  for (const auto& [mono, c] : e.terms) {
    GraphKey k;
    Q coeff = c;
    for (const auto& mk : mono) {
      coeff *= orientation_sign(matching_of(e.n, mk));
      GraphKey merged;
      std::merge(k.begin(), k.end(), mk.begin(), mk.end(), std::back_inserter(merged));
      k = std::move(merged);
    }
    raw.add(k, coeff);
  }
  return straighten(raw);
}

namespace {

Matching mm(int n, std::initializer_list<std::pair<int, int>> edges) {
  std::vector<Edge> e;
  for (auto [a, b] : edges) e.push_back({a, b});
  return make_matching(n, e);
}

// Y-monomial whose projection is the X product of the min->max layers.
SymElement x_form(int n, const std::vector<Matching>& layers) {
  SymElement e(n, static_cast<int>(layers.size()));
  Q c = 1;
  for (const auto& m : layers) c *= orientation_sign(m);
  e.add(layers, c);
  return e;
}

std::vector<int> check_labels(int n, const std::vector<std::vector<int>>& parts) {
  std::vector<int> owner(n + 1, -1);
  for (size_t p = 0; p < parts.size(); ++p)
    for (int v : parts[p]) {
      if (v < 1 || v > n) throw GraphError("label out of range");
      if (owner[v] != -1) throw GraphError("vertex sets overlap");
      owner[v] = static_cast<int>(p);
    }
  for (int v = 1; v <= n; ++v)
    if (owner[v] == -1) throw GraphError("vertex sets do not cover the labels");
  return owner;
}

}  // namespace

SymElement segre_cubic() {
  const int n = 6;
  return x_form(n, {mm(n, {{1, 2}, {3, 6}, {4, 5}}), mm(n, {{1, 4}, {2, 3}, {5, 6}}), mm(n, {{1, 6}, {2, 5}, {3, 4}})}) -
         x_form(n, {mm(n, {{3, 6}, {1, 4}, {2, 5}}), mm(n, {{1, 2}, {3, 4}, {5, 6}}), mm(n, {{1, 6}, {2, 3}, {4, 5}})});
}

SymElement segre8() {
  const int n = 8;
  return x_form(n, {mm(n, {{1, 2}, {3, 6}, {4, 5}, {7, 8}}), mm(n, {{1, 4}, {2, 3}, {5, 6}, {7, 8}}),
                    mm(n, {{1, 6}, {2, 5}, {3, 4}, {7, 8}})}) -
         x_form(n, {mm(n, {{3, 6}, {1, 4}, {2, 5}, {7, 8}}), mm(n, {{1, 2}, {3, 4}, {5, 6}, {7, 8}}),
                    mm(n, {{1, 6}, {2, 3}, {4, 5}, {7, 8}})});
}

SymElement power_of(const Matching& m, int k) {
  SymElement e(m.n, k);
  e.add(std::vector<Matching>(k, m), Q(1));
  return e;
}

SymElement triple_edge(int a, int b, int n) { return power_of(make_matching(n, {{a, b}}), 3); }

SymElement simplest_binomial(const std::vector<int>& ca, const std::vector<int>& cb, const std::vector<Edge>& rest, int n) {
  if (ca.size() != 4 || cb.size() != 4) throw GraphError("simplest binomial needs two 4-cycles");
  std::vector<int> rest_labels;
  for (auto e : rest) {
    rest_labels.push_back(e.a);
    rest_labels.push_back(e.b);
  }
  check_labels(n, {ca, cb, rest_labels});
  auto red_of = [](const std::vector<int>& c) { return std::vector<Edge>{{c[0], c[1]}, {c[2], c[3]}}; };
  auto green_of = [](const std::vector<int>& c) { return std::vector<Edge>{{c[1], c[2]}, {c[3], c[0]}}; };
  auto join = [&](std::vector<Edge> x, const std::vector<Edge>& y) {
    x.insert(x.end(), y.begin(), y.end());
    x.insert(x.end(), rest.begin(), rest.end());
    return make_matching(n, x);
  };
  SymElement e(n, 2);
  e.add({join(red_of(ca), red_of(cb)), join(green_of(ca), green_of(cb))}, Q(1));
  e.add({join(red_of(ca), green_of(cb)), join(green_of(ca), red_of(cb))}, Q(-1));
  return e;
}

SymElement simplest_binomial_example() { return simplest_binomial({1, 2, 6, 5}, {3, 4, 8, 7}, {}, 8); }

void validate(const BinomialQuadDatum& d) {
  if (d.red.n != d.n || d.green.n != d.n) throw GraphError("layer label set mismatch");
  make_matching(d.n, d.red.edges);
  make_matching(d.n, d.green.edges);
  std::vector<char> in(d.n + 1, 0);
  for (int u : d.U) {
    if (u < 1 || u > d.n || in[u]) throw GraphError("bad subset U");
    in[u] = 1;
  }
  for (const auto* m : {&d.red, &d.green})
    for (auto e : m->edges)
      if (in[e.a] != in[e.b]) throw GraphError("edge crosses the boundary of U");
}

bool is_simple(const BinomialQuadDatum& d) {
  validate(d);
  return d.U.size() == 4;
}

bool is_simplest(const BinomialQuadDatum& d) {
  if (!is_simple(d)) return false;
  auto part = connected_component_partition(ColoredGraph{d.n, {d.red, d.green}});
  int fours = 0, fours_in_u = 0;
  std::set<int> u(d.U.begin(), d.U.end());
  for (const auto& b : part.blocks) {
    if (b.size() == 2) continue;
    if (b.size() != 4) return false;
    ++fours;
    if (u.count(b[0])) ++fours_in_u;
  }
  return fours == 2 && fours_in_u == 1;
}

SymElement simple_binomial(const BinomialQuadDatum& d) {
  if (!is_simple(d)) throw GraphError("simple binomial needs |U| = 4");
  std::set<int> u(d.U.begin(), d.U.end());
  std::vector<Edge> r2, g2;
  for (auto e : d.red.edges) (u.count(e.a) ? g2 : r2).push_back(e);
  for (auto e : d.green.edges) (u.count(e.a) ? r2 : g2).push_back(e);
  SymElement out(d.n, 2);
  out.add({d.red, d.green}, Q(1));
  out.add({make_matching(d.n, r2), make_matching(d.n, g2)}, Q(-1));
  return out;
}

SymElement iota(int n, const std::vector<Edge>& g, const std::vector<Edge>& gp, const std::vector<Edge>& d, const std::vector<Edge>& dp) {
  auto join = [&](const std::vector<Edge>& x, const std::vector<Edge>& y) {
    std::vector<Edge> e = x;
    e.insert(e.end(), y.begin(), y.end());
    return make_matching(n, e);
  };
  SymElement out(n, 2);
  out.add({join(g, d), join(gp, dp)}, Q(1));
  out.add({join(gp, d), join(g, dp)}, Q(-1));
  return out;
}

namespace {

struct SegreParts {
  std::vector<int> owner;  // 0 = R, 1 = G, 2 = B
};

// colour index: 0 red, 1 green, 2 blue. Edge between parts p, q must have colour 3 - p - q.
SegreParts check_segre(const GenSegreDatum& s) {
  for (const auto* part : {&s.UR, &s.UG, &s.UB})
    if (part->empty() || part->size() % 2) throw GraphError("generalized Segre parts must be even and nonempty");
  SegreParts sp{check_labels(s.n, {s.UR, s.UG, s.UB})};
  const Matching* layers[3] = {&s.red, &s.green, &s.blue};
  int between[3][3] = {};
  for (int c = 0; c < 3; ++c) {
    if (layers[c]->n != s.n) throw GraphError("layer label set mismatch");
    make_matching(s.n, layers[c]->edges);
    for (auto e : layers[c]->edges) {
      int p = sp.owner[e.a], q = sp.owner[e.b];
      if (p == q) continue;
      if (3 - p - q != c) throw GraphError("edge between two parts has the wrong colour");
      ++between[std::min(p, q)][std::max(p, q)];
    }
  }
  for (int p = 0; p < 3; ++p)
    for (int q = p + 1; q < 3; ++q)
      if (between[p][q] != 0 && between[p][q] != 2) throw GraphError("two parts must be joined by 0 or 2 edges");
  return sp;
}

}  // namespace

void validate(const GenSegreDatum& s) { check_segre(s); }

bool is_small(const GenSegreDatum& s) {
  validate(s);
  return s.UR.size() == 2 || s.UG.size() == 2 || s.UB.size() == 2;
}

bool is_degenerate(const GenSegreDatum& s) {
  auto sp = check_segre(s);
  const Matching* layers[3] = {&s.red, &s.green, &s.blue};
  // special endpoints in part p, keyed by the other part
  std::vector<std::vector<std::vector<int>>> ends(3, std::vector<std::vector<int>>(3));
  for (int c = 0; c < 3; ++c)
    for (auto e : layers[c]->edges) {
      int p = sp.owner[e.a], q = sp.owner[e.b];
      if (p == q) continue;
      ends[p][q].push_back(e.a);
      ends[q][p].push_back(e.b);
    }
  for (int p = 0; p < 3; ++p)
    for (int q = p + 1; q < 3; ++q)
      if (ends[p][q].empty()) return true;
  for (int p = 0; p < 3; ++p) {
    // components of the graph restricted to part p
    std::vector<int> comp(s.n + 1);
    std::iota(comp.begin(), comp.end(), 0);
    std::function<int(int)> find = [&](int x) { return comp[x] == x ? x : comp[x] = find(comp[x]); };
    for (int c = 0; c < 3; ++c)
      for (auto e : layers[c]->edges)
        if (sp.owner[e.a] == p && sp.owner[e.b] == p) comp[find(e.a)] = find(e.b);
    int q1 = (p + 1) % 3, q2 = (p + 2) % 3;
    bool joined = false;
    for (int x : ends[p][q1])
      for (int y : ends[p][q2])
        if (find(x) == find(y)) joined = true;
    if (!joined) return true;
  }
  return false;
}

SymElement generalized_segre(const GenSegreDatum& s) {
  auto sp = check_segre(s);
  const Matching* layers[3] = {&s.red, &s.green, &s.blue};
  Q eps = 1;
  std::vector<Edge> black;
  DirectedGraph purple{s.n, {}};
  for (int c = 0; c < 3; ++c) {
    eps *= orientation_sign(*layers[c]);
    for (auto e : layers[c]->edges) {
      if (sp.owner[e.a] == c && sp.owner[e.b] == c)
        black.push_back(e);
      else
        purple.edges.push_back(e);
    }
  }
  Matching bm = make_matching(s.n, black);
  eps *= orientation_sign(bm);
  SymElement out(s.n, 3);
  out.add({s.red, s.green, s.blue}, Q(1));
  SymElement lift = kempe_factor(purple);
  for (const auto& [mono, c] : lift.terms) {
    Monomial m = mono;
    m.push_back(key_of(bm));
    out.add_monomial(std::move(m), -eps * c);
  }
  return out;
}

GenSegreDatum genseg6_datum() {
  const int n = 6;
  GenSegreDatum s;
  s.n = n;
  s.UG = {1, 2};
  s.UR = {3, 4};
  s.UB = {5, 6};
  s.blue = mm(n, {{2, 4}, {1, 3}, {5, 6}});
  s.red = mm(n, {{2, 6}, {1, 5}, {3, 4}});
  s.green = mm(n, {{4, 6}, {3, 5}, {1, 2}});
  return s;
}

namespace {
std::vector<Edge> random_pairing(std::vector<int> v, std::mt19937_64& rng) {
  std::shuffle(v.begin(), v.end(), rng);
  std::vector<Edge> out;
  for (size_t i = 0; i + 1 < v.size(); i += 2) out.push_back({v[i], v[i + 1]});
  return out;
}
}  // namespace

GenSegreDatum random_gen_segre_datum(int n, std::mt19937_64& rng) {
  if (n < 6 || n % 2) throw GraphError("generalized Segre data need an even n >= 6");
  std::vector<int> labels(n);
  std::iota(labels.begin(), labels.end(), 1);
  std::shuffle(labels.begin(), labels.end(), rng);
  // even part sizes, each >= 2
  int halves = n / 2;
  std::uniform_int_distribution<int> cut1(1, halves - 2);
  int a = cut1(rng);
  std::uniform_int_distribution<int> cut2(1, halves - a - 1);
  int b = cut2(rng);
  int sizes[3] = {2 * a, 2 * b, n - 2 * a - 2 * b};
  std::vector<int> parts[3];
  int pos = 0;
  for (int p = 0; p < 3; ++p)
    for (int i = 0; i < sizes[p]; ++i) parts[p].push_back(labels[pos++]);
  std::vector<Edge> layer[3];
  std::vector<std::vector<char>> used(3, std::vector<char>(n + 1, 0));
  std::bernoulli_distribution keep(0.75);
  for (int p = 0; p < 3; ++p)
    for (int q = p + 1; q < 3; ++q) {
      if (!keep(rng)) continue;
      int c = 3 - p - q;
      auto x = parts[p], y = parts[q];
      std::shuffle(x.begin(), x.end(), rng);
      std::shuffle(y.begin(), y.end(), rng);
      for (int i = 0; i < 2; ++i) {
        layer[c].push_back({x[i], y[i]});
        used[c][x[i]] = used[c][y[i]] = 1;
      }
    }
  for (int c = 0; c < 3; ++c)
    for (int p = 0; p < 3; ++p) {
      std::vector<int> free;
      for (int v : parts[p])
        if (!used[c][v]) free.push_back(v);
      for (auto e : random_pairing(free, rng)) layer[c].push_back(e);
    }
  GenSegreDatum s;
  s.n = n;
  s.UR = parts[0];
  s.UG = parts[1];
  s.UB = parts[2];
  for (auto* part : {&s.UR, &s.UG, &s.UB}) std::sort(part->begin(), part->end());
  s.red = make_matching(n, layer[0]);
  s.green = make_matching(n, layer[1]);
  s.blue = make_matching(n, layer[2]);
  validate(s);
  return s;
}

void validate(const SquareRotationDatum& p) {
  if (p.U.size() != 4) throw GraphError("square rotation needs four labels in U");
  std::vector<char> in(p.n + 1, 0);
  for (int u : p.U) {
    if (u < 1 || u > p.n || in[u]) throw GraphError("bad subset U");
    in[u] = 1;
  }
  std::vector<int> pv(p.n + 1, 0), bv(p.n + 1, 0);
  for (auto e : p.purple) {
    if (e.a < 1 || e.b < 1 || e.a > p.n || e.b > p.n || e.a == e.b) throw GraphError("bad purple edge");
    ++pv[e.a];
    ++pv[e.b];
  }
  for (auto e : p.black) {
    if (e.a < 1 || e.b < 1 || e.a > p.n || e.b > p.n || e.a == e.b) throw GraphError("bad black edge");
    ++bv[e.a];
    ++bv[e.b];
  }
  for (int v = 1; v <= p.n; ++v) {
    if (pv[v] != (in[v] ? 1 : 2)) throw GraphError("purple valence must be 1 on U and 2 elsewhere");
    if (bv[v] != (in[v] ? 0 : 1)) throw GraphError("black valence must be 0 on U and 1 elsewhere");
  }
}

SymElement square_rotation(const SquareRotationDatum& p) {
  validate(p);
  auto u = p.U;
  std::sort(u.begin(), u.end());
  const int A = u[0], B = u[1], C = u[2], D = u[3];
  auto term = [&](std::vector<Edge> purple_extra, std::vector<Edge> black_extra) {
    DirectedGraph purple{p.n, p.purple};
    purple.edges.insert(purple.edges.end(), purple_extra.begin(), purple_extra.end());
    for (auto& e : purple.edges)
      if (e.a > e.b) std::swap(e.a, e.b);
    auto black = p.black;
    black.insert(black.end(), black_extra.begin(), black_extra.end());
    Matching bm = make_matching(p.n, black);
    SymElement lift = kempe_factor(purple);
    SymElement out(p.n, 3);
    for (const auto& [mono, c] : lift.terms) {
      Monomial m = mono;
      m.push_back(key_of(bm));
      out.add_monomial(std::move(m), c * orientation_sign(bm));
    }
    return out;
  };
  return term({{A, B}, {C, D}}, {{A, D}, {B, C}}) - term({{A, D}, {B, C}}, {{A, B}, {C, D}});
}

std::vector<int> special_path_lengths(const SquareRotationDatum& p) {
  validate(p);
  std::vector<std::vector<std::pair<int, int>>> adj(p.n + 1);
  for (size_t i = 0; i < p.purple.size(); ++i) {
    adj[p.purple[i].a].emplace_back(p.purple[i].b, static_cast<int>(i));
    adj[p.purple[i].b].emplace_back(p.purple[i].a, static_cast<int>(i));
  }
  std::set<int> u(p.U.begin(), p.U.end()), done;
  std::vector<int> out;
  for (int start : p.U) {
    if (done.count(start)) continue;
    int cur = start, via = -1, len = 0;
    do {
      for (auto [y, e] : adj[cur])
        if (e != via) {
          via = e;
          cur = y;
          break;
        }
      ++len;
    } while (!u.count(cur));
    done.insert(start);
    done.insert(cur);
    out.push_back(len);
  }
  std::sort(out.begin(), out.end());
  return out;
}

SquareRotationDatum random_square_rotation_datum(int n, std::mt19937_64& rng) {
  if (n < 6 || n % 2) throw GraphError("square rotation data need an even n >= 6");
  std::vector<int> labels(n);
  std::iota(labels.begin(), labels.end(), 1);
  for (;;) {
    std::shuffle(labels.begin(), labels.end(), rng);
    SquareRotationDatum p;
    p.n = n;
    p.U.assign(labels.begin(), labels.begin() + 4);
    std::sort(p.U.begin(), p.U.end());
    std::vector<int> stubs(p.U), rest(labels.begin() + 4, labels.end());
    for (int v : rest) {
      stubs.push_back(v);
      stubs.push_back(v);
    }
    p.purple = random_pairing(stubs, rng);
    if (std::any_of(p.purple.begin(), p.purple.end(), [](Edge e) { return e.a == e.b; })) continue;
    p.black = random_pairing(rest, rng);
    for (auto* list : {&p.purple, &p.black})
      for (auto& e : *list)
        if (e.a > e.b) std::swap(e.a, e.b);
    validate(p);
    return p;
  }
}

SymElement unit_element(int k) {
  SymElement e(0, k);
  e.add_monomial(Monomial(k), Q(1));
  return e;
}

SymElement outer_product(const SymElement& a, const std::vector<int>& map_a, const SymElement& b, const std::vector<int>& map_b, int n) {
  if (a.k != b.k) throw GraphError("outer product needs equal degrees");
  if (static_cast<int>(map_a.size()) != a.n + 1 || static_cast<int>(map_b.size()) != b.n + 1)
    throw GraphError("label maps must have one entry per label (index 0 unused)");
  std::vector<char> hit(n + 1, 0);
  for (const auto* mp : {&map_a, &map_b})
    for (size_t i = 1; i < mp->size(); ++i) {
      int v = (*mp)[i];
      if (v < 1 || v > n || hit[v]) throw GraphError("outer product labels collide");
      hit[v] = 1;
    }
  SymElement out(n, a.k);
  for (const auto& [ma, ca] : a.terms)
    for (const auto& [mb, cb] : b.terms) {
      std::vector<Matching> layers;
      for (int i = 0; i < a.k; ++i) {
        std::vector<Edge> e;
        for (auto code : ma[i]) e.push_back({map_a[code_a(code)], map_a[code_b(code)]});
        for (auto code : mb[i]) e.push_back({map_b[code_a(code)], map_b[code_b(code)]});
        for (auto& x : e)
          if (x.a > x.b) std::swap(x.a, x.b);
        std::sort(e.begin(), e.end());
        layers.push_back(Matching{n, e});
      }
      if (n > 0)
        for (auto& m : layers) m = make_matching(n, m.edges);
      out.add(std::move(layers), ca * cb);
    }
  return out;
}

void check_feasible(int n, int k) {
  if (n % 2 || n < 2 || k < 1) throw DimensionError("need even n >= 2 and k >= 1");
  bool ok = (k <= 2 && n <= 10) || (k == 3 && n <= 8) || (k >= 4 && n <= 6);
  if (!ok) throw DimensionError("ideal computation at n=" + std::to_string(n) + ", k=" + std::to_string(k) + " exceeds the desk-scale guard");
}

QMatrix projection_matrix(int n, int k, int jobs) {
  check_feasible(n, k);
  const SymBasis& basis = sym_basis(n, k);
  std::map<GraphKey, int> row_of;
  for (const auto& g : enumerate_noncrossing_regular(n, k)) row_of.emplace(key_of(g), static_cast<int>(row_of.size()));
  std::vector<RingElement> cols(basis.size());
  parallel_for(cols.size(), jobs, [&](std::size_t j) { cols[j] = project_to_ring(basis.element(static_cast<int>(j))); });
  QMatrixBuilder mb(static_cast<int>(row_of.size()), basis.size());
  for (size_t j = 0; j < cols.size(); ++j)
    for (const auto& [key, c] : cols[j].terms) {
      auto it = row_of.find(key);
      if (it == row_of.end()) throw std::logic_error("straightening produced a crossing graph");
      mb.add(it->second, static_cast<int>(j), c);
    }
  return std::move(mb).build();
}

std::vector<DenseVec> ideal_basis(int n, int k, int jobs) {
  static std::mutex mu;
  static std::map<std::pair<int, int>, std::vector<DenseVec>> memo;
  {
    std::lock_guard lock(mu);
    if (auto it = memo.find({n, k}); it != memo.end()) return it->second;
  }
  auto kb = kernel_basis(projection_matrix(n, k, jobs));
  std::lock_guard lock(mu);
  memo[{n, k}] = kb;
  return kb;
}

long long ideal_component_dim(int n, int k, int jobs) {
  QMatrix m = projection_matrix(n, k, jobs);
  return m.cols() - rank(m);
}

SparseVec act_coordinates(const Perm& s, int n, int k, const SparseVec& x) {
  if (!is_perm(s, n)) throw GraphError("permutation size mismatch");
  const SymBasis& vb = sym_basis(n, 1);
  const SymBasis& basis = sym_basis(n, k);
  const int sg = perm_sign(s);
  std::vector<SparseVec> image;
  for (const auto& m : vb.v_basis()) {
    SparseVec v = v_coordinates(relabel(s, m));
    if (sg < 0)
      for (auto& [i, c] : v) c = -c;
    image.push_back(std::move(v));
  }
  std::map<int, Q> acc;
  for (const auto& [idx, c] : x) {
    std::map<std::vector<int>, Q> cur{{{}, c}};
    for (int f : basis.tuple(idx)) {
      std::map<std::vector<int>, Q> next;
      for (const auto& [t, a] : cur)
        for (const auto& [i, b] : image[f]) {
          auto t2 = t;
          t2.push_back(i);
          std::sort(t2.begin(), t2.end());
          next[t2] += a * b;
        }
      cur = std::move(next);
    }
    for (auto& [t, v] : cur) acc[basis.index_of(t)] += v;
  }
  SparseVec out;
  for (auto& [i, v] : acc)
    if (v != 0) out.emplace_back(i, std::move(v));
  return out;
}

OrbitSpan orbit_span_check(const SymElement& rel, int jobs) {
  OrbitSpan res;
  if (rel.is_zero()) return res;
  check_feasible(rel.n, rel.k);
  const int n = rel.n, k = rel.k;
  Perm swap12 = identity_perm(n), cycle = identity_perm(n);
  std::swap(swap12[1], swap12[2]);
  for (int i = 1; i <= n; ++i) cycle[i] = i % n + 1;
  Subspace span(sym_basis(n, k).size());
  std::vector<SparseVec> queue{sym_coordinates(rel)};
  span.add(queue.front());
  while (!queue.empty()) {
    SparseVec x = std::move(queue.back());
    queue.pop_back();
    for (const auto* g : {&swap12, &cycle}) {
      SparseVec y = act_coordinates(*g, n, k, x);
      if (span.add(y)) queue.push_back(std::move(y));
    }
  }
  res.rank = span.dim();
  res.ideal_dim = static_cast<long long>(ideal_basis(n, k, jobs).size());
  res.spans_ideal = res.rank == res.ideal_dim;
  return res;
}

std::vector<SparseVec> quadratic_ideal_component(int n, int jobs) {
  check_feasible(n, 3);
  const SymBasis& b2 = sym_basis(n, 2);
  const SymBasis& b3 = sym_basis(n, 3);
  const int dimv = static_cast<int>(sym_basis(n, 1).v_basis().size());
  std::vector<SparseVec> out;
  for (const auto& q : ideal_basis(n, 2, jobs))
    for (int i = 0; i < dimv; ++i) {
      std::map<int, Q> acc;
      for (int t = 0; t < b2.size(); ++t) {
        if (q[t] == 0) continue;
        auto tup = b2.tuple(t);
        tup.push_back(i);
        acc[b3.index_of(tup)] += q[t];
      }
      SparseVec v;
      for (auto& [idx, c] : acc)
        if (c != 0) v.emplace_back(idx, c);
      out.push_back(std::move(v));
    }
  return out;
}

long long count_good_bipartitions(int n) {
  if (n != 10 && n != 12) throw GraphError("good bipartitions are counted for n = 10 or 12");
  const int allowed = n == 10 ? 1 : 2;
  long long count = 0;
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    if (__builtin_popcount(mask) != 6) continue;
    std::vector<int> p;
    for (int i = 0; i < n; ++i)
      if (mask >> i & 1) p.push_back(i + 1);
    int second = p[1], above = 0;
    for (int i = 0; i < n; ++i)
      if (!(mask >> i & 1) && i + 1 > second) ++above;
    if (above <= allowed) ++count;
  }
  return count;
}

TensorTerms fig_id6() {
  // A..F = 1..6 around the hexagon; each term is (black, blue), blue completed by AF
  enum { A = 1, B, C, D, E, F };
  const int n = 6;
  auto t = [&](std::initializer_list<std::pair<int, int>> black, std::initializer_list<std::pair<int, int>> blue, int c) {
    std::vector<Edge> bl;
    for (auto [a, b] : blue) bl.push_back({a, b});
    bl.push_back({A, F});
    std::vector<Edge> bk;
    for (auto [a, b] : black) bk.push_back({a, b});
    return std::make_pair(std::vector<Matching>{make_matching(n, bk), make_matching(n, bl)}, Q(c));
  };
  return {
      t({{A, B}, {C, D}, {E, F}}, {{B, C}, {D, E}}, 2),
      t({{A, F}, {C, D}, {E, B}}, {{B, C}, {D, E}}, 1),
      t({{A, D}, {C, F}, {B, E}}, {{D, C}, {B, E}}, 1),
      t({{A, B}, {E, F}, {C, D}}, {{B, E}, {C, D}}, 1),
      t({{A, D}, {E, F}, {B, C}}, {{D, E}, {B, C}}, 1),
      t({{A, B}, {C, F}, {D, E}}, {{B, C}, {D, E}}, 1),
      t({{A, F}, {B, C}, {D, E}}, {{B, C}, {D, E}}, 1),
      t({{A, C}, {E, F}, {B, D}}, {{C, E}, {B, D}}, -1),
      t({{A, B}, {D, F}, {C, E}}, {{B, D}, {C, E}}, -1),
      t({{A, F}, {B, D}, {C, E}}, {{B, D}, {C, E}}, -1),
  };
}

TensorTerms fig_id8() {
  enum { A = 1, B, C, D, E, F, G, H };
  const int n = 8;
  auto t = [&](std::initializer_list<std::pair<int, int>> black, int c) {
    std::vector<Edge> bk;
    for (auto [a, b] : black) bk.push_back({a, b});
    return std::make_pair(std::vector<Matching>{make_matching(n, bk)}, Q(c));
  };
  return {
      t({{A, B}, {C, D}, {E, F}, {G, H}}, 2),  t({{A, H}, {C, D}, {E, F}, {G, B}}, 1), t({{A, D}, {B, C}, {E, F}, {G, H}}, 1),
      t({{A, B}, {C, F}, {D, E}, {G, H}}, 1),  t({{A, B}, {C, D}, {E, H}, {F, G}}, 1), t({{A, B}, {C, H}, {D, E}, {F, G}}, 1),
      t({{A, F}, {B, C}, {D, E}, {G, H}}, 1),  t({{A, H}, {B, C}, {D, G}, {E, F}}, 1), t({{A, H}, {B, E}, {C, D}, {F, G}}, 1),
      t({{A, B}, {C, H}, {D, G}, {E, F}}, 1),  t({{A, F}, {B, E}, {C, D}, {G, H}}, 1), t({{A, H}, {B, C}, {D, E}, {F, G}}, 1),
      t({{A, D}, {B, G}, {C, F}, {E, H}}, -1),
  };
}

}  // namespace plucker
