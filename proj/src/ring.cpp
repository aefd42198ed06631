#include "plucker/ring.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <random>
#include <unordered_map>

#include "plucker/cache.hpp"

namespace plucker {

void RingElement::add(const GraphKey& key, const Q& c) {
  if (c == 0) return;
  auto [it, fresh] = terms.try_emplace(key, c);
  if (!fresh) {
    it->second += c;
    if (it->second == 0) terms.erase(it);
  }
}

RingElement& RingElement::operator+=(const RingElement& o) {
  if (o.n != n && !o.is_zero()) {
    if (is_zero())
      n = o.n;
    else
      throw GraphError("label set mismatch");
  }
  for (const auto& [k, c] : o.terms) add(k, c);
  return *this;
}

RingElement& RingElement::operator-=(const RingElement& o) {
  RingElement neg = Q(-1) * o;
  return *this += neg;
}

RingElement& RingElement::operator*=(const Q& c) {
  if (c == 0) {
    terms.clear();
    return *this;
  }
  for (auto& [k, v] : terms) v *= c;
  return *this;
}

RingElement operator+(RingElement a, const RingElement& b) { return a += b; }
RingElement operator-(RingElement a, const RingElement& b) { return a -= b; }
RingElement operator*(const Q& c, RingElement a) { return a *= c; }

int regular_degree(const RingElement& e) {
  int d = -1;
  for (const auto& [k, c] : e.terms) {
    int dk = regular_degree(graph_of(e.n, k));
    if (dk < 0 || (d >= 0 && dk != d)) return -1;
    d = dk;
  }
  return d;
}

RingElement x_of(const DirectedGraph& g) {
  RingElement out(g.n);
  auto cf = canonicalize(g);
  if (cf.sign != 0) out.add(key_of(cf.graph), Q(cf.sign));
  return out;
}

RingElement y_of(const Matching& m) {
  RingElement out(m.n);
  out.add(key_of(m), Q(orientation_sign(m)));
  return out;
}

RingElement multiply(const RingElement& a, const RingElement& b) {
  if (a.n != b.n) throw GraphError("label set mismatch");
  RingElement out(a.n);
  for (const auto& [ka, ca] : a.terms)
    for (const auto& [kb, cb] : b.terms) {
      GraphKey k;
      k.reserve(ka.size() + kb.size());
      std::merge(ka.begin(), ka.end(), kb.begin(), kb.end(), std::back_inserter(k));
      out.add(k, ca * cb);
    }
  return out;
}

namespace {

thread_local long long t_fuel_left = 0;
long long g_fuel = 10'000'000;

using LocalMemo = std::unordered_map<GraphKey, std::shared_ptr<const Expansion>, GraphKeyHash>;

std::shared_ptr<const Expansion> straighten_key(int n, const GraphKey& key, LocalMemo& local) {
  auto& cache = StraightenCache::global();
  const bool use_global = cache.enabled();
  if (use_global) {
    if (auto hit = cache.find(n, key)) return hit;
  } else if (auto it = local.find(key); it != local.end()) {
    return it->second;
  }
  // smallest crossing pair in lexicographic order of endpoint 4-tuples
  int ci = -1, cj = -1;
  for (size_t i = 0; i < key.size() && ci < 0; ++i) {
    int a = code_a(key[i]), b = code_b(key[i]);
    for (size_t j = i + 1; j < key.size(); ++j) {
      int c = code_a(key[j]), d = code_b(key[j]);
      if (c >= b) break;
      if (a < c && b < d) {
        ci = static_cast<int>(i);
        cj = static_cast<int>(j);
        break;
      }
    }
  }
  std::shared_ptr<const Expansion> result;
  if (ci < 0) {
    result = std::make_shared<const Expansion>(Expansion{{key, Q(1)}});
  } else {
    if (--t_fuel_left < 0) throw FuelExhausted("straightening fuel exhausted");
    int a = code_a(key[ci]), b = code_b(key[ci]), c = code_a(key[cj]), d = code_b(key[cj]);
    GraphKey rest;
    rest.reserve(key.size());
    for (size_t i = 0; i < key.size(); ++i)
      if (static_cast<int>(i) != ci && static_cast<int>(i) != cj) rest.push_back(key[i]);
    // X_ab X_cd = X_ad X_cb + X_ac X_bd, a<c<b<d
    auto with = [&](std::uint16_t e1, std::uint16_t e2) {
      GraphKey k = rest;
      k.insert(std::upper_bound(k.begin(), k.end(), e1), e1);
      k.insert(std::upper_bound(k.begin(), k.end(), e2), e2);
      return k;
    };
    auto left = straighten_key(n, with(edge_code(a, d), edge_code(c, b)), local);
    auto right = straighten_key(n, with(edge_code(a, c), edge_code(b, d)), local);
    std::map<GraphKey, Q> acc;
    for (const auto* part : {left.get(), right.get()})
      for (const auto& [k, v] : *part) acc[k] += v;
    Expansion e;
    e.reserve(acc.size());
    for (auto& [k, v] : acc)
      if (v != 0) e.emplace_back(k, std::move(v));
    result = std::make_shared<const Expansion>(std::move(e));
  }
  if (use_global)
    cache.insert(n, key, result);
  else
    local.emplace(key, result);
  return result;
}

}  // namespace

void set_straighten_fuel(long long fuel) { g_fuel = fuel; }
long long straighten_fuel() { return g_fuel; }

RingElement straighten(const RingElement& e) {
  t_fuel_left = g_fuel;
  LocalMemo local;
  std::map<GraphKey, Q> acc;
  for (const auto& [k, c] : e.terms) {
    auto ex = straighten_key(e.n, k, local);
    for (const auto& [kk, v] : *ex) acc[kk] += c * v;
  }
  RingElement out(e.n);
  for (auto& [k, v] : acc) out.add(k, v);
  return out;
}

namespace {
void check_config(int n, const PointConfig& p) {
  if (static_cast<int>(p.points.size()) != n) throw GraphError("point configuration size mismatch");
}
Q det(const PointConfig& p, int i, int j) {
  const auto& [xi, yi] = p.points[i - 1];
  const auto& [xj, yj] = p.points[j - 1];
  return xi * yj - xj * yi;
}
}  // namespace

Q evaluate(const RingElement& e, const PointConfig& p) {
  check_config(e.n, p);
  Q total = 0;
  for (const auto& [k, c] : e.terms) {
    Q prod = c;
    for (auto code : k) prod *= det(p, code_a(code), code_b(code));
    total += prod;
  }
  return total;
}

Q evaluate(const SymElement& e, const PointConfig& p) {
  check_config(e.n, p);
  Q total = 0;
  for (const auto& [mono, c] : e.terms) {
    Q prod = c;
    for (const auto& mk : mono) {
      Matching m = matching_of(e.n, mk);
      prod *= orientation_sign(m);
      for (auto code : mk) prod *= det(p, code_a(code), code_b(code));
    }
    total += prod;
  }
  return total;
}

namespace {

// Perfect matching of a regular bipartite multigraph given as a directed edge list.
std::vector<Edge> peel_matching(int n, std::vector<Edge>& edges) {
  const int half = n / 2;
  std::vector<std::vector<int>> adj(n + 1);
  for (auto e : edges) {
    int p = std::min(e.a, e.b), q = std::max(e.a, e.b);
    adj[p].push_back(q);
  }
  for (auto& v : adj) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
  }
  std::vector<int> match_of_neg(n + 1, 0);
  std::function<bool(int, std::vector<char>&)> augment = [&](int p, std::vector<char>& seen) {
    for (int q : adj[p]) {
      if (seen[q]) continue;
      seen[q] = 1;
      if (!match_of_neg[q] || augment(match_of_neg[q], seen)) {
        match_of_neg[q] = p;
        return true;
      }
    }
    return false;
  };
  for (int p = 1; p <= half; ++p) {
    std::vector<char> seen(n + 1, 0);
    if (!augment(p, seen)) throw GraphError("regular bipartite graph without perfect matching");
  }
  std::vector<Edge> out;
  for (int q = half + 1; q <= n; ++q) {
    int p = match_of_neg[q];
    auto it = std::find_if(edges.begin(), edges.end(), [&](Edge e) { return std::min(e.a, e.b) == p && std::max(e.a, e.b) == q; });
    out.push_back(*it);
    edges.erase(it);
  }
  return out;
}

}  // namespace

SymElement kempe_factor(const DirectedGraph& g) {
  const int d = regular_degree(g);
  if (d < 1) throw GraphError("kempe_factor needs a regular graph of positive degree");
  if (g.n % 2) throw GraphError("kempe_factor needs an even label set");
  for (auto e : g.edges)
    if (e.a == e.b) throw GraphError("kempe_factor needs a loop-free graph");
  const int half = g.n / 2;
  auto pos = [&](int v) { return v <= half; };
  auto norm = [](Edge e) { return Edge{std::min(e.a, e.b), std::max(e.a, e.b)}; };
  SymElement out(g.n, d);
  std::vector<std::pair<Q, std::vector<Edge>>> work{{Q(1), g.edges}};
  while (!work.empty()) {
    auto [coeff, edges] = std::move(work.back());
    work.pop_back();
    int ip = -1, in = -1;
    for (size_t i = 0; i < edges.size(); ++i) {
      Edge e = norm(edges[i]);
      if (pos(e.a) && pos(e.b) && (ip < 0 || e < norm(edges[ip]))) ip = static_cast<int>(i);
      if (!pos(e.a) && !pos(e.b) && (in < 0 || e < norm(edges[in]))) in = static_cast<int>(i);
    }
    if (ip >= 0) {
      Edge e = edges[ip], f = edges[in];
      int a = e.a, b = e.b, c = f.a, dd = f.b;
      std::vector<Edge> rest;
      for (size_t i = 0; i < edges.size(); ++i)
        if (static_cast<int>(i) != ip && static_cast<int>(i) != in) rest.push_back(edges[i]);
      auto t1 = rest, t2 = rest;
      t1.push_back({a, dd});
      t1.push_back({c, b});
      t2.push_back({a, c});
      t2.push_back({b, dd});
      work.emplace_back(coeff, std::move(t1));
      work.emplace_back(coeff, std::move(t2));
      continue;
    }
    std::vector<Matching> factors;
    Q c = coeff;
    for (int i = 0; i < d; ++i) {
      auto m = peel_matching(g.n, edges);
      c *= orientation_sign(g.n, m);
      factors.push_back(make_matching(g.n, m));
    }
    out.add(std::move(factors), c);
  }
  return out;
}

long long hilbert_dim(int n, int d) {
  if (n % 2) throw GraphError("hilbert_dim needs an even label set");
  return static_cast<long long>(enumerate_noncrossing_regular(n, d).size());
}

RingElement act(const Perm& s, const RingElement& e) {
  if (!is_perm(s, e.n)) throw GraphError("permutation size mismatch");
  RingElement out(e.n);
  for (const auto& [k, c] : e.terms) {
    auto cf = canonicalize(relabel(s, graph_of(e.n, k)));
    out.add(key_of(cf.graph), c * cf.sign);
  }
  return out;
}

SymElement act(const Perm& s, const SymElement& e) {
  if (!is_perm(s, e.n)) throw GraphError("permutation size mismatch");
  SymElement out(e.n, e.k);
  const int sg = (e.k % 2) ? perm_sign(s) : 1;
  for (const auto& [mono, c] : e.terms) {
    std::vector<Matching> f;
    for (const auto& mk : mono) f.push_back(relabel(s, matching_of(e.n, mk)));
    out.add(std::move(f), c * sg);
  }
  return out;
}

PointConfig random_config(int n, std::uint64_t seed) {
  if (n > 19) throw GraphError("random_config supports at most 19 points");
  std::mt19937_64 rng(seed);
  std::vector<int> xs(19);
  std::iota(xs.begin(), xs.end(), -9);
  std::shuffle(xs.begin(), xs.end(), rng);
  PointConfig p;
  for (int i = 0; i < n; ++i) p.points.emplace_back(Q(xs[i]), Q(1));
  return p;
}

}  // namespace plucker
