#include "plucker/rep.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include "plucker/linalg.hpp"
#include "plucker/parallel.hpp"
#include "plucker/relations.hpp"
#include "plucker/ring.hpp"
#include "plucker/sym.hpp"

namespace plucker {

std::vector<Partition> partitions(int n) {
  std::vector<Partition> out;
  Partition cur;
  std::function<void(int, int)> rec = [&](int left, int maxp) {
    if (left == 0) {
      out.push_back(cur);
      return;
    }
    for (int p = std::min(left, maxp); p >= 1; --p) {
      cur.push_back(p);
      rec(left - p, p);
      cur.pop_back();
    }
  };
  rec(n, n);
  return out;
}

long long factorial(int n) {
  long long f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

long long class_size(const Partition& mu) {
  int n = 0;
  std::map<int, int> mult;
  for (int x : mu) {
    n += x;
    ++mult[x];
  }
  long long denom = 1;
  for (auto [len, m] : mult) {
    for (int i = 0; i < m; ++i) denom *= len;
    denom *= factorial(m);
  }
  return factorial(n) / denom;
}

namespace {
long long mn_beta(std::vector<int> beta, const Partition& mu, size_t idx) {
  if (idx == mu.size()) return 1;
  const int r = mu[idx];
  std::set<int> present(beta.begin(), beta.end());
  long long total = 0;
  for (size_t i = 0; i < beta.size(); ++i) {
    int b = beta[i], nb = b - r;
    if (nb < 0 || present.count(nb)) continue;
    int between = 0;
    for (int x : beta)
      if (x > nb && x < b) ++between;
    auto next = beta;
    next[i] = nb;
    long long sub = mn_beta(next, mu, idx + 1);
    total += (between % 2 ? -sub : sub);
  }
  return total;
}

int size_of(const Partition& p) {
  int s = 0;
  for (int x : p) s += x;
  return s;
}
}  // namespace

long long mn_character(const Partition& lambda, const Partition& mu) {
  if (size_of(lambda) != size_of(mu)) throw std::invalid_argument("partition sizes differ");
  const int len = static_cast<int>(lambda.size());
  std::vector<int> beta;
  for (int i = 0; i < len; ++i) beta.push_back(lambda[i] + (len - 1 - i));
  return mn_beta(beta, mu, 0);
}

long long hook_length_dim(const Partition& lambda) {
  const int n = size_of(lambda);
  std::vector<int> conj;
  for (int j = 0; j < (lambda.empty() ? 0 : lambda[0]); ++j) {
    int c = 0;
    for (int x : lambda)
      if (x > j) ++c;
    conj.push_back(c);
  }
  // n!/prod(hooks), kept exact by cancelling as we go
  Q result = q_of(factorial(n));
  for (size_t i = 0; i < lambda.size(); ++i)
    for (int j = 0; j < lambda[i]; ++j) result /= Q(lambda[i] - j - 1 + conj[j] - static_cast<int>(i) - 1 + 1);
  return result.get_num().get_si();
}

ClassFunction irreducible_character(const Partition& lambda) {
  ClassFunction c{size_of(lambda), {}};
  for (const auto& mu : partitions(c.n)) c.values[mu] = q_of(mn_character(lambda, mu));
  return c;
}

Q inner_product(const ClassFunction& a, const ClassFunction& b) {
  if (a.n != b.n) throw std::invalid_argument("class functions on different groups");
  Q total = 0;
  for (const auto& mu : partitions(a.n)) total += q_of(class_size(mu)) * a.values.at(mu) * b.values.at(mu);
  return total / q_of(factorial(a.n));
}

std::map<Partition, long long> decompose(const ClassFunction& chi) {
  std::map<Partition, long long> out;
  for (const auto& lambda : partitions(chi.n)) {
    Q m = inner_product(chi, irreducible_character(lambda));
    if (m.get_den() != 1 || m < 0) throw std::logic_error("non-integral multiplicity " + q_to_string(m) + " for " + partition_to_string(lambda));
    if (m != 0) out[lambda] = m.get_num().get_si();
  }
  return out;
}

RepSpace rep_space_from_string(const std::string& s) {
  if (s == "V") return RepSpace::V;
  if (s == "Sym2" || s == "sym2") return RepSpace::Sym2;
  if (s == "Wedge2" || s == "wedge2" || s == "Lambda2") return RepSpace::Wedge2;
  if (s == "R2" || s == "r2") return RepSpace::R2;
  if (s == "I2" || s == "i2") return RepSpace::I2;
  throw std::invalid_argument("unknown space '" + s + "' (expected V, Sym2, Wedge2, R2, I2)");
}

std::string to_string(RepSpace s) {
  switch (s) {
    case RepSpace::V: return "V";
    case RepSpace::Sym2: return "Sym2";
    case RepSpace::Wedge2: return "Wedge2";
    case RepSpace::R2: return "R2";
    case RepSpace::I2: return "I2";
  }
  return "?";
}

namespace {

Q trace_v(const Perm& s, int n) {
  const SymBasis& b = sym_basis(n, 1);
  Q tr = 0;
  for (int i = 0; i < b.size(); ++i) {
    for (const auto& [j, c] : act_coordinates(s, n, 1, SparseVec{{i, Q(1)}}))
      if (j == i) tr += c;
  }
  return tr;
}

Q trace_sym(const Perm& s, int n, int k) {
  const SymBasis& b = sym_basis(n, k);
  Q tr = 0;
  for (int i = 0; i < b.size(); ++i)
    for (const auto& [j, c] : act_coordinates(s, n, k, SparseVec{{i, Q(1)}}))
      if (j == i) tr += c;
  return tr;
}

Q trace_ring(const Perm& s, int n, int d) {
  Q tr = 0;
  for (const auto& g : enumerate_noncrossing_regular(n, d)) {
    RingElement x = x_of(g);
    RingElement img = straighten(act(s, x));
    auto it = img.terms.find(key_of(g));
    if (it != img.terms.end()) tr += it->second;
  }
  return tr;
}

}  // namespace

ClassFunction character_of_action(int n, RepSpace space, int jobs) {
  if (n % 2 || n < 2 || n > 8) throw DimensionError("character_of_action supports even n <= 8");
  ClassFunction c{n, {}};
  auto mus = partitions(n);
  std::vector<Q> vals(mus.size());
  parallel_for(mus.size(), jobs, [&](std::size_t i) {
    Perm s = perm_with_cycle_type(mus[i]);
    switch (space) {
      case RepSpace::V: vals[i] = trace_v(s, n); break;
      case RepSpace::Sym2: vals[i] = trace_sym(s, n, 2); break;
      case RepSpace::Wedge2: {
        Q a = trace_v(s, n), b = trace_v(compose(s, s), n);
        vals[i] = (a * a - b) / 2;
        break;
      }
      case RepSpace::R2: vals[i] = trace_ring(s, n, 2); break;
      case RepSpace::I2: vals[i] = trace_sym(s, n, 2) - trace_ring(s, n, 2); break;
    }
  });
  for (size_t i = 0; i < mus.size(); ++i) c.values[mus[i]] = vals[i];
  return c;
}

bool refines(const std::vector<int>& blocks, const Partition& p) {
  std::vector<int> b = blocks;
  std::sort(b.rbegin(), b.rend());
  std::vector<int> room(p.begin(), p.end());
  std::function<bool(size_t)> rec = [&](size_t i) {
    if (i == b.size()) return std::all_of(room.begin(), room.end(), [](int x) { return x == 0; });
    std::set<int> tried;
    for (size_t j = 0; j < room.size(); ++j) {
      if (room[j] < b[i] || tried.count(room[j])) continue;
      tried.insert(room[j]);
      room[j] -= b[i];
      bool ok = rec(i + 1);
      room[j] += b[i];
      if (ok) return true;
    }
    return false;
  };
  return rec(0);
}

namespace {

struct MultiMatching {
  std::vector<Matching> layers;
  std::vector<int> shape;
};

std::vector<MultiMatching> all_triple_multimatchings(int n) {
  auto ms = enumerate_matchings(n);
  std::vector<MultiMatching> out;
  for (size_t a = 0; a < ms.size(); ++a)
    for (size_t b = a; b < ms.size(); ++b)
      for (size_t c = b; c < ms.size(); ++c) {
        ColoredGraph g{n, {ms[a], ms[b], ms[c]}};
        out.push_back({g.layers, connected_component_partition(g).shape});
      }
  return out;
}

int span_rank(const std::vector<const MultiMatching*>& items, int n) {
  Subspace s(sym_basis(n, 3).size());
  for (const auto* m : items) {
    SymElement e(n, 3);
    e.add(m->layers, Q(1));
    s.add(sym_coordinates(e));
  }
  return s.dim();
}

bool even_parts(const Partition& p) {
  return std::all_of(p.begin(), p.end(), [](int x) { return x > 0 && x % 2 == 0; });
}

}  // namespace

GrDims gr_dims(int n, const Partition& p) {
  if (n != 4 && n != 6) throw DimensionError("gr_dim supports n = 4 or 6");
  if (size_of(p) != n || !even_parts(p)) throw std::invalid_argument("filtration index must be a partition of n into even parts");
  auto all = all_triple_multimatchings(n);
  Partition ps = p;
  std::sort(ps.rbegin(), ps.rend());
  std::vector<const MultiMatching*> in_p, below;
  std::vector<Partition> lower;
  for (const auto& q : partitions(n))
    if (q != ps && even_parts(q) && refines(q, ps)) lower.push_back(q);
  for (const auto& m : all) {
    if (refines(m.shape, ps)) in_p.push_back(&m);
    for (const auto& q : lower)
      if (refines(m.shape, q)) {
        below.push_back(&m);
        break;
      }
  }
  GrDims d;
  d.f_dim = span_rank(in_p, n);
  d.gr_dim = d.f_dim - span_rank(below, n);
  return d;
}

long long gr_dim(int n, const Partition& p) { return gr_dims(n, p).gr_dim; }

int benzene_span_rank(int n) {
  if (n > 6) throw DimensionError("benzene span check supports n <= 6");
  auto all = all_triple_multimatchings(n);
  std::vector<const MultiMatching*> keep;
  for (const auto& m : all) {
    ColoredGraph g{n, m.layers};
    auto part = connected_component_partition(g);
    bool ok = true;
    for (const auto& block : part.blocks) {
      std::set<int> bs(block.begin(), block.end());
      std::vector<std::vector<Edge>> restricted(3);
      for (int l = 0; l < 3; ++l)
        for (auto e : m.layers[l].edges)
          if (bs.count(e.a)) restricted[l].push_back(e);
      if (block.size() == 2) continue;  // triple edge
      if (block.size() != 4 && block.size() != 6) {
        ok = false;
        break;
      }
      bool two_equal = restricted[0] == restricted[1] || restricted[1] == restricted[2] || restricted[0] == restricted[2];
      // a connected union of two matchings on the block is a single cycle
      if (!two_equal) ok = false;
      if (!ok) break;
    }
    if (ok) keep.push_back(&m);
  }
  return span_rank(keep, n);
}

std::string partition_to_string(const Partition& p) {
  std::string s;
  for (size_t i = 0; i < p.size(); ++i) s += (i ? "+" : "") + std::to_string(p[i]);
  return s;
}

}  // namespace plucker
