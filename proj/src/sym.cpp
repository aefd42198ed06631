#include "plucker/sym.hpp"

#include <algorithm>
#include <memory>
#include <mutex>

#include "plucker/ring.hpp"

namespace plucker {

void SymElement::add_monomial(Monomial m, const Q& c) {
  if (c == 0) return;
  if (static_cast<int>(m.size()) != k) throw GraphError("monomial degree mismatch");
  std::sort(m.begin(), m.end());
  auto [it, fresh] = terms.try_emplace(std::move(m), c);
  if (!fresh) {
    it->second += c;
    if (it->second == 0) terms.erase(it);
  }
}

void SymElement::add(std::vector<Matching> factors, const Q& c) {
  Monomial m;
  for (const auto& f : factors) {
    if (f.n != n) throw GraphError("label set mismatch");
    m.push_back(key_of(f));
  }
  add_monomial(std::move(m), c);
}

SymElement& SymElement::operator+=(const SymElement& o) {
  if (o.is_zero()) return *this;
  if (is_zero() && terms.empty() && (n != o.n || k != o.k)) {
    n = o.n;
    k = o.k;
  }
  if (o.n != n || o.k != k) throw GraphError("label set or degree mismatch");
  for (const auto& [m, c] : o.terms) add_monomial(m, c);
  return *this;
}

SymElement& SymElement::operator-=(const SymElement& o) {
  SymElement neg = Q(-1) * o;
  return *this += neg;
}

SymElement& SymElement::operator*=(const Q& c) {
  if (c == 0) {
    terms.clear();
    return *this;
  }
  for (auto& [m, v] : terms) v *= c;
  return *this;
}

SymElement operator+(SymElement a, const SymElement& b) { return a += b; }
SymElement operator-(SymElement a, const SymElement& b) { return a -= b; }
SymElement operator*(const Q& c, SymElement a) { return a *= c; }

std::vector<Matching> factors_of(int n, const Monomial& m) {
  std::vector<Matching> out;
  for (const auto& k : m) out.push_back(matching_of(n, k));
  return out;
}

namespace {
void tuples_rec(int C, int k, int start, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
  if (static_cast<int>(cur.size()) == k) {
    out.push_back(cur);
    return;
  }
  for (int i = start; i < C; ++i) {
    cur.push_back(i);
    tuples_rec(C, k, i, cur, out);
    cur.pop_back();
  }
}
}  // namespace

SymBasis::SymBasis(int n, int k) : n_(n), k_(k) {
  for (const auto& g : enumerate_noncrossing_regular(n, 1)) v_basis_.push_back(make_matching(n, g.edges));
  std::vector<int> cur;
  tuples_rec(static_cast<int>(v_basis_.size()), k, 0, cur, tuples_);
  for (size_t i = 0; i < tuples_.size(); ++i) index_[tuples_[i]] = static_cast<int>(i);
}

int SymBasis::index_of(std::vector<int> t) const {
  std::sort(t.begin(), t.end());
  auto it = index_.find(t);
  if (it == index_.end()) throw GraphError("tuple outside the symmetric power basis");
  return it->second;
}

SymElement SymBasis::element(int i) const {
  SymElement e(n_, k_);
  std::vector<Matching> f;
  for (int j : tuples_.at(i)) f.push_back(v_basis_[j]);
  e.add(std::move(f), Q(1));
  return e;
}

const SymBasis& sym_basis(int n, int k) {
  static std::mutex mu;
  static std::map<std::pair<int, int>, std::unique_ptr<SymBasis>> bases;
  std::lock_guard lock(mu);
  auto& slot = bases[{n, k}];
  if (!slot) slot = std::make_unique<SymBasis>(n, k);
  return *slot;
}

const SparseVec& v_coordinates(const Matching& m) {
  static std::mutex mu;
  static std::map<std::pair<int, GraphKey>, SparseVec> memo;
  GraphKey key = key_of(m);
  {
    std::lock_guard lock(mu);
    auto it = memo.find({m.n, key});
    if (it != memo.end()) return it->second;
  }
  const SymBasis& b = sym_basis(m.n, 1);
  std::map<GraphKey, int> index;
  for (size_t i = 0; i < b.v_basis().size(); ++i) index[key_of(b.v_basis()[i])] = static_cast<int>(i);
  RingElement s = straighten(y_of(m));
  SparseVec out;
  for (const auto& [k, c] : s.terms) {
    auto it = index.find(k);
    if (it == index.end()) throw GraphError("straightened matching left the non-crossing basis");
    // X_nc = eps(nc) Y_nc
    out.emplace_back(it->second, c * orientation_sign(b.v_basis()[it->second]));
  }
  std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
  std::lock_guard lock(mu);
  return memo.emplace(std::make_pair(m.n, key), std::move(out)).first->second;
}

namespace {
std::map<std::vector<int>, Q> expand_product(const std::vector<Matching>& factors, const Q& c, bool sorted) {
  std::map<std::vector<int>, Q> cur{{{}, c}};
  for (const auto& f : factors) {
    const SparseVec& v = v_coordinates(f);
    std::map<std::vector<int>, Q> next;
    for (const auto& [t, x] : cur)
      for (const auto& [i, y] : v) {
        auto t2 = t;
        t2.push_back(i);
        if (sorted) std::sort(t2.begin(), t2.end());
        next[t2] += x * y;
      }
    cur = std::move(next);
  }
  return cur;
}
}  // namespace

SparseVec sym_coordinates(const SymElement& e) {
  const SymBasis& b = sym_basis(e.n, e.k);
  std::map<int, Q> acc;
  for (const auto& [mono, c] : e.terms)
    for (auto& [t, x] : expand_product(factors_of(e.n, mono), c, true)) acc[b.index_of(t)] += x;
  SparseVec out;
  for (auto& [i, x] : acc)
    if (x != 0) out.emplace_back(i, std::move(x));
  return out;
}

std::map<std::vector<int>, Q> tensor_coordinates(const std::vector<std::pair<std::vector<Matching>, Q>>& terms) {
  std::map<std::vector<int>, Q> acc;
  for (const auto& [layers, c] : terms)
    for (auto& [t, x] : expand_product(layers, c, false)) acc[t] += x;
  std::erase_if(acc, [](const auto& p) { return p.second == 0; });
  return acc;
}

}  // namespace plucker
