#include "plucker/rewriting.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <sstream>
#include <tuple>

namespace plucker {

namespace {

bool triangle(const Triple& t) {
  auto [a, b, c] = t;
  return a >= 0 && b >= 0 && c >= 0 && a <= b + c && b <= a + c && c <= a + b;
}

void check_r(int r) {
  if (r < 3) throw RewriteError("caterpillar needs r >= 3");
}

void set_triple(ReducedMatching& m, int j, const Triple& t) {
  const int r = m.r;
  if (j == 2)
    m.stalk[0] = t[0];
  else
    m.base[j - 3] = t[0];
  m.stalk[j - 1] = t[1];
  if (j == r - 1)
    m.stalk[r - 1] = t[2];
  else
    m.base[j - 2] = t[2];
}

void check_same_tree(const MatchingTuple& tup) {
  for (const auto& m : tup)
    if (m.r != tup.front().r) throw RewriteError("tuple entries live on different caterpillars");
}

}  // namespace

ReducedMatching zero_matching(int r) {
  check_r(r);
  return ReducedMatching{r, std::vector<int>(r, 0), std::vector<int>(r - 3, 0)};
}

Triple local_triple(const ReducedMatching& m, int j) {
  const int r = m.r;
  if (j < 2 || j > r - 1) throw RewriteError("trinode index out of range");
  int left = j == 2 ? m.stalk[0] : m.base[j - 3];
  int right = j == r - 1 ? m.stalk[r - 1] : m.base[j - 2];
  return {left, m.stalk[j - 1], right};
}

bool is_reduced_matching(const ReducedMatching& m) {
  if (m.r < 3 || static_cast<int>(m.stalk.size()) != m.r || static_cast<int>(m.base.size()) != m.r - 3) return false;
  for (int s : m.stalk)
    if (s < 0 || s > 1) return false;
  for (int j = 2; j <= m.r - 1; ++j)
    if (!triangle(local_triple(m, j))) return false;
  return true;
}

ReducedMatching from_weighting(const TreeWeighting& w) {
  if (w.tree.kind != TreeKind::Caterpillar) throw RewriteError("reduced matchings live on caterpillars");
  const int r = w.tree.r;
  ReducedMatching m = zero_matching(r);
  for (int i = 1; i <= r; ++i) m.stalk[i - 1] = w.weight[w.tree.stalk_edge(i)];
  for (int k = 2; k <= r - 2; ++k) m.base[k - 2] = w.weight[w.tree.base_edge(k)];
  return m;
}

TreeWeighting to_weighting(const ReducedMatching& m) {
  TrivalentTree t = build_caterpillar(m.r);
  TreeWeighting w{t, std::vector<int>(t.edges.size(), 0), true};
  for (int i = 1; i <= m.r; ++i) w.weight[t.stalk_edge(i)] = m.stalk[i - 1];
  for (int k = 2; k <= m.r - 2; ++k) w.weight[t.base_edge(k)] = m.base[k - 2];
  return w;
}

std::vector<ReducedMatching> enumerate_reduced_matchings(int r) {
  check_r(r);
  static std::mutex mu;
  static std::map<int, std::vector<ReducedMatching>> memo;
  {
    std::lock_guard lock(mu);
    if (auto it = memo.find(r); it != memo.end()) return it->second;
  }
  std::vector<ReducedMatching> out;
  ReducedMatching cur = zero_matching(r);
  // walk trinodes left to right, choosing the stalk and the right edge
  auto rec = [&](auto& self, int j) -> void {
    if (j == r) {
      out.push_back(cur);
      return;
    }
    int left = j == 2 ? cur.stalk[0] : cur.base[j - 3];
    int max_right = j == r - 1 ? 1 : left + 1;
    for (int s = 0; s <= 1; ++s)
      for (int right = 0; right <= max_right; ++right) {
        if (!triangle({left, s, right})) continue;
        cur.stalk[j - 1] = s;
        if (j == r - 1)
          cur.stalk[r - 1] = right;
        else
          cur.base[j - 2] = right;
        self(self, j + 1);
      }
  };
  for (int s1 = 0; s1 <= 1; ++s1) {
    cur.stalk[0] = s1;
    rec(rec, 2);
  }
  std::sort(out.begin(), out.end());
  std::lock_guard lock(mu);
  memo[r] = out;
  return out;
}

std::vector<ReducedMatching> enumerate_reduced_matchings(const TrivalentTree& t) {
  if (t.kind != TreeKind::Caterpillar) throw RewriteError("reduced matchings live on caterpillars");
  return enumerate_reduced_matchings(t.r);
}

std::vector<int> sum_of(const MatchingTuple& tup) {
  if (tup.empty()) return {};
  check_same_tree(tup);
  std::vector<int> s(tup.front().stalk.size() + tup.front().base.size(), 0);
  for (const auto& m : tup) {
    size_t i = 0;
    for (int x : m.stalk) s[i++] += x;
    for (int x : m.base) s[i++] += x;
  }
  return s;
}

bool is_balanced(const MatchingTuple& tup) {
  check_same_tree(tup);
  for (size_t i = 0; i < tup.size(); ++i)
    for (size_t j = i + 1; j < tup.size(); ++j)
      for (size_t k = 0; k < tup[i].base.size(); ++k)
        if (std::abs(tup[i].base[k] - tup[j].base[k]) > 1) return false;
  return true;
}

bool is_unbreakable(const ReducedMatching& m) {
  return std::all_of(m.base.begin(), m.base.end(), [](int x) { return x > 0; });
}

std::pair<Triple, Triple> balance_triples(Triple x, Triple y) {
  if (!triangle(x) || !triangle(y) || x[1] > 1 || y[1] > 1) throw RewriteError("balance_triples needs admissible triples with stalk <= 1");
  // p = 0 balances the left values, p = 2 the right ones
  for (int p : {0, 2}) {
    const int q = 2 - p;
    while (std::abs(x[p] - y[p]) >= 2) {
      bool flipped = x[p] > y[p];
      if (flipped) std::swap(x, y);
      x[p] += 1;
      y[p] -= 1;
      if (x[q] < y[q]) {
        x[q] += 1;
        y[q] -= 1;
      } else if (x[q] > y[q]) {
        throw std::logic_error("local balance hit an impossible configuration");
      }
      if (flipped) std::swap(x, y);
    }
  }
  return {x, y};
}

std::pair<ReducedMatching, ReducedMatching> balance_pair(const ReducedMatching& x, const ReducedMatching& y) {
  if (x.r != y.r) throw RewriteError("entries live on different caterpillars");
  const int r = x.r;
  ReducedMatching eta = zero_matching(r), etap = zero_matching(r);
  for (int j = 2; j <= r - 1; ++j) {
    auto [t1, t2] = balance_triples(local_triple(x, j), local_triple(y, j));
    if (j > 2) {
      int prev = eta.base[j - 3];
      if (t1[0] != prev) std::swap(t1, t2);
      if (t1[0] != prev) throw std::logic_error("glue step found mismatched base values");
    }
    set_triple(eta, j, t1);
    set_triple(etap, j, t2);
  }
  return {eta, etap};
}

namespace {
bool pair_balanced(const ReducedMatching& a, const ReducedMatching& b) {
  for (size_t k = 0; k < a.base.size(); ++k)
    if (std::abs(a.base[k] - b.base[k]) > 1) return false;
  return true;
}
}  // namespace

MatchingTuple balance(MatchingTuple tup, RewriteTrace* trace, long long fuel) {
  check_same_tree(tup);
  for (const auto& m : tup)
    if (!is_reduced_matching(m)) throw RewriteError("balance needs reduced matchings");
  bool changed = true;
  while (changed) {
    changed = false;
    for (size_t i = 0; i < tup.size(); ++i)
      for (size_t j = i + 1; j < tup.size(); ++j) {
        if (pair_balanced(tup[i], tup[j])) continue;
        if (--fuel < 0) throw RewriteError("balance ran out of fuel");
        auto [a, b] = balance_pair(tup[i], tup[j]);
        if (trace) trace->push_back({static_cast<int>(i), static_cast<int>(j), tup[i], tup[j], a, b});
        tup[i] = a;
        tup[j] = b;
        changed = true;
      }
  }
  return tup;
}

std::string type_vector(const MatchingTuple& tup) {
  if (tup.size() != 3) throw RewriteError("type vector needs a tuple of length 3");
  check_same_tree(tup);
  const int r = tup.front().r;
  const std::vector<Triple> ta{{0, 0, 0}, {1, 1, 1}, {1, 1, 1}}, tb{{0, 1, 1}, {1, 0, 1}, {1, 1, 0}};
  std::string out;
  for (int j = 2; j <= r - 1; ++j) {
    std::vector<Triple> loc;
    for (const auto& m : tup) loc.push_back(local_triple(m, j));
    std::sort(loc.begin(), loc.end());
    out += loc == ta ? 'A' : loc == tb ? 'B' : '0';
  }
  return out;
}

int letter_rank(const ReducedMatching& m, int j) {
  Triple t = local_triple(m, j);
  const int r = m.r;
  const bool left_end = j == 2 && r >= 4, right_end = j == r - 1 && r >= 4;
  if (left_end || right_end) {
    if (right_end && !left_end) std::swap(t[0], t[2]);
    if (left_end && right_end) return 100 + t[0] * 9 + t[1] * 3 + t[2];
    static const std::vector<Triple> ends{{0, 1, 1}, {1, 0, 1}, {1, 1, 1}, {1, 1, 2}};
    for (int i = 0; i < 4; ++i)
      if (ends[i] == t) return i;
    return 100 + t[0] * 9 + t[1] * 3 + t[2];
  }
  auto [a, b, c] = t;
  if (a == c && b == 0) return 4 * a;
  if (a == c && b == 1) return 4 * a + 1;
  if (c == a + 1 && b == 1) return 4 * a + 2;
  if (a == c + 1 && b == 1) return 4 * c + 3;
  return 1'000'000 + a * 1000 + b * 100 + c;
}

bool letter_less(const ReducedMatching& x, const ReducedMatching& y) {
  for (int j = 2; j <= x.r - 1; ++j) {
    int a = letter_rank(x, j), b = letter_rank(y, j);
    if (a != b) return a < b;
  }
  return x < y;
}

namespace {

// min/max merge of two balanced unbreakable entries, stalks chosen per trinode
std::pair<ReducedMatching, ReducedMatching> merge_pair(const ReducedMatching& x, const ReducedMatching& y) {
  const int r = x.r;
  ReducedMatching eta = x, etap = y;
  for (size_t k = 0; k < x.base.size(); ++k) {
    eta.base[k] = std::min(x.base[k], y.base[k]);
    etap.base[k] = std::max(x.base[k], y.base[k]);
  }
  for (int j = 2; j <= r - 1; ++j) {
    std::vector<int> owned{j};
    if (j == 2) owned.insert(owned.begin(), 1);
    if (j == r - 1) owned.push_back(r);
    std::vector<int> total;
    for (int s : owned) total.push_back(x.stalk[s - 1] + y.stalk[s - 1]);
    const int combos = 1 << owned.size();
    auto apply = [&](int mask) {
      for (size_t i = 0; i < owned.size(); ++i) {
        int v = (mask >> i) & 1, w = total[i] - v;
        if (w < 0 || w > 1) return false;
        eta.stalk[owned[i] - 1] = v;
        etap.stalk[owned[i] - 1] = w;
      }
      return triangle(local_triple(eta, j)) && triangle(local_triple(etap, j));
    };
    int best = -1;
    std::tuple<bool, int, int> best_key;
    for (int mask = 0; mask < combos; ++mask) {
      if (!apply(mask)) continue;
      int ra = letter_rank(eta, j), rb = letter_rank(etap, j);
      std::tuple<bool, int, int> key{ra > rb, ra, rb};  // ordered options first, then smallest eta
      if (best < 0 || key < best_key) {
        best = mask;
        best_key = key;
      }
    }
    if (best < 0) throw std::logic_error("min/max merge found no admissible stalk assignment");
    apply(best);
  }
  return {eta, etap};
}

}  // namespace

MatchingTuple normal_form(const MatchingTuple& input, RewriteTrace* trace) {
  if (input.empty()) return input;
  check_same_tree(input);
  if (input.front().r < 4) throw RewriteError("normal form is defined for r >= 4");
  for (const auto& m : input) {
    if (!is_reduced_matching(m)) throw RewriteError("normal form needs reduced matchings");
    if (!is_unbreakable(m)) throw RewriteError("normal form needs unbreakable entries");
  }
  MatchingTuple tup = balance(input, trace);
  bool changed = true;
  long long fuel = 1'000'000;
  while (changed) {
    changed = false;
    for (size_t i = 0; i < tup.size(); ++i)
      for (size_t j = i + 1; j < tup.size(); ++j) {
        auto [a, b] = merge_pair(tup[i], tup[j]);
        if (a == tup[i] && b == tup[j]) continue;
        if (--fuel < 0) throw RewriteError("normal form ran out of fuel");
        if (trace) trace->push_back({static_cast<int>(i), static_cast<int>(j), tup[i], tup[j], a, b});
        tup[i] = a;
        tup[j] = b;
        changed = true;
      }
  }
  std::stable_sort(tup.begin(), tup.end(), letter_less);
  return tup;
}

namespace {
ReducedMatching splice(const ReducedMatching& left, const ReducedMatching& right, int j, const Triple& t) {
  ReducedMatching out = left;
  for (int i = j + 1; i <= out.r; ++i) out.stalk[i - 1] = right.stalk[i - 1];
  for (int k = j + 1; k <= out.r - 2; ++k) out.base[k - 2] = right.base[k - 2];
  set_triple(out, j, t);
  return out;
}
}  // namespace

MatchingTuple toric_segre_move(const MatchingTuple& tup, int j) {
  std::string tv = type_vector(tup);
  const int r = tup.front().r;
  if (j < 2 || j > r - 1) throw RewriteError("trinode index out of range");
  std::vector<Triple> loc;
  for (const auto& m : tup) loc.push_back(local_triple(m, j));
  auto find = [&](const Triple& t, int skip) {
    for (int i = 0; i < 3; ++i)
      if (i != skip && loc[i] == t) return i;
    return -1;
  };
  MatchingTuple out(3);
  if (tv[j - 2] == 'A') {
    int e1 = find({1, 1, 1}, -1), e2 = find({1, 1, 1}, e1), e3 = find({0, 0, 0}, -1);
    out[e1] = splice(tup[e1], tup[e3], j, {1, 1, 0});
    out[e2] = splice(tup[e3], tup[e1], j, {0, 1, 1});
    out[e3] = splice(tup[e2], tup[e2], j, {1, 0, 1});
  } else if (tv[j - 2] == 'B') {
    int f1 = find({1, 1, 0}, -1), f2 = find({0, 1, 1}, -1), f3 = find({1, 0, 1}, -1);
    out[f1] = splice(tup[f1], tup[f2], j, {1, 1, 1});
    out[f2] = splice(tup[f3], tup[f3], j, {1, 1, 1});
    out[f3] = splice(tup[f2], tup[f1], j, {0, 0, 0});
  } else {
    throw RewriteError("no toric Segre pattern at this trinode");
  }
  return out;
}

std::vector<std::pair<ReducedMatching, ReducedMatching>> quadratic_partners(const ReducedMatching& x, const ReducedMatching& y,
                                                                            bool unbreakable_only) {
  if (x.r != y.r) throw RewriteError("entries live on different caterpillars");
  std::vector<std::pair<ReducedMatching, ReducedMatching>> out;
  for (const auto& a : enumerate_reduced_matchings(x.r)) {
    ReducedMatching b = a;
    bool ok = true;
    for (size_t i = 0; i < b.stalk.size() && ok; ++i) {
      b.stalk[i] = x.stalk[i] + y.stalk[i] - a.stalk[i];
      ok = b.stalk[i] >= 0 && b.stalk[i] <= 1;
    }
    for (size_t k = 0; k < b.base.size() && ok; ++k) {
      b.base[k] = x.base[k] + y.base[k] - a.base[k];
      ok = b.base[k] >= 0;
    }
    if (!ok || !is_reduced_matching(b)) continue;
    if (unbreakable_only && (!is_unbreakable(a) || !is_unbreakable(b))) continue;
    out.emplace_back(a, b);
  }
  return out;
}

MatchingTuple random_equivalent(const MatchingTuple& tup, std::mt19937_64& rng, int steps) {
  MatchingTuple out = tup;
  if (out.size() >= 2) {
    bool unb = std::all_of(out.begin(), out.end(), is_unbreakable);
    for (int s = 0; s < steps; ++s) {
      std::uniform_int_distribution<size_t> pick(0, out.size() - 1);
      size_t i = pick(rng), j = pick(rng);
      if (i == j) continue;
      auto partners = quadratic_partners(out[i], out[j], unb);
      std::uniform_int_distribution<size_t> which(0, partners.size() - 1);
      auto [a, b] = partners[which(rng)];
      out[i] = a;
      out[j] = b;
    }
  }
  std::shuffle(out.begin(), out.end(), rng);
  return out;
}

std::string to_string(const ReducedMatching& m) {
  std::ostringstream os;
  os << '(' << m.stalk[0] << " |";
  for (int j = 2; j <= m.r - 1; ++j) {
    os << ' ' << m.stalk[j - 1];
    if (j <= m.r - 2) os << ' ' << m.base[j - 2];
  }
  os << " | " << m.stalk[m.r - 1] << ')';
  return os.str();
}

ReducedMatching parse_reduced_matching(const std::string& text) {
  std::string s = text;
  auto l = s.find('('), rp = s.rfind(')');
  if (l == std::string::npos || rp == std::string::npos || rp < l) throw RewriteError("reduced matching must look like (s1 | ... | sr)");
  s = s.substr(l + 1, rp - l - 1);
  if (std::count(s.begin(), s.end(), '|') != 2) throw RewriteError("reduced matching needs two '|' separators");
  std::replace(s.begin(), s.end(), '|', ' ');
  std::istringstream is(s);
  std::vector<int> v;
  std::string tok;
  while (is >> tok) {
    try {
      size_t used = 0;
      v.push_back(std::stoi(tok, &used));
      if (used != tok.size()) throw RewriteError("bad number in reduced matching: " + tok);
    } catch (const std::logic_error&) {
      throw RewriteError("bad number in reduced matching: " + tok);
    }
  }
  if (v.size() < 3 || v.size() % 2 == 0) throw RewriteError("wrong number of entries in reduced matching");
  const int r = (static_cast<int>(v.size()) + 3) / 2;
  ReducedMatching m = zero_matching(r);
  m.stalk[0] = v[0];
  size_t p = 1;
  for (int j = 2; j <= r - 1; ++j) {
    m.stalk[j - 1] = v[p++];
    if (j <= r - 2) m.base[j - 2] = v[p++];
  }
  m.stalk[r - 1] = v[p];
  if (!is_reduced_matching(m)) throw RewriteError("not an admissible reduced matching: " + text);
  return m;
}

}  // namespace plucker
