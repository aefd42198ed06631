#include "plucker/linalg.hpp"

#include <algorithm>
#include <cctype>

namespace plucker {

Q q_from_string(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("empty rational");
  for (char ch : s)
    if (!(std::isdigit(static_cast<unsigned char>(ch)) || ch == '-' || ch == '/' || ch == '+'))
      throw std::invalid_argument("bad rational: " + s);
  Q q;
  if (q.set_str(s[0] == '+' ? s.substr(1) : s, 10) != 0) throw std::invalid_argument("bad rational: " + s);
  if (q.get_den() == 0) throw std::invalid_argument("zero denominator: " + s);
  q.canonicalize();
  return q;
}

SparseVec sparse_from_dense(const DenseVec& v) {
  SparseVec out;
  for (size_t i = 0; i < v.size(); ++i)
    if (v[i] != 0) out.emplace_back(static_cast<int>(i), v[i]);
  return out;
}

DenseVec dense_from_sparse(const SparseVec& v, int len) {
  DenseVec out(len);
  for (const auto& [i, x] : v) {
    if (i < 0 || i >= len) throw DimensionError("sparse index out of range");
    out[i] = x;
  }
  return out;
}

SparseVec sparse_axpy(const SparseVec& a, const Q& s, const SparseVec& b) {
  SparseVec out;
  out.reserve(a.size() + b.size());
  size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
      out.push_back(a[i++]);
    } else if (i == a.size() || b[j].first < a[i].first) {
      out.emplace_back(b[j].first, s * b[j].second);
      ++j;
    } else {
      Q v = a[i].second + s * b[j].second;
      if (v != 0) out.emplace_back(a[i].first, std::move(v));
      ++i;
      ++j;
    }
  }
  return out;
}

namespace {
const Q* find_entry(const SparseVec& v, int c) {
  auto it = std::lower_bound(v.begin(), v.end(), c, [](const auto& p, int x) { return p.first < x; });
  if (it != v.end() && it->first == c) return &it->second;
  return nullptr;
}
}  // namespace

QMatrix::QMatrix(int rows, int cols, std::vector<SparseVec> data) : rows_(rows), cols_(cols), data_(std::move(data)) {
  if (static_cast<int>(data_.size()) != rows_) throw DimensionError("row count mismatch");
  for (auto& r : data_) {
    std::sort(r.begin(), r.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
    for (size_t i = 0; i < r.size(); ++i) {
      if (r[i].first < 0 || r[i].first >= cols_) throw DimensionError("column out of range");
      if (i && r[i].first == r[i - 1].first) throw DimensionError("duplicate entry");
    }
    std::erase_if(r, [](const auto& p) { return p.second == 0; });
  }
}

QMatrix QMatrix::from_dense(const std::vector<DenseVec>& rows) {
  int cols = rows.empty() ? 0 : static_cast<int>(rows[0].size());
  std::vector<SparseVec> data;
  for (const auto& r : rows) {
    if (static_cast<int>(r.size()) != cols) throw DimensionError("ragged dense matrix");
    data.push_back(sparse_from_dense(r));
  }
  return QMatrix(static_cast<int>(rows.size()), cols, std::move(data));
}

Q QMatrix::at(int r, int c) const {
  const Q* e = find_entry(data_.at(r), c);
  return e ? *e : Q(0);
}

std::size_t QMatrix::nonzeros() const {
  std::size_t s = 0;
  for (const auto& r : data_) s += r.size();
  return s;
}

DenseVec QMatrix::multiply(const DenseVec& x) const {
  if (static_cast<int>(x.size()) != cols_) throw DimensionError("vector length mismatch");
  DenseVec y(rows_);
  for (int r = 0; r < rows_; ++r)
    for (const auto& [c, v] : data_[r]) y[r] += v * x[c];
  return y;
}

QMatrix QMatrix::transpose() const {
  std::vector<SparseVec> t(cols_);
  for (int r = 0; r < rows_; ++r)
    for (const auto& [c, v] : data_[r]) t[c].emplace_back(r, v);
  return QMatrix(cols_, rows_, std::move(t));
}

void QMatrixBuilder::add(int r, int c, const Q& v) {
  if (r < 0 || r >= rows_ || c < 0 || c >= cols_) throw DimensionError("builder index out of range");
  acc_[r][c] += v;
}

void QMatrixBuilder::set_row(int r, const SparseVec& v) {
  if (r < 0 || r >= rows_) throw DimensionError("builder row out of range");
  acc_[r].clear();
  for (const auto& [c, x] : v) add(r, c, x);
}

QMatrix QMatrixBuilder::build() && {
  std::vector<SparseVec> data(rows_);
  for (int r = 0; r < rows_; ++r)
    for (auto& [c, v] : acc_[r])
      if (v != 0) data[r].emplace_back(c, std::move(v));
  return QMatrix(rows_, cols_, std::move(data));
}

Echelon rref(const QMatrix& m) {
  std::vector<SparseVec> rows;
  for (int r = 0; r < m.rows(); ++r)
    if (!m.row(r).empty()) rows.push_back(m.row(r));
  std::vector<char> used(rows.size(), 0);
  std::vector<std::pair<int, int>> pivots;  // (col, row index)
  for (int c = 0; c < m.cols(); ++c) {
    int best = -1;
    std::size_t best_bits = 0;
    for (size_t r = 0; r < rows.size(); ++r) {
      if (used[r] || rows[r].empty() || rows[r].front().first != c) continue;
      std::size_t b = q_bits(rows[r].front().second);
      if (best < 0 || b < best_bits) {
        best = static_cast<int>(r);
        best_bits = b;
      }
    }
    if (best < 0) continue;
    used[best] = 1;
    Q inv = 1 / rows[best].front().second;
    for (auto& [cc, v] : rows[best]) v *= inv;
    const SparseVec& prow = rows[best];
    for (size_t r = 0; r < rows.size(); ++r) {
      if (static_cast<int>(r) == best) continue;
      const Q* e = find_entry(rows[r], c);
      if (!e) continue;
      Q f = -*e;
      rows[r] = sparse_axpy(rows[r], f, prow);
    }
    pivots.emplace_back(c, best);
  }
  Echelon out;
  for (auto [c, r] : pivots) {
    out.pivot_cols.push_back(c);
    out.rows.push_back(std::move(rows[r]));
  }
  return out;
}

int rank(const QMatrix& m) { return static_cast<int>(rref(m).pivot_cols.size()); }

std::vector<DenseVec> kernel_basis(const QMatrix& m) {
  Echelon e = rref(m);
  std::vector<char> is_pivot(m.cols(), 0);
  for (int c : e.pivot_cols) is_pivot[c] = 1;
  std::vector<DenseVec> out;
  for (int f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    DenseVec x(m.cols());
    x[f] = 1;
    for (size_t i = 0; i < e.rows.size(); ++i) {
      const Q* v = find_entry(e.rows[i], f);
      if (v) x[e.pivot_cols[i]] = -*v;
    }
    out.push_back(std::move(x));
  }
  return out;
}

namespace {
void check_lengths(const std::vector<DenseVec>& vs, std::size_t len) {
  for (const auto& v : vs)
    if (v.size() != len) throw DimensionError("vectors of different lengths");
}
}  // namespace

int span_dim(const std::vector<DenseVec>& vectors) {
  if (vectors.empty()) return 0;
  check_lengths(vectors, vectors[0].size());
  return rank(QMatrix::from_dense(vectors));
}

bool span_contains(const std::vector<DenseVec>& vectors, const DenseVec& v) {
  check_lengths(vectors, v.size());
  Subspace s(static_cast<int>(v.size()));
  for (const auto& w : vectors) s.add(sparse_from_dense(w));
  return s.contains(sparse_from_dense(v));
}

SparseVec Subspace::reduce(SparseVec v) const {
  for (const auto& [p, row] : rows_) {
    const Q* e = find_entry(v, p);
    if (!e) continue;
    Q f = -*e;
    v = sparse_axpy(v, f, row);
  }
  return v;
}

bool Subspace::add(SparseVec v) {
  for (const auto& [i, x] : v)
    if (i < 0 || i >= dim_) throw DimensionError("vector index outside ambient space");
  v = reduce(std::move(v));
  if (v.empty()) return false;
  Q inv = 1 / v.front().second;
  for (auto& [i, x] : v) x *= inv;
  int p = v.front().first;
  rows_.emplace(p, std::move(v));
  return true;
}

bool Subspace::contains(SparseVec v) const { return reduce(std::move(v)).empty(); }

}  // namespace plucker
