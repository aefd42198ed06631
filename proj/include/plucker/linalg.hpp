#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <vector>

#include "plucker/rational.hpp"

namespace plucker {

// Sparse rational vector: (index, value) pairs, sorted by index, no zeros.
using SparseVec = std::vector<std::pair<int, Q>>;
using DenseVec = std::vector<Q>;

class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

SparseVec sparse_from_dense(const DenseVec& v);
DenseVec dense_from_sparse(const SparseVec& v, int len);
// a + s*b
SparseVec sparse_axpy(const SparseVec& a, const Q& s, const SparseVec& b);

class QMatrix {
 public:
  QMatrix() = default;
  QMatrix(int rows, int cols, std::vector<SparseVec> data);
  static QMatrix from_dense(const std::vector<DenseVec>& rows);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  const SparseVec& row(int r) const { return data_[r]; }
  Q at(int r, int c) const;
  std::size_t nonzeros() const;
  DenseVec multiply(const DenseVec& x) const;
  QMatrix transpose() const;

 private:
  int rows_ = 0, cols_ = 0;
  std::vector<SparseVec> data_;
};

class QMatrixBuilder {
 public:
  QMatrixBuilder(int rows, int cols) : rows_(rows), cols_(cols), acc_(rows) {}
  void add(int r, int c, const Q& v);
  void set_row(int r, const SparseVec& v);
  QMatrix build() &&;

 private:
  int rows_, cols_;
  std::vector<std::map<int, Q>> acc_;
};

struct Echelon {
  std::vector<int> pivot_cols;   // ascending
  std::vector<SparseVec> rows;   // reduced rows, pivot entry 1, zero above and below pivots
};

Echelon rref(const QMatrix& m);
int rank(const QMatrix& m);
std::vector<DenseVec> kernel_basis(const QMatrix& m);
int span_dim(const std::vector<DenseVec>& vectors);
bool span_contains(const std::vector<DenseVec>& vectors, const DenseVec& v);

// Incrementally grown subspace in echelon form.
class Subspace {
 public:
  explicit Subspace(int dim) : dim_(dim) {}
  bool add(SparseVec v);  // true if v was not already in the span
  bool contains(SparseVec v) const;
  SparseVec reduce(SparseVec v) const;
  int dim() const { return static_cast<int>(rows_.size()); }
  int ambient() const { return dim_; }

 private:
  int dim_;
  std::map<int, SparseVec> rows_;  // pivot -> row with leading 1 at pivot
};

// Modular arithmetic fast path.
namespace modp {

// y[i] = (y[i] - f * x[i]) mod p for entries in [0,p), p < 2^26.
void axpy_scalar(double* y, const double* x, double f, double p, std::size_t len);
void axpy_avx2(double* y, const double* x, double f, double p, std::size_t len);
void axpy(double* y, const double* x, double f, double p, std::size_t len);
bool avx2_available();
const char* active_kernel();
void force_scalar(bool on);

// Rank of m over F_p; returns -1 if some denominator vanishes mod p.
int rank_mod_p(const QMatrix& m, std::uint32_t p);
std::vector<std::uint32_t> random_primes(std::uint64_t seed, int count);
// Maximum rank over several primes: a lower bound for the rational rank.
int rank_lower_bound(const QMatrix& m, std::uint64_t seed, int primes = 3);

}  // namespace modp

}  // namespace plucker
