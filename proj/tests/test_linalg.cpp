#include <random>

#include "doctest.h"
#include "plucker/linalg.hpp"

using namespace plucker;

namespace {

QMatrix dense(std::vector<std::vector<long>> rows) {
  std::vector<DenseVec> r;
  for (auto& row : rows) {
    DenseVec v;
    for (long x : row) v.push_back(Q(x));
    r.push_back(v);
  }
  return QMatrix::from_dense(r);
}

QMatrix random_matrix(int rows, int cols, int rank_target, std::mt19937_64& rng) {
  // product of random integer factors, so the rank is at most rank_target
  std::uniform_int_distribution<int> dist(-5, 5);
  std::vector<DenseVec> a(rows, DenseVec(rank_target)), b(rank_target, DenseVec(cols));
  for (auto& row : a)
    for (auto& x : row) x = dist(rng);
  for (auto& row : b)
    for (auto& x : row) {
      x = Q(dist(rng), 1 + (rng() % 3));
      x.canonicalize();
    }
  std::vector<DenseVec> m(rows, DenseVec(cols, Q(0)));
  for (int i = 0; i < rows; ++i)
    for (int k = 0; k < rank_target; ++k)
      for (int j = 0; j < cols; ++j) m[i][j] += a[i][k] * b[k][j];
  return QMatrix::from_dense(m);
}

}  // namespace

TEST_CASE("rationals parse exactly") {
  CHECK(q_from_string("3/2") == Q(3, 2));
  CHECK(q_from_string("-6/4") == Q(-3, 2));
  CHECK(q_from_string("+7") == Q(7));
  CHECK_THROWS(q_from_string("1/0"));
  CHECK_THROWS(q_from_string("abc"));
  CHECK_THROWS(q_from_string(""));
}

TEST_CASE("rank") {
  CHECK(rank(dense({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}})) == 3);
  CHECK(rank(dense({{1, 2}, {2, 4}})) == 1);
  CHECK(rank(QMatrix(5, 7, std::vector<SparseVec>(5))) == 0);
}

TEST_CASE("kernel basis") {
  CHECK(kernel_basis(dense({{1, 0}, {0, 1}})).empty());
  auto k = kernel_basis(dense({{1, 2}, {2, 4}}));
  REQUIRE(k.size() == 1);
  CHECK(k[0][0] == -2 * k[0][1]);
  CHECK(k[0][1] != 0);
  auto k0 = kernel_basis(QMatrix(0, 4, {}));
  CHECK(k0.size() == 4);
}

TEST_CASE("span helpers") {
  CHECK(span_contains({{Q(1), Q(0)}, {Q(0), Q(1)}}, {Q(3), Q(-7)}));
  CHECK_FALSE(span_contains({{Q(1), Q(1)}}, {Q(1), Q(2)}));
  DenseVec v{Q(1), Q(2), Q(3)};
  CHECK(span_dim({v, v, v}) == 1);
}

TEST_CASE("rank-nullity on random matrices") {
  std::mt19937_64 rng(7);
  for (int t = 0; t < 20; ++t) {
    int rows = 3 + rng() % 6, cols = 3 + rng() % 6, rk = 1 + rng() % 3;
    QMatrix m = random_matrix(rows, cols, rk, rng);
    int r = rank(m);
    CHECK(r <= rk);
    auto k = kernel_basis(m);
    CHECK(static_cast<int>(k.size()) == cols - r);
    for (const auto& v : k) {
      auto img = m.multiply(v);
      for (const auto& x : img) CHECK(x == 0);
    }
    CHECK(modp::rank_lower_bound(m, 3) <= r);
    CHECK(rank(m.transpose()) == r);
  }
}

TEST_CASE("subspace") {
  Subspace s(3);
  CHECK(s.add({{0, Q(1)}, {1, Q(1)}}));
  CHECK_FALSE(s.add({{0, Q(2)}, {1, Q(2)}}));
  CHECK(s.add({{2, Q(1)}}));
  CHECK(s.contains({{0, Q(5)}, {1, Q(5)}, {2, Q(-1)}}));
  CHECK_FALSE(s.contains({{0, Q(1)}}));
  CHECK(s.dim() == 2);
}

TEST_CASE("mod-p axpy kernels agree") {
  std::mt19937_64 rng(11);
  const double p = 8388593;  // prime below 2^23
  for (std::size_t len : {0u, 1u, 3u, 4u, 5u, 7u, 8u, 17u, 64u, 1001u}) {
    std::vector<double> x(len), y(len);
    for (std::size_t i = 0; i < len; ++i) {
      x[i] = static_cast<double>(rng() % static_cast<std::uint64_t>(p));
      y[i] = static_cast<double>(rng() % static_cast<std::uint64_t>(p));
    }
    double f = static_cast<double>(rng() % static_cast<std::uint64_t>(p));
    auto ys = y, yv = y;
    modp::axpy_scalar(ys.data(), x.data(), f, p, len);
    if (modp::avx2_available()) {
      modp::axpy_avx2(yv.data(), x.data(), f, p, len);
      CHECK(ys == yv);
    }
    for (std::size_t i = 0; i < len; ++i) {
      auto want = static_cast<long long>((static_cast<__int128>(y[i]) - static_cast<__int128>(f) * static_cast<__int128>(x[i])) % static_cast<long long>(p));
      if (want < 0) want += static_cast<long long>(p);
      CHECK(static_cast<long long>(ys[i]) == want);
    }
  }
}

TEST_CASE("mod-p rank matches exact rank, both kernels") {
  std::mt19937_64 rng(3);
  auto primes = modp::random_primes(5, 2);
  for (int t = 0; t < 10; ++t) {
    QMatrix m = random_matrix(12, 20, 1 + rng() % 8, rng);
    int exact = rank(m);
    modp::force_scalar(true);
    int rs = modp::rank_mod_p(m, primes[0]);
    modp::force_scalar(false);
    int rv = modp::rank_mod_p(m, primes[0]);
    CHECK(rs == rv);
    CHECK(rs <= exact);
    CHECK(modp::rank_lower_bound(m, 9) == exact);
  }
}
