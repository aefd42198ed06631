#include <algorithm>
#include <atomic>
#include <cmath>
#include <random>

#include "plucker/linalg.hpp"

namespace plucker::modp {

void axpy_scalar(double* y, const double* x, double f, double p, std::size_t len) {
  const double pinv = 1.0 / p;
  for (std::size_t i = 0; i < len; ++i) {
    double t = std::fma(-f, x[i], y[i]);
    double q = std::floor(t * pinv);
    double r = std::fma(-q, p, t);
    if (r < 0) r += p;
    if (r >= p) r -= p;
    y[i] = r;
  }
}

namespace {
std::atomic<bool> g_force_scalar{false};
}

bool avx2_available() {
#if defined(__x86_64__) || defined(__i386__)
  static const bool ok = __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
  return ok;
#else
  return false;
#endif
}

void force_scalar(bool on) { g_force_scalar = on; }

const char* active_kernel() { return (!g_force_scalar && avx2_available()) ? "avx2" : "scalar"; }

void axpy(double* y, const double* x, double f, double p, std::size_t len) {
  if (!g_force_scalar && avx2_available())
    axpy_avx2(y, x, f, p, len);
  else
    axpy_scalar(y, x, f, p, len);
}

namespace {
std::uint64_t powmod(std::uint64_t b, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1;
  b %= p;
  while (e) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
    e >>= 1;
  }
  return r;
}

bool reduce_q(const Q& q, std::uint32_t p, double& out) {
  unsigned long den = mpz_fdiv_ui(q.get_den_mpz_t(), p);
  if (den == 0) return false;
  unsigned long num = mpz_fdiv_ui(q.get_num_mpz_t(), p);
  out = static_cast<double>(static_cast<std::uint64_t>(num) * powmod(den, p - 2, p) % p);
  return true;
}

bool is_prime(std::uint32_t n) {
  if (n < 2) return false;
  for (std::uint32_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}
}  // namespace

int rank_mod_p(const QMatrix& m, std::uint32_t p) {
  const int R = m.rows(), C = m.cols();
  std::vector<double> a(static_cast<std::size_t>(R) * C, 0.0);
  for (int r = 0; r < R; ++r)
    for (const auto& [c, v] : m.row(r))
      if (!reduce_q(v, p, a[static_cast<std::size_t>(r) * C + c])) return -1;
  const double pd = p;
  int rank = 0;
  for (int c = 0; c < C && rank < R; ++c) {
    int piv = -1;
    for (int r = rank; r < R; ++r)
      if (a[static_cast<std::size_t>(r) * C + c] != 0) {
        piv = r;
        break;
      }
    if (piv < 0) continue;
    if (piv != rank)
      std::swap_ranges(a.begin() + static_cast<std::size_t>(piv) * C, a.begin() + static_cast<std::size_t>(piv + 1) * C,
                       a.begin() + static_cast<std::size_t>(rank) * C);
    double* prow = &a[static_cast<std::size_t>(rank) * C];
    double inv = static_cast<double>(powmod(static_cast<std::uint64_t>(prow[c]), p - 2, p));
    for (int j = c; j < C; ++j) prow[j] = std::fmod(prow[j] * inv, pd);
    for (int r = rank + 1; r < R; ++r) {
      double* row = &a[static_cast<std::size_t>(r) * C];
      if (row[c] != 0) axpy(row + c, prow + c, row[c], pd, static_cast<std::size_t>(C - c));
    }
    ++rank;
  }
  return rank;
}

std::vector<std::uint32_t> random_primes(std::uint64_t seed, int count) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::uint32_t> dist(1u << 25, (1u << 26) - 1);
  std::vector<std::uint32_t> out;
  while (static_cast<int>(out.size()) < count) {
    std::uint32_t c = dist(rng) | 1u;
    if (is_prime(c) && std::find(out.begin(), out.end(), c) == out.end()) out.push_back(c);
  }
  return out;
}

int rank_lower_bound(const QMatrix& m, std::uint64_t seed, int primes) {
  int best = 0;
  for (auto p : random_primes(seed, primes)) best = std::max(best, rank_mod_p(m, p));
  return best;
}

}  // namespace plucker::modp
