#include <immintrin.h>

#include "plucker/linalg.hpp"

namespace plucker::modp {

void axpy_avx2(double* y, const double* x, double f, double p, std::size_t len) {
  const __m256d vf = _mm256_set1_pd(-f);
  const __m256d vp = _mm256_set1_pd(p);
  const __m256d vpinv = _mm256_set1_pd(1.0 / p);
  const __m256d zero = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 4 <= len; i += 4) {
    __m256d t = _mm256_fmadd_pd(vf, _mm256_loadu_pd(x + i), _mm256_loadu_pd(y + i));
    __m256d q = _mm256_floor_pd(_mm256_mul_pd(t, vpinv));
    __m256d r = _mm256_fnmadd_pd(q, vp, t);
    r = _mm256_add_pd(r, _mm256_and_pd(_mm256_cmp_pd(r, zero, _CMP_LT_OQ), vp));
    r = _mm256_sub_pd(r, _mm256_and_pd(_mm256_cmp_pd(r, vp, _CMP_GE_OQ), vp));
    _mm256_storeu_pd(y + i, r);
  }
  if (i < len) axpy_scalar(y + i, x + i, f, p, len - i);
}

}  // namespace plucker::modp
