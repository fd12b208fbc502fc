#include "radon/simd.hpp"

#if defined(__x86_64__) || defined(_M_X64)
#include <immintrin.h>
#endif

namespace radon::simd::detail {

#if (defined(__x86_64__) || defined(_M_X64)) && defined(__AVX2__)

namespace {

void vandermonde_sq_avx2(const double* const* lam, size_t r, size_t n, double* out) {
  const size_t n4 = n - n % 4;
  for (size_t k = 0; k < n4; k += 4) {
    __m256d prod = _mm256_set1_pd(1.0);
    for (size_t i = 0; i < r; ++i)
      for (size_t j = i + 1; j < r; ++j) {
        __m256d d = _mm256_sub_pd(_mm256_loadu_pd(lam[i] + k), _mm256_loadu_pd(lam[j] + k));
        prod = _mm256_mul_pd(prod, _mm256_mul_pd(d, d));
      }
    _mm256_storeu_pd(out + k, prod);
  }
  for (size_t k = n4; k < n; ++k) {
    double prod = 1.0;
    for (size_t i = 0; i < r; ++i)
      for (size_t j = i + 1; j < r; ++j) {
        double d = lam[i][k] - lam[j][k];
        prod = prod * (d * d);
      }
    out[k] = prod;
  }
}

void mul_avx2(const double* a, const double* b, double* out, size_t n) {
  const size_t n4 = n - n % 4;
  for (size_t k = 0; k < n4; k += 4)
    _mm256_storeu_pd(out + k, _mm256_mul_pd(_mm256_loadu_pd(a + k), _mm256_loadu_pd(b + k)));
  for (size_t k = n4; k < n; ++k) out[k] = a[k] * b[k];
}

double dot_avx2(const double* a, const double* b, size_t n) {
  __m256d acc = _mm256_setzero_pd();
  const size_t n4 = n - n % 4;
  for (size_t k = 0; k < n4; k += 4)
    acc = _mm256_add_pd(acc, _mm256_mul_pd(_mm256_loadu_pd(a + k), _mm256_loadu_pd(b + k)));
  alignas(32) double s[4];
  _mm256_store_pd(s, acc);
  double total = (s[0] + s[1]) + (s[2] + s[3]);
  for (size_t k = n4; k < n; ++k) total = total + a[k] * b[k];
  return total;
}

const Kernels kAvx2{Isa::avx2, vandermonde_sq_avx2, mul_avx2, dot_avx2};

}  // namespace

const Kernels* avx2_table() { return &kAvx2; }

#else

const Kernels* avx2_table() { return nullptr; }

#endif

}  // namespace radon::simd::detail
