#include <cstdlib>
#include <cstring>

#include "radon/simd.hpp"

#if defined(__aarch64__)
#include <arm_neon.h>
#endif

namespace radon::simd {

namespace detail {
const Kernels* avx2_table();
}

namespace {

void vandermonde_sq_scalar(const double* const* lam, size_t r, size_t n, double* out) {
  for (size_t k = 0; k < n; ++k) {
    double prod = 1.0;
    for (size_t i = 0; i < r; ++i)
      for (size_t j = i + 1; j < r; ++j) {
        double d = lam[i][k] - lam[j][k];
        prod = prod * (d * d);
      }
    out[k] = prod;
  }
}

void mul_scalar(const double* a, const double* b, double* out, size_t n) {
  for (size_t k = 0; k < n; ++k) out[k] = a[k] * b[k];
}

double dot_scalar(const double* a, const double* b, size_t n) {
  double s[4] = {0.0, 0.0, 0.0, 0.0};
  const size_t n4 = n - n % 4;
  for (size_t k = 0; k < n4; k += 4)
    for (size_t l = 0; l < 4; ++l) s[l] = s[l] + a[k + l] * b[k + l];
  double total = (s[0] + s[1]) + (s[2] + s[3]);
  for (size_t k = n4; k < n; ++k) total = total + a[k] * b[k];
  return total;
}

const Kernels kScalar{Isa::scalar, vandermonde_sq_scalar, mul_scalar, dot_scalar};

#if defined(__aarch64__)
void vandermonde_sq_neon(const double* const* lam, size_t r, size_t n, double* out) {
  const size_t n2 = n - n % 2;
  for (size_t k = 0; k < n2; k += 2) {
    float64x2_t prod = vdupq_n_f64(1.0);
    for (size_t i = 0; i < r; ++i)
      for (size_t j = i + 1; j < r; ++j) {
        float64x2_t d = vsubq_f64(vld1q_f64(lam[i] + k), vld1q_f64(lam[j] + k));
        prod = vmulq_f64(prod, vmulq_f64(d, d));
      }
    vst1q_f64(out + k, prod);
  }
  if (n2 < n) {
    const double* tail[8];
    for (size_t i = 0; i < r && i < 8; ++i) tail[i] = lam[i] + n2;
    vandermonde_sq_scalar(tail, r, n - n2, out + n2);
  }
}

void mul_neon(const double* a, const double* b, double* out, size_t n) {
  const size_t n2 = n - n % 2;
  for (size_t k = 0; k < n2; k += 2) vst1q_f64(out + k, vmulq_f64(vld1q_f64(a + k), vld1q_f64(b + k)));
  for (size_t k = n2; k < n; ++k) out[k] = a[k] * b[k];
}

double dot_neon(const double* a, const double* b, size_t n) {
  float64x2_t s01 = vdupq_n_f64(0.0), s23 = vdupq_n_f64(0.0);
  const size_t n4 = n - n % 4;
  for (size_t k = 0; k < n4; k += 4) {
    s01 = vaddq_f64(s01, vmulq_f64(vld1q_f64(a + k), vld1q_f64(b + k)));
    s23 = vaddq_f64(s23, vmulq_f64(vld1q_f64(a + k + 2), vld1q_f64(b + k + 2)));
  }
  double s[4] = {vgetq_lane_f64(s01, 0), vgetq_lane_f64(s01, 1), vgetq_lane_f64(s23, 0), vgetq_lane_f64(s23, 1)};
  double total = (s[0] + s[1]) + (s[2] + s[3]);
  for (size_t k = n4; k < n; ++k) total = total + a[k] * b[k];
  return total;
}

const Kernels kNeon{Isa::neon, vandermonde_sq_neon, mul_neon, dot_neon};
#endif

}  // namespace

const Kernels& scalar_kernels() { return kScalar; }

const Kernels* avx2_kernels() {
#if defined(__x86_64__) || defined(_M_X64)
  __builtin_cpu_init();
  if (__builtin_cpu_supports("avx2")) return detail::avx2_table();
#endif
  return nullptr;
}

const Kernels* neon_kernels() {
#if defined(__aarch64__)
  return &kNeon;
#else
  return nullptr;
#endif
}

const Kernels& active() {
  static const Kernels* chosen = [] {
    const char* env = std::getenv("RADON_SIMD");
    if (env && std::strcmp(env, "scalar") == 0) return &kScalar;
    if (const Kernels* k = avx2_kernels()) return k;
    if (const Kernels* k = neon_kernels()) return k;
    return &kScalar;
  }();
  return *chosen;
}

const char* isa_name(Isa isa) {
  switch (isa) {
    case Isa::avx2:
      return "avx2";
    case Isa::neon:
      return "neon";
    default:
      return "scalar";
  }
}

}  // namespace radon::simd
