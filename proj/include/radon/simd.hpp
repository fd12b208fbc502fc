#pragma once

#include <cstddef>

// Batched double kernels for the quadrature / Monte Carlo inner loops.
// The scalar versions define the exact operation order; vector versions
// reproduce it lane by lane, so results are bit-identical.
namespace radon::simd {

enum class Isa { scalar, avx2, neon };

struct Kernels {
  Isa isa;
  // out[k] = prod_{i<j} (lam[i][k] - lam[j][k])^2, lam[i] is coordinate i (SoA)
  void (*vandermonde_sq)(const double* const* lam, size_t r, size_t n, double* out);
  // out[k] = a[k] * b[k]
  void (*mul)(const double* a, const double* b, double* out, size_t n);
  // four interleaved partial sums, combined as (s0 + s1) + (s2 + s3), then the tail in order
  double (*dot)(const double* a, const double* b, size_t n);
};

const Kernels& scalar_kernels();
// nullptr when the ISA is not compiled in or not supported by this CPU
const Kernels* avx2_kernels();
const Kernels* neon_kernels();
// best available; RADON_SIMD=scalar forces the reference path
const Kernels& active();
const char* isa_name(Isa isa);

}  // namespace radon::simd
