#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <cstring>
#include <random>
#include <vector>

#include "radon/integrals.hpp"
#include "radon/simd.hpp"

using namespace radon;

namespace {

std::vector<const simd::Kernels*> vector_variants() {
  std::vector<const simd::Kernels*> out;
  if (auto* k = simd::avx2_kernels()) out.push_back(k);
  if (auto* k = simd::neon_kernels()) out.push_back(k);
  return out;
}

bool bitwise_equal(const std::vector<double>& a, const std::vector<double>& b) {
  return a.size() == b.size() && std::memcmp(a.data(), b.data(), a.size() * sizeof(double)) == 0;
}

std::vector<double> random_vec(std::mt19937_64& g, size_t n) {
  std::uniform_real_distribution<double> u(-3.0, 3.0);
  std::vector<double> v(n);
  for (auto& x : v) x = u(g);
  return v;
}

}  // namespace

TEST_CASE("scalar vandermonde matches the naive product") {
  std::mt19937_64 g(51);
  for (size_t r = 1; r <= 4; ++r) {
    const size_t n = 37;
    std::vector<std::vector<double>> lam(r);
    std::vector<const double*> ptr(r);
    for (size_t i = 0; i < r; ++i) {
      lam[i] = random_vec(g, n);
      ptr[i] = lam[i].data();
    }
    std::vector<double> out(n);
    simd::scalar_kernels().vandermonde_sq(ptr.data(), r, n, out.data());
    for (size_t k = 0; k < n; ++k) {
      double v = 1.0;
      for (size_t i = 0; i < r; ++i)
        for (size_t j = i + 1; j < r; ++j) v *= (lam[i][k] - lam[j][k]) * (lam[i][k] - lam[j][k]);
      CHECK(out[k] == doctest::Approx(v).epsilon(1e-14));
    }
  }
}

TEST_CASE("scalar mul and dot") {
  const std::vector<double> a = {1, 2, 3, 4, 5, 6, 7}, b = {7, 6, 5, 4, 3, 2, 1};
  std::vector<double> out(7);
  simd::scalar_kernels().mul(a.data(), b.data(), out.data(), 7);
  CHECK(out == std::vector<double>{7, 12, 15, 16, 15, 12, 7});
  CHECK(simd::scalar_kernels().dot(a.data(), b.data(), 7) == 84.0);
  CHECK(simd::scalar_kernels().dot(a.data(), b.data(), 0) == 0.0);
}

TEST_CASE("vector kernels are bit-identical to scalar") {
  const auto variants = vector_variants();
  if (variants.empty()) MESSAGE("no vector ISA available, only the scalar path is exercised");
  std::mt19937_64 g(52);
  const auto& ref = simd::scalar_kernels();
  for (const auto* k : variants) {
    for (size_t n : {0, 1, 2, 3, 4, 5, 7, 8, 9, 15, 16, 17, 63, 64, 65, 1000, 4097}) {
      const auto a = random_vec(g, n), b = random_vec(g, n);
      std::vector<double> o1(n), o2(n);
      ref.mul(a.data(), b.data(), o1.data(), n);
      k->mul(a.data(), b.data(), o2.data(), n);
      CHECK(bitwise_equal(o1, o2));
      const double d1 = ref.dot(a.data(), b.data(), n), d2 = k->dot(a.data(), b.data(), n);
      CHECK(std::memcmp(&d1, &d2, sizeof(double)) == 0);
      for (size_t r = 1; r <= 4; ++r) {
        std::vector<std::vector<double>> lam(r);
        std::vector<const double*> ptr(r);
        for (size_t i = 0; i < r; ++i) {
          lam[i] = random_vec(g, n);
          ptr[i] = lam[i].data();
        }
        ref.vandermonde_sq(ptr.data(), r, n, o1.data());
        k->vandermonde_sq(ptr.data(), r, n, o2.data());
        CHECK(bitwise_equal(o1, o2));
      }
    }
  }
}

TEST_CASE("active kernel and isa names") {
  CHECK(std::string(simd::isa_name(simd::Isa::scalar)) == "scalar");
  const auto& a = simd::active();
  CHECK((a.isa == simd::Isa::scalar || a.isa == simd::Isa::avx2 || a.isa == simd::Isa::neon));
  if (const char* e = std::getenv("RADON_SIMD"); e && std::string(e) == "scalar") CHECK(a.isa == simd::Isa::scalar);
}

TEST_CASE("Monte Carlo is identical across thread counts") {
  const EigWeight w{Domain{DomainTag::BetaBox}, 0.5, 1.5, 1.0};
  const MatFn f = [](const CMat& u) { return std::exp(-u.trace()); };
  McOptions one, many;
  one.threads = 1;
  many.threads = 4;
  for (size_t r = 1; r <= 3; ++r) {
    const auto a = mc_integral(f, w, r, 20000, 99, one);
    const auto b = mc_integral(f, w, r, 20000, 99, many);
    CHECK(std::memcmp(&a.value, &b.value, sizeof(Complex)) == 0);
    CHECK(a.std_error == b.std_error);
    const auto c = mc_integral(f, w, r, 20000, 100, many);
    CHECK(a.value != c.value);
  }
}
