#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "radon/characters.hpp"
#include "radon/normal_form.hpp"
#include "radon/quadrature.hpp"

namespace radon {

// r <= 4 everywhere on the numeric side; fixed capacity avoids heap traffic in MC loops
using CMat = Eigen::Matrix<Complex, Eigen::Dynamic, Eigen::Dynamic, Eigen::ColMajor, 4, 4>;

CMat to_cmat(const ComplexMatrix& m);
ComplexMatrix from_cmat(const CMat& m);

class HermMatrix {
 public:
  HermMatrix() = default;
  // symmetrizes; throws if the input is off Hermitian by more than tol (relative to its scale)
  explicit HermMatrix(const CMat& m, double tol = 1e-14);
  static HermMatrix diag(const std::vector<double>& d);
  size_t r() const { return static_cast<size_t>(m_.rows()); }
  const CMat& mat() const { return m_; }
  std::vector<double> eigenvalues() const;  // ascending

 private:
  CMat m_;
};

enum class DomainTag { BetaBox, PositiveCone, FullSpace };

struct Domain {
  DomainTag tag = DomainTag::BetaBox;
  bool contains(const HermMatrix& u, double tol = 1e-12) const;
  std::string name() const;
  static Domain parse(const std::string& s);
};

struct IntegralEstimate {
  Complex value{0.0, 0.0};
  double std_error = 0.0;
  size_t n_samples = 0;
  uint64_t seed = 0;
  std::string method;       // mc | eig_quad | series
  double abs_error = 0.0;   // deterministic methods: difference to a refined rule
  size_t nonfinite = 0;     // MC samples dropped as non-finite
};

// inverse-variance pooling; deterministic estimates dominate
IntegralEstimate combine_estimates(const IntegralEstimate& a, const IntegralEstimate& b);

// Product weight over eigenvalues:
//   BetaBox       lam^s (1 - lam)^t      (s, t > -2, not -1; below -1 means finite part)
//   PositiveCone  lam^s exp(-rate lam)   (s > -1)
//   FullSpace     exp(-lam^2 / 2)
struct EigWeight {
  Domain domain;
  double s = 0.0;
  double t = 0.0;
  double rate = 1.0;
};

using MatFn = std::function<Complex(const CMat&)>;
using EigFn = std::function<Complex(const std::vector<double>&)>;

CMat sample_haar_unitary(size_t r, std::mt19937_64& rng);

struct McOptions {
  size_t chunk = 4096;
  unsigned threads = 0;  // 0: RADON_THREADS, else hardware parallelism
};
unsigned resolve_threads(unsigned requested);

// Several integrands on common samples, for ratio estimators.
struct McMulti {
  size_t n = 0;
  uint64_t seed = 0;
  size_t nonfinite = 0;
  std::vector<Complex> sum;                 // sum_k A_i(k)
  std::vector<std::vector<Complex>> gram;   // sum_k A_i(k) conj(A_j(k))
  IntegralEstimate estimate(size_t i) const;
  IntegralEstimate ratio(size_t i, size_t j) const;  // mean_i / mean_j
};

// integral of prod_i w(lam_i) * f(U) dU in eigen-measure units (no unitary-volume constant)
McMulti mc_integral_multi(const std::vector<MatFn>& fs, const EigWeight& w, size_t r, size_t n, uint64_t seed,
                          const McOptions& opt = {});
IntegralEstimate mc_integral(const MatFn& f, const EigWeight& w, size_t r, size_t n, uint64_t seed,
                             const McOptions& opt = {});
// f carries the whole integrand
IntegralEstimate mc_integral(const MatFn& f, const Domain& d, size_t r, size_t n, uint64_t seed,
                             const McOptions& opt = {});

// tensor Gauss rule for int g(lam) prod w(lam_i) Delta(lam)^2 dlam, r <= 3
IntegralEstimate eig_quadrature(const EigFn& g, const EigWeight& w, size_t r, size_t order = 0);
IntegralEstimate eig_quadrature(const EigFn& g, const Domain& d, size_t r, size_t order = 0);
// non-invariant f: eigenvalue rule times an average over U(r)/T (r <= 2)
IntegralEstimate matrix_quadrature(const MatFn& f, const EigWeight& w, size_t r, size_t order = 0,
                                   size_t angular = 24);
// explicit per-coordinate rule (e.g. exp_trapezoid)
IntegralEstimate matrix_quadrature_rule(const MatFn& f, const Rule1D& rule, size_t r, size_t angular = 24);

// ---- integrands ----

struct RadonIntegrand {
  PartitionSpec spec;
  std::function<Complex(const CMat&)> log_f;
  Complex operator()(const CMat& u) const { return std::exp(log_f(u)); }
};

// closed-form rows over the normal form x; alpha read as the flat vector (alpha_0, ..., alpha_{n-1})
RadonIntegrand radon_integrand(const PartitionSpec& spec, const CMat& x, const CharacterParams& alpha);
std::vector<Complex> flat_alpha(const CharacterParams& alpha);

// log chi(iota^{-1}((1_r, u) z); alpha)
Complex character_log_integrand(const ComplexMatrix& z, const CharacterParams& alpha, const ComplexMatrix& u);

// sup_u |L(u; z h) - L(u; z) - log chi(h)| over sampled u in the unit box
double covariance_check_integrand(const PartitionSpec& spec, const ZMatrix& z, const ExactH& h,
                                  const CharacterParams& alpha, size_t samples = 32, uint64_t seed = 1);

// weight/remainder split used by `integrate`
struct IntegralPlan {
  EigWeight weight;
  MatFn rest;
};
IntegralPlan integral_plan(const PartitionSpec& spec, const CMat& x, const CharacterParams& alpha);

// ---- gamma_r and the series bridge ----

struct GammaCalibration {
  size_t r = 1;
  double constant = 1.0;
  std::string provenance;
};
const GammaCalibration& gamma_r_calibration(size_t r);
Complex gamma_r(Complex a, size_t r);
// Gamma_r(c) / (Gamma_r(a) Gamma_r(c - a))
Complex hgf_prefactor(Complex a, Complex c, size_t r);

struct HGFParams {
  bool gauss = true;  // false: Kummer (a, c)
  Complex a, b, c;
};
HGFParams hgf_params_from_alpha(const CharacterParams& alpha);
CharacterParams alpha_from_hgf(const HGFParams& p, size_t r);

IntegralEstimate bessel_hermite_airy_eval(const PartitionSpec& spec, const CMat& x, const CharacterParams& alpha,
                                          size_t budget = 0);

}  // namespace radon
