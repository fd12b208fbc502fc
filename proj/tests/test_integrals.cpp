#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>

#include "radon/hgf_series.hpp"
#include "radon/identities.hpp"
#include "radon/integrals.hpp"
#include "radon/random_objects.hpp"
#include "radon/special.hpp"

using namespace radon;

namespace {

constexpr double kPi = std::numbers::pi;

// classical 2F1 by direct term recursion
double classical_2f1(double a, double b, double c, double x) {
  double term = 1.0, sum = 1.0;
  for (int k = 0; k < 2000 && std::abs(term) > 1e-18; ++k) {
    term *= (a + k) * (b + k) / ((c + k) * (k + 1.0)) * x;
    sum += term;
  }
  return sum;
}

double classical_1f1(double a, double c, double x) {
  double term = 1.0, sum = 1.0;
  for (int k = 0; k < 2000 && std::abs(term) > 1e-18; ++k) {
    term *= (a + k) / ((c + k) * (k + 1.0)) * x;
    sum += term;
  }
  return sum;
}

double classical_beta(double x, double y) { return std::tgamma(x) * std::tgamma(y) / std::tgamma(x + y); }

Complex logdet_eigen(const CMat& m) { return std::log(m.determinant()); }

CMat random_pd_in_box(std::mt19937_64& g, size_t r) {
  std::uniform_real_distribution<double> u(0.1, 0.9);
  const CMat v = sample_haar_unitary(r, g);
  CMat d = CMat::Zero(r, r);
  for (size_t i = 0; i < r; ++i) d(i, i) = u(g);
  return v * d * v.adjoint();
}

double sum_w(const Rule1D& rule, int k) {
  double s = 0.0;
  for (size_t i = 0; i < rule.size(); ++i) s += rule.weights[i] * std::pow(rule.nodes[i], k);
  return s;
}

}  // namespace

TEST_CASE("haar unitary") {
  std::mt19937_64 g(61);
  for (size_t r = 1; r <= 4; ++r) {
    const CMat u = sample_haar_unitary(r, g);
    CHECK((u * u.adjoint() - CMat::Identity(r, r)).norm() < 1e-12);
  }
  const size_t n = 100000;
  Complex mean = 0.0;
  for (size_t k = 0; k < n; ++k) mean += sample_haar_unitary(1, g)(0, 0);
  mean /= static_cast<double>(n);
  // |U| = 1, so each component has variance 1/2
  CHECK(std::abs(mean) < 3.0 * std::sqrt(0.5 / n) * std::sqrt(2.0));
  for (size_t r = 2; r <= 3; ++r) {
    const size_t m = 20000;
    double s = 0.0, s2 = 0.0;
    for (size_t k = 0; k < m; ++k) {
      const double v = std::norm(sample_haar_unitary(r, g)(0, r - 1));
      s += v;
      s2 += v * v;
    }
    const double mu = s / m, se = std::sqrt((s2 / m - mu * mu) / m);
    CHECK(std::abs(mu - 1.0 / r) < 3.0 * se);
  }
}

TEST_CASE("herm matrix and domains") {
  CMat m(2, 2);
  m << 1.0, Complex(0, 1), Complex(0, 1), 2.0;
  CHECK_THROWS(HermMatrix(m));
  const HermMatrix h = HermMatrix::diag({0.3, -0.2});
  CHECK(h.eigenvalues() == std::vector<double>{-0.2, 0.3});
  CHECK(Domain{DomainTag::FullSpace}.contains(h));
  CHECK_FALSE(Domain{DomainTag::PositiveCone}.contains(h));
  CHECK(Domain{DomainTag::BetaBox}.contains(HermMatrix::diag({0.3, 0.9})));
  CHECK_FALSE(Domain{DomainTag::BetaBox}.contains(HermMatrix::diag({0.3, 1.1})));
  CHECK(Domain::parse(Domain{DomainTag::PositiveCone}.name()).tag == DomainTag::PositiveCone);
}

TEST_CASE("combine_estimates") {
  IntegralEstimate a, b;
  a.value = 1.0;
  a.std_error = 1.0;
  b.value = 3.0;
  b.std_error = 1.0;
  CHECK(std::abs(combine_estimates(a, b).value - 2.0) < 1e-15);
  a.std_error = 0.0;
  CHECK(combine_estimates(a, b).value == Complex(1.0));
}

TEST_CASE("mc examples") {
  const EigWeight flat{Domain{DomainTag::BetaBox}, 0.0, 0.0, 1.0};
  const auto one = mc_integral([](const CMat&) { return Complex(1.0); }, flat, 1, 20000, 3);
  CHECK(std::abs(one.value - 1.0) <= std::max(3.0 * one.std_error, 1e-12));
  CHECK(one.method == "mc");
  CHECK(one.n_samples == 20000);

  const auto gam = mc_integral([](const CMat& u) { return std::exp(-u.trace()); }, Domain{DomainTag::PositiveCone}, 1,
                               50000, 4);
  // the cone proposal matches e^{-u} exactly here, so the spread can vanish
  CHECK(std::abs(gam.value - 1.0) <= std::max(3.0 * gam.std_error, 1e-12));
  const auto gam2 = mc_integral([](const CMat& u) { return std::exp(-2.0 * u.trace()); },
                                Domain{DomainTag::PositiveCone}, 1, 50000, 4);
  CHECK(gam2.std_error > 0.0);
  CHECK(std::abs(gam2.value - 0.5) < 3.0 * gam2.std_error);

  // r = 1 Gauss integrand with (alpha1, alpha2, alpha3) = (-0.5, 0.4, -0.7)
  const double a1 = -0.5, a2 = 0.4, a3 = -0.7, x = 0.3;
  const EigWeight w{Domain{DomainTag::BetaBox}, a1, a2, 1.0};
  const McMulti mm = mc_integral_multi(
      {[&](const CMat& u) { return std::pow(1.0 - u(0, 0) * x, a3); }, [](const CMat&) { return Complex(1.0); }}, w, 1,
      100000, 5);
  const IntegralEstimate ratio = mm.ratio(0, 1);
  const double oracle = classical_2f1(a1 + 1.0, -a3, a1 + a2 + 2.0, x);
  CHECK(std::abs(ratio.value - oracle) < 3.0 * ratio.std_error);
}

TEST_CASE("eig_quadrature examples") {
  const auto b1 = eig_quadrature([](const std::vector<double>&) { return Complex(1.0); },
                                 EigWeight{Domain{DomainTag::BetaBox}, 1.0, 2.0, 1.0}, 1);
  CHECK(std::abs(b1.value - 1.0 / 12.0) < 1e-12);
  CHECK(b1.std_error == 0.0);
  const auto unit = [](const std::vector<double>&) { return Complex(1.0); };
  for (size_t r = 2; r <= 3; ++r) {
    const double a = 2.3, b = 3.1, rr = static_cast<double>(r);
    const auto f = eig_quadrature(unit, EigWeight{Domain{DomainTag::BetaBox}, a - rr, b - rr, 1.0}, r);
    const auto g = eig_quadrature(unit, EigWeight{Domain{DomainTag::BetaBox}, b - rr, a - rr, 1.0}, r);
    CHECK(std::abs(f.value / g.value - 1.0) < 1e-8);
  }
  const double a = 3.5;
  const auto g1 = eig_quadrature(unit, EigWeight{Domain{DomainTag::PositiveCone}, a + 1.0 - 2.0, 0.0, 1.0}, 2);
  const auto g0 = eig_quadrature(unit, EigWeight{Domain{DomainTag::PositiveCone}, a - 2.0, 0.0, 1.0}, 2);
  CHECK(std::abs(g1.value / g0.value - a * (a - 1.0)) < 1e-8 * a * a);
  CHECK_THROWS(eig_quadrature(unit, EigWeight{}, 4));
}

TEST_CASE("gamma_r") {
  CHECK(std::abs(gamma_r(5.0, 1) - 24.0) < 1e-10);
  const double a = 3.5, ap = 2.5;
  const Complex ratio = gamma_r(a, 2) / gamma_r(ap, 2);
  CHECK(std::abs(ratio - std::tgamma(a) * std::tgamma(a - 1) / (std::tgamma(ap) * std::tgamma(ap - 1))) < 1e-8);
  // eigenvalue-reduction oracle for the same ratio
  const auto unit = [](const std::vector<double>&) { return Complex(1.0); };
  const auto qa = eig_quadrature(unit, EigWeight{Domain{DomainTag::PositiveCone}, a - 2.0, 0.0, 1.0}, 2);
  const auto qb = eig_quadrature(unit, EigWeight{Domain{DomainTag::PositiveCone}, ap - 2.0, 0.0, 1.0}, 2);
  CHECK(std::abs(ratio - qa.value / qb.value) < 1e-8);
  for (size_t r = 1; r <= 3; ++r) CHECK(!gamma_r_calibration(r).provenance.empty());
  CHECK_THROWS(gamma_r(0.5, 2));
}

TEST_CASE("prefactor symmetry and the parameter bridge") {
  for (size_t r = 1; r <= 3; ++r) {
    const PartitionSpec s(r, {1, 1, 1, 1});
    const double rr = static_cast<double>(r);
    const CharacterParams al{s, {{-2.0 * rr - 0.5}, {-0.3}, {0.7}, {0.1}}, 2 * r};
    const HGFParams h = hgf_params_from_alpha(al);
    CHECK(std::abs(h.a - (al.alpha[1][0] + rr)) < 1e-14);
    CHECK(std::abs(h.b + al.alpha[3][0]) < 1e-14);
    CHECK(std::abs(h.c - (al.alpha[1][0] + al.alpha[2][0] + 2.0 * rr)) < 1e-14);
    // swapping alpha1 and alpha2 sends a to c - a
    CharacterParams sw = al;
    std::swap(sw.alpha[1], sw.alpha[2]);
    const HGFParams hs = hgf_params_from_alpha(sw);
    CHECK(std::abs(hgf_prefactor(h.a, h.c, r) - hgf_prefactor(hs.a, hs.c, r)) <
          1e-12 * std::abs(hgf_prefactor(h.a, h.c, r)));
    const CharacterParams back = alpha_from_hgf(h, r);
    for (size_t j = 1; j < 4; ++j) CHECK(std::abs(back.alpha[j][0] - al.alpha[j][0]) < 1e-12);
  }
  const PartitionSpec k(2, {2, 1, 1});
  const CharacterParams ak{k, {{-3.1, 1.0}, {0.4}, {-1.3}}, 4};
  const HGFParams hk = hgf_params_from_alpha(ak);
  CHECK_FALSE(hk.gauss);
  CHECK(std::abs(hk.a - (0.4 + 2.0)) < 1e-14);
  CHECK(std::abs(hk.c - (0.4 - 1.3 + 4.0)) < 1e-14);
}

TEST_CASE("radon_integrand rows") {
  std::mt19937_64 g(62);
  const size_t r = 2;
  const CMat I = CMat::Identity(r, r);
  const CMat x = random_pd_in_box(g, r) * 0.5;
  const CMat u = random_pd_in_box(g, r);
  {
    const PartitionSpec s(r, {4});
    const auto f = radon_integrand(s, x, CharacterParams{s, {{-4.0, 0.0, 0.0, 1.0}}, 2});
    CHECK(std::abs(f.log_f(u) - (u * x - u * u * u / 3.0).trace()) < 1e-12);
    CHECK(std::abs(f(u) - std::exp((u * x - u * u * u / 3.0).trace())) < 1e-12);
  }
  {
    const PartitionSpec s(r, {2, 1});
    const double a2 = 0.35;
    const auto f = radon_integrand(s, CMat(), CharacterParams{s, {{-2.0 - a2, -1.0}, {a2}}, 2});
    CHECK(std::abs(f.log_f(u) - (-u.trace() + a2 * logdet_eigen(u))) < 1e-12);
  }
  {
    const PartitionSpec s(r, {1, 1, 1});
    const double a1 = -0.4, a2 = 0.9;
    const auto f = radon_integrand(s, CMat(), CharacterParams{s, {{-2.0 - a1 - a2}, {a1}, {a2}}, 2});
    CHECK(std::abs(f.log_f(u) - (a1 * logdet_eigen(u) + a2 * logdet_eigen(I - u))) < 1e-12);
  }
  {
    const PartitionSpec s(r, {2, 2});
    const auto f = radon_integrand(s, -I, CharacterParams{s, {{-2.0, 1.0}, {0.25, 1.0}}, 2});
    CHECK(std::abs(f.log_f(u) - ((-u - u.inverse()).trace() + 0.25 * logdet_eigen(u))) < 1e-12);
  }
  CHECK_THROWS(radon_integrand(PartitionSpec(r, {1, 1}), x, CharacterParams{PartitionSpec(r, {1, 1}), {{0.0}, {0.0}}, 2}));
}

TEST_CASE("integrand covariance") {
  ExactRng rng(63);
  const PartitionSpec s(2, {1, 1, 1, 1});
  const CharacterParams al{s, {{-2.6}, {0.3}, {-0.9}, {-0.8}}, 4};
  const ZMatrix z = table_normal_form(s, random_generic_x(rng, 2));
  CHECK(covariance_check_integrand(s, z, ExactH::identity(s), al) == 0.0);
  const std::vector<Rational> sc = {Rational(2), Rational(1, 3), Rational(5, 2), Rational(7)};
  ExactH h = ExactH::identity(s);
  for (size_t j = 0; j < 4; ++j) h.factors[j].coeffs[0] = ExactMatrix::scalar(2, sc[j]);
  Complex closed = 0.0;
  for (size_t j = 0; j < 4; ++j) closed += 2.0 * al.alpha[j][0] * std::log(sc[j].get_d());
  CHECK(std::abs(log_character(h, al).value - closed) < 1e-12);
  CHECK(covariance_check_integrand(s, z, h, al) <= 1e-10);

  const PartitionSpec k(2, {2, 1, 1});
  const CharacterParams ak{k, {{-2.7, 1.3}, {0.2}, {-1.5}}, 4};
  ExactH u = ExactH::identity(k);
  u.factors[0].coeffs[1] = random_matrix(rng, 2, 2);
  const ZMatrix zk = table_normal_form(k, random_generic_x(rng, 2));
  CHECK(covariance_check_integrand(k, zk, u, ak) <= 1e-10);
  // log chi of a pure first-order shift is alpha_1 Tr theta_1
  CHECK(std::abs(log_character(u, ak).value - 1.3 * u.factors[0].coeffs[1].trace().get_d()) < 1e-12);

  ExactH bad = ExactH::identity(k);
  bad.factors[1].coeffs[0] = ExactMatrix::scalar(2, Rational(-1));
  CHECK_THROWS(covariance_check_integrand(k, zk, bad, ak));
}

TEST_CASE("schur polynomials and combinatorics") {
  CHECK(hook_product({2, 1}) == 3.0);
  CHECK(hook_product({3, 2}) == 24.0);
  CHECK(hook_product({}) == 1.0);
  const Complex a(1.7, 0.2);
  CHECK(std::abs(gen_pochhammer(a, {2, 1}) - a * (a + 1.0) * (a - 1.0)) < 1e-13);
  CHECK(partitions_of(4, 2).size() == 3);
  CHECK(partitions_of(5, 5).size() == 7);
  CHECK(partitions_of(0, 3).size() == 1);

  // bialternant oracle: det(x_i^{k_j + r - j}) / det(x_i^{r - j})
  const std::vector<Complex> x = {0.3, -0.45, 0.8};
  const size_t r = 3;
  for (size_t w = 0; w <= 6; ++w) {
    for (const auto& kap : partitions_of(w, r)) {
      CMat num(r, r), den(r, r);
      for (size_t i = 0; i < r; ++i)
        for (size_t j = 0; j < r; ++j) {
          const size_t kj = j < kap.size() ? kap[j] : 0;
          num(i, j) = std::pow(x[i], static_cast<double>(kj + r - 1 - j));
          den(i, j) = std::pow(x[i], static_cast<double>(r - 1 - j));
        }
      CHECK(std::abs(schur_poly(kap, x) - num.determinant() / den.determinant()) < 1e-12);
    }
  }
}

TEST_CASE("hypergeometric series") {
  for (size_t r = 1; r <= 3; ++r) {
    std::vector<double> zero(r, 0.0);
    CHECK(hgf_series_2F1(0.3, 0.7, 1.9, HermMatrix::diag(zero), 20).value == Complex(1.0));
    CHECK(hgf_series_1F1(0.3, 1.9, HermMatrix::diag(zero), 20).value == Complex(1.0));
  }
  const auto g = hgf_series_2F1(1.0, 1.0, 2.0, HermMatrix::diag({0.5}), 200);
  CHECK(std::abs(g.value - 2.0 * std::log(2.0)) < 1e-10);
  CHECK(std::abs(g.value - 1.3862944) < 1e-6);
  const auto k = hgf_series_1F1(1.0, 2.0, HermMatrix::diag({1.0}), 200);
  CHECK(std::abs(k.value - (std::exp(1.0) - 1.0)) < 1e-12);
  CHECK(std::abs(k.value - 1.7182818) < 1e-6);
  CHECK(std::abs(hgf_series_2F1(0.5, 0.7, 1.9, HermMatrix::diag({0.3}), 200).value -
                 classical_2f1(0.5, 0.7, 1.9, 0.3)) < 1e-12);
  CHECK(std::abs(hgf_series_1F1(0.9, 2.2, HermMatrix::diag({-0.4}), 200).value - classical_1f1(0.9, 2.2, -0.4)) <
        1e-12);

  // spectrum-preserving conjugation leaves the series unchanged
  std::mt19937_64 gen(64);
  const CMat v = sample_haar_unitary(2, gen);
  CMat d = CMat::Zero(2, 2);
  d(0, 0) = 0.1;
  d(1, 1) = 0.2;
  const auto s1 = hgf_series_2F1(0.8, 1.1, 2.4, HermMatrix::diag({0.1, 0.2}), 20);
  const auto s2 = hgf_series_2F1(0.8, 1.1, 2.4, HermMatrix(v * d * v.adjoint()), 20);
  CHECK(std::abs(s1.value - s2.value) < 1e-12);

  // r = 2, X = diag(0.1, 0.2) against the integral normalized by the Gamma_2 prefactor
  const double a = 1.6, b = 0.7, c = 3.9;
  const EigWeight w{Domain{DomainTag::BetaBox}, a - 2.0, c - a - 2.0, 1.0};
  const auto with_x = matrix_quadrature(
      [&](const CMat& u) { return std::pow((CMat::Identity(2, 2) - u * d).determinant(), -b); }, w, 2, 30);
  const auto at_zero = eig_quadrature([](const std::vector<double>&) { return Complex(1.0); }, w, 2, 30);
  const auto series = hgf_series_2F1(a, b, c, HermMatrix::diag({0.1, 0.2}), 20);
  CHECK(std::abs(with_x.value / at_zero.value - series.value) < 1e-3);
  CHECK(std::abs(hgf_prefactor(a, c, 2) * with_x.value - series.value) < 1e-3);
}

TEST_CASE("identity checks at X = 0 and at r = 1") {
  IdentityBudget bud;
  bud.trunc = 20;
  const auto p0 = check_pfaff(0.5, 0.7, 1.9, HermMatrix::diag({0.0, 0.0}), bud);
  CHECK(p0.residual == 0.0);
  CHECK(std::abs(p0.lhs - 1.0) < 1e-15);
  CHECK(check_kummer(0.9, 2.2, HermMatrix::diag({0.0}), bud).residual == 0.0);
  for (const auto& rep : check_conjecture(0.5, 0.7, 1.9, HermMatrix::diag({0.0, 0.0}), bud)) {
    CHECK(rep.residual == 0.0);
    CHECK(rep.conjecture);
  }

  bud.trunc = 200;
  const auto p1 = check_pfaff(0.5, 0.7, 1.9, HermMatrix::diag({0.3}), bud);
  CHECK(p1.residual <= 1e-8);
  CHECK(std::abs(p1.lhs - classical_2f1(0.5, 0.7, 1.9, 0.3)) < 1e-10);
  // scalar Pfaff right side computed directly
  const double rhs = std::pow(0.7, -0.7) * classical_2f1(1.9 - 0.5, 0.7, 1.9, 0.3 / (0.3 - 1.0));
  CHECK(std::abs(p1.rhs - rhs) < 1e-10);

  const auto k1 = check_kummer(1.0, 2.0, HermMatrix::diag({1.0}), bud);
  CHECK(k1.residual <= 1e-10);
  CHECK(std::abs(k1.lhs - (std::exp(1.0) - 1.0)) < 1e-10);
  CHECK(std::abs(k1.rhs - std::exp(1.0) * (1.0 - std::exp(-1.0))) < 1e-10);

  // scalar Euler and the other Pfaff form
  const double a = 0.5, b = 0.7, c = 1.9, x = 0.3;
  const auto conj = check_conjecture(a, b, c, HermMatrix::diag({x}), bud);
  REQUIRE(conj.size() == 2);
  CHECK(std::abs(conj[0].rhs - std::pow(1 - x, -a) * classical_2f1(a, c - b, c, x / (x - 1))) < 1e-10);
  CHECK(std::abs(conj[1].rhs - std::pow(1 - x, c - a - b) * classical_2f1(c - a, c - b, c, x)) < 1e-10);
  for (const auto& rep : conj) CHECK(rep.residual <= 1e-8);
}

TEST_CASE("truncation residual shrinks") {
  IdentityBudget bud;
  bud.trunc = 20;
  const auto rep = check_kummer(0.9, 2.2, HermMatrix::diag({0.4, -0.3}), bud);
  CHECK(rep.residual <= 1e-3);
  REQUIRE(rep.trunc_residuals.size() >= 2);
  CHECK(rep.trunc_residuals.back() <= rep.trunc_residuals.front());
}

TEST_CASE("beta symmetry") {
  for (size_t r = 1; r <= 3; ++r) CHECK(check_beta_symmetry(2.3, 3.1, r).residual <= 1e-8);
  CHECK(std::abs(check_beta_symmetry(2.3, 3.1, 1).forward - classical_beta(2.3, 3.1)) < 1e-10);
}

TEST_CASE("bessel, hermite and airy points") {
  const PartitionSpec s4(1, {4});
  const auto airy = bessel_hermite_airy_eval(s4, CMat::Zero(1, 1), CharacterParams{s4, {{-2.0, 0.0, 0.0, 1.0}}, 2});
  const double ai0 = 1.0 / (std::pow(3.0, 2.0 / 3.0) * std::tgamma(2.0 / 3.0));
  CHECK(std::abs(airy.value - 2.0 * kPi * ai0) < 1e-6);
  CHECK(std::abs(airy_ai_series(0.0) - ai0) < 1e-14);

  const PartitionSpec s31(1, {3, 1});
  const auto herm = bessel_hermite_airy_eval(s31, CMat::Zero(1, 1), CharacterParams{s31, {{-2.0, 0.0, 1.0}, {0.0}}, 2});
  CHECK(std::abs(herm.value - std::sqrt(2.0 * kPi)) < 1e-6);

  // int_0^inf exp(-u - 1/u) du with u = e^v, trapezoid in v
  double bessel_oracle = 0.0;
  const double hv = 1e-3;
  for (double v = -30.0; v <= 30.0; v += hv) bessel_oracle += std::exp(v - std::exp(v) - std::exp(-v)) * hv;
  const PartitionSpec s22(1, {2, 2});
  const auto bessel =
      bessel_hermite_airy_eval(s22, CMat::Constant(1, 1, -1.0), CharacterParams{s22, {{-2.0, 1.0}, {0.0, 1.0}}, 2});
  CHECK(std::abs(bessel.value - bessel_oracle) < 1e-6);
  CHECK(std::abs(bessel_oracle - 2.0 * std::cyl_bessel_k(1.0, 2.0)) < 1e-9);

  CHECK_THROWS(bessel_hermite_airy_eval(PartitionSpec(2, {4}), CMat::Zero(2, 2),
                                        CharacterParams{PartitionSpec(2, {4}), {{-4.0, 0.0, 0.0, 1.0}}, 4}));
}

TEST_CASE("special functions") {
  for (double x : {0.3, 1.0, 2.5, 7.2}) CHECK(std::abs(gamma_c(x).real() - std::tgamma(x)) < 1e-12 * std::tgamma(x));
  CHECK(std::abs(gamma_c(-0.5).real() - std::tgamma(-0.5)) < 1e-12);
  CHECK(std::abs(beta_fn(2.3, 3.1) - classical_beta(2.3, 3.1)) < 1e-13);
  CHECK(std::abs(beta_fn(-0.5, 1.3) - classical_beta(-0.5, 1.3)) < 1e-12);
  // tabulated Ai(1)
  CHECK(std::abs(airy_ai_series(1.0) - 0.1352924163128814) < 1e-12);
}

TEST_CASE("quadrature rules") {
  const Rule1D j = gauss_jacobi01(12, 0.5, 1.5);
  for (int k = 0; k <= 6; ++k) CHECK(std::abs(sum_w(j, k) - classical_beta(1.5 + k, 2.5)) < 1e-13);
  const Rule1D l = gauss_laguerre(12, 0.3, 2.0);
  for (int k = 0; k <= 6; ++k)
    CHECK(std::abs(sum_w(l, k) - std::tgamma(1.3 + k) / std::pow(2.0, 1.3 + k)) < 1e-11 * std::tgamma(1.3 + k));
  const Rule1D h = gauss_hermite(10);
  CHECK(std::abs(sum_w(h, 0) - std::sqrt(2 * kPi)) < 1e-12);
  CHECK(std::abs(sum_w(h, 2) - std::sqrt(2 * kPi)) < 1e-12);
  CHECK(std::abs(sum_w(h, 4) - 3.0 * std::sqrt(2 * kPi)) < 1e-11);
  const Rule1D g = gauss_legendre(5, -1.0, 2.0);
  CHECK(std::abs(sum_w(g, 3) - (16.0 - 1.0) / 4.0) < 1e-13);
  const Rule1D e = exp_trapezoid(-40.0, 5.0, 4000);
  double s = 0.0;
  for (size_t i = 0; i < e.size(); ++i) s += e.weights[i] * std::exp(-e.nodes[i]);
  CHECK(std::abs(s - 1.0) < 1e-9);
}

TEST_CASE("finite-part rule continues the beta integral") {
  for (double sv : {-1.5, -1.2, 0.4}) {
    for (double tv : {-1.7, 0.3}) {
      const Rule1D rule = beta_box_rule(30, sv, tv);
      for (int k = 0; k <= 3; ++k) CHECK(std::abs(sum_w(rule, k) - classical_beta(sv + 1 + k, tv + 1)) < 1e-10);
    }
  }
}
