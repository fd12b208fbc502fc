#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "radon/random_objects.hpp"

using namespace radon;

namespace {

Rational q(long p, long d = 1) {
  Rational x(p, d);
  x.canonicalize();
  return x;
}

MuVector<Rational> muv(std::vector<Rational> c) {
  MuVector<Rational> m;
  m.p = c.size() + 1;
  m.c = std::move(c);
  return m;
}

// oracle: coefficients of (c1 T + ... )^i mod T^p by repeated polynomial product
std::vector<Rational> poly_power(const MuVector<Rational>& m, size_t i) {
  std::vector<Rational> acc(m.p, q(0));
  acc[0] = 1;
  for (size_t k = 0; k < i; ++k) {
    std::vector<Rational> next(m.p, q(0));
    for (size_t a = 0; a < m.p; ++a)
      for (size_t b = 1; a + b < m.p; ++b) next[a + b] += acc[a] * m.c[b - 1];
    acc = next;
  }
  return acc;
}

// oracle: a(b(T)) mod T^p
MuVector<Rational> substitute(const MuVector<Rational>& a, const MuVector<Rational>& b) {
  MuVector<Rational> out = MuVector<Rational>::identity(a.p);
  std::vector<Rational> sum(a.p, q(0));
  for (size_t i = 1; i < a.p; ++i) {
    const auto pw = poly_power(b, i);
    for (size_t j = 0; j < a.p; ++j) sum[j] += a.c[i - 1] * pw[j];
  }
  for (size_t j = 1; j < a.p; ++j) out.c[j - 1] = sum[j];
  return out;
}

}  // namespace

TEST_CASE("mu_eval examples") {
  ExactRng rng(31);
  for (int k = 0; k < 20; ++k) {
    const size_t p = rng.uniform(2, 8);
    const auto c = random_mu(rng, p);
    CHECK(mu_eval(0, 0, c) == 1);
    for (size_t j = 1; j < p; ++j) CHECK(sgn(mu_eval(0, j, c)) == 0);
    Rational c1pow = 1;
    for (size_t i = 0; i < p; ++i) {
      CHECK(mu_eval(i, i, c) == c1pow);
      c1pow *= c.c[0];
    }
    for (size_t j = 1; j < p; ++j) CHECK(mu_eval(1, j, c) == c.c[j - 1]);
    for (size_t i = 0; i < p; ++i) {
      const auto pw = poly_power(c, i);
      for (size_t j = 0; j < p; ++j) CHECK(mu_eval(i, j, c) == pw[j]);
    }
    // (n-2) c1^{n-3} c2
    if (p >= 3) {
      Rational expect = static_cast<long>(p - 2);
      for (size_t e = 0; e + 3 < p; ++e) expect *= c.c[0];
      expect *= c.c[1];
      CHECK(mu_eval(p - 2, p - 1, c) == expect);
    }
  }
  CHECK(mu_eval(2, 3, muv({q(1), q(2), q(0), q(0)})) == 4);
  CHECK_THROWS(mu_eval(5, 1, muv({q(1), q(0)})));
}

TEST_CASE("mu_compose and mu_inverse") {
  const auto b = muv({q(3), q(-2), q(5)});
  CHECK(mu_compose(MuVector<Rational>::identity(4), b) == b);
  CHECK(mu_compose(muv({q(2)}), muv({q(7)})) == muv({q(14)}));
  const Rational x1 = q(2, 3), x2 = q(-5), y1 = q(7), y2 = q(1, 4);
  CHECK(mu_compose(muv({x1, x2}), muv({y1, y2})) == muv({x1 * y1, x1 * y2 + x2 * y1 * y1}));
  CHECK(mu_inverse(MuVector<Rational>::identity(5)) == MuVector<Rational>::identity(5));
  const Rational c1 = q(3, 2), c2 = q(-4, 5);
  CHECK(mu_inverse(muv({c1, c2})) == muv({1 / c1, -c2 / (c1 * c1 * c1)}));
  ExactRng rng(32);
  for (int k = 0; k < 30; ++k) {
    const size_t p = rng.uniform(1, 8);
    const auto a = random_mu(rng, p), c = random_mu(rng, p);
    CHECK(mu_compose(a, c) == substitute(a, c));
    CHECK(mu_compose(a, mu_inverse(a)) == MuVector<Rational>::identity(p));
    CHECK(mu_compose(mu_inverse(a), a) == MuVector<Rational>::identity(p));
    CHECK(mu_matrix(a) * mu_matrix(c) == mu_matrix(mu_compose(a, c)));
  }
}

TEST_CASE("weyl_matrix") {
  const PartitionSpec s3(1, {3});
  CHECK(weyl_matrix(ExactWeyl::identity(PartitionSpec(2, {2, 1}))) == ExactMatrix::identity(6));
  ExactWeyl w = ExactWeyl::identity(s3);
  const Rational c1 = q(2, 3), c2 = q(-7);
  w.mus[0][0] = muv({c1, c2});
  CHECK(weyl_matrix(w) == ExactMatrix(3, 3, {q(1), q(0), q(0), q(0), c1, c2, q(0), q(0), c1 * c1}));
  ExactRng rng(33);
  for (int k = 0; k < 20; ++k) {
    const PartitionSpec s(rng.uniform(1, 2), k % 2 ? std::vector<size_t>{2, 2, 1} : std::vector<size_t>{3, 1, 1});
    const ExactWeyl a = random_weyl(rng, s), b = random_weyl(rng, s);
    CHECK(weyl_matrix(weyl_mul(a, b)) == weyl_matrix(a) * weyl_matrix(b));
    CHECK(weyl_mul(a, weyl_inverse(a)) == ExactWeyl::identity(s));
    CHECK(rho(weyl_mul(a, b)) == rho(a) * rho(b));
  }
}

TEST_CASE("normalizer_test") {
  ExactRng rng(34);
  for (int k = 0; k < 15; ++k) {
    const PartitionSpec s(rng.uniform(1, 2), k % 3 ? std::vector<size_t>{2, 1} : std::vector<size_t>{2, 2});
    CHECK(normalizer_test(embed_h(random_h(rng, s, false)), s));
    CHECK(normalizer_test(weyl_matrix(random_weyl(rng, s)), s));
  }
  CHECK_FALSE(normalizer_test(ExactMatrix(2, 2, {q(1), q(0), q(1), q(1)}), PartitionSpec(1, {2})));
  CHECK_THROWS(normalizer_test(ExactMatrix(2, 2), PartitionSpec(1, {2})));
}

TEST_CASE("normalizer_decompose") {
  const PartitionSpec s(1, {2});
  const Decomposition d = normalizer_decompose(ExactMatrix(2, 2, {q(2), q(3), q(0), q(10)}), s);
  CHECK(d.h.factors[0] == ExactJet(1, 2, {ExactMatrix::scalar(1, q(2)), ExactMatrix::scalar(1, q(3, 5))}));
  CHECK(d.w.mus[0][0] == muv({q(5)}));
  CHECK_THROWS_AS(normalizer_decompose(ExactMatrix(2, 2, {q(1), q(0), q(1), q(1)}), s), NotNormalizer);

  // (1,...,1): block monomial matrices, diag times P_sigma
  ExactRng rng(35);
  const PartitionSpec ones(2, {1, 1, 1});
  for (int k = 0; k < 10; ++k) {
    const ExactH h = random_h(rng, ones, false);
    const Permutation sg = random_perm(rng, 3);
    const ExactMatrix x = embed_h(h) * perm_block_matrix<Rational>(sg, 2);
    const Decomposition dd = normalizer_decompose(x, ones);
    CHECK(dd.w.sigma[0] == sg);
    CHECK(dd.h.factors == h.factors);
  }
}

TEST_CASE("rho") {
  const PartitionSpec s(2, {2, 2, 2});
  CHECK(rho(ExactWeyl::identity(s)) == ExactMatrix::identity(6));
  ExactWeyl w = ExactWeyl::identity(s);
  w.sigma[0] = {1, 2, 0};
  CHECK(rho(w) == perm_block_matrix<Rational>(w.sigma[0], 2));
}

TEST_CASE("act_on_params") {
  const PartitionSpec s4(1, {1, 1, 1, 1});
  ExactParams a{s4, {{q(-5, 2)}, {q(1, 3)}, {q(2, 7)}, {q(-1, 9)}}, 2};
  CHECK(act_on_params(a, ExactWeyl::identity(s4)).alpha == a.alpha);
  ExactWeyl t = ExactWeyl::identity(s4);
  t.sigma[0] = transposition(4, 0, 1);
  CHECK(act_on_params(a, t).alpha == std::vector<std::vector<Rational>>{{q(1, 3)}, {q(-5, 2)}, {q(2, 7)}, {q(-1, 9)}});

  const PartitionSpec s3(1, {3});
  ExactParams b{s3, {{q(-2), q(3, 2), q(5)}}, 2};
  ExactWeyl w = ExactWeyl::identity(s3);
  w.mus[0][0] = muv({q(2), q(-1, 3)});
  const auto beta = act_on_params(b, w).alpha[0];
  for (size_t i = 0; i < 3; ++i) {
    Rational expect = 0;
    for (size_t j = 0; j < 3; ++j) expect += b.alpha[0][j] * mu_eval(i, j, w.mus[0][0]);
    CHECK(beta[i] == expect);
  }
}

TEST_CASE("normalize_params") {
  const PartitionSpec s3(1, {3});
  const CharacterParams a{s3, {{-2.0, 2.0, 3.0}}, 2};
  const NormalizeResult r = normalize_params(a);
  const Complex c1 = r.w.mus[0][0].c[0], c2 = r.w.mus[0][0].c[1];
  CHECK(std::abs(c1 - 1.0 / std::sqrt(3.0)) < 1e-14);
  CHECK(std::abs(c2 + 2.0 / (3.0 * std::sqrt(3.0))) < 1e-14);
  const CharacterParams b = act_on_params(a, r.w);
  CHECK(std::abs(b.alpha[0][0] + 2.0) < 1e-12);
  CHECK(std::abs(b.alpha[0][1]) < 1e-12);
  CHECK(std::abs(b.alpha[0][2] - 1.0) < 1e-12);

  const PartitionSpec s1(2, {1, 1, 1, 1});
  const CharacterParams ones{s1, {{-1.5}, {0.5}, {-2.5}, {-0.5}}, 4};
  CHECK(normalize_params(ones).beta.alpha == ones.alpha);

  for (size_t r4 = 1; r4 <= 3; ++r4) {
    const PartitionSpec s(r4, {4});
    const CharacterParams p{s, {{-2.0 * r4, 0.7, -1.1, 0.3}}, 2 * r4};
    const CharacterParams beta = act_on_params(p, normalize_params(p).w);
    CHECK(std::abs(beta.alpha[0][0] + 2.0 * r4) < 1e-12);
    CHECK(std::abs(beta.alpha[0][1]) < 1e-12);
    CHECK(std::abs(beta.alpha[0][2]) < 1e-12);
    CHECK(std::abs(beta.alpha[0][3] - 1.0) < 1e-12);
  }
}

TEST_CASE("normalize_params_exact") {
  const PartitionSpec s(1, {4});
  // top coefficient 8 = (1/2)^{-3}
  const ExactParams a{s, {{q(-2), q(3, 4), q(-1, 5), q(8)}}, 2};
  const ExactNormalizeResult r = normalize_params_exact(a);
  CHECK(r.beta.alpha[0] == std::vector<Rational>{q(-2), q(0), q(0), q(1)});
  CHECK(r.w.mus[0][0].c[0] == q(1, 2));
  const ExactParams irr{s, {{q(-2), q(0), q(0), q(2)}}, 2};
  CHECK_THROWS_AS(normalize_params_exact(irr), std::domain_error);
}

TEST_CASE("right_action transports Xi") {
  ExactRng rng(36);
  for (int k = 0; k < 20; ++k) {
    const PartitionSpec s(rng.uniform(1, 2), k % 2 ? std::vector<size_t>{3, 3} : std::vector<size_t>{4, 2, 2});
    const ExactH h = random_h(rng, s, true);
    const ExactWeyl w = random_weyl(rng, s);
    CHECK(xi_matrix(right_action(h, w)) == xi_matrix(h) * weyl_matrix(w));
  }
}
