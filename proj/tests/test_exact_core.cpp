#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "radon/random_objects.hpp"

using namespace radon;

namespace {

Rational q(long p, long d = 1) {
  Rational x(p, d);
  x.canonicalize();
  return x;
}

ExactJet scalar_jet(std::vector<Rational> c) {
  std::vector<ExactMatrix> m;
  for (auto& v : c) m.push_back(ExactMatrix::scalar(1, v));
  return ExactJet(1, m.size(), m);
}

// oracle: truncated convolution written out directly
ExactJet convolve(const ExactJet& a, const ExactJet& b) {
  ExactJet out(a.r, a.p);
  for (size_t i = 0; i < a.p; ++i)
    for (size_t j = 0; i + j < a.p; ++j) out.coeffs[i + j] += a.coeffs[i] * b.coeffs[j];
  return out;
}

// oracle: sum_k (-1)^{k+1} N^k / k on the embedded nilpotent part
ExactMatrix log_series(const ExactMatrix& m) {
  const size_t n = m.rows();
  const ExactMatrix N = m - ExactMatrix::identity(n);
  ExactMatrix out(n, n), pw = ExactMatrix::identity(n);
  for (size_t k = 1; k <= n; ++k) {
    pw = pw * N;
    out += pw.scaled(Rational((k % 2 ? 1 : -1), static_cast<long>(k)));
  }
  return out;
}

ExactMatrix exp_series(const ExactMatrix& x) {
  const size_t n = x.rows();
  ExactMatrix out = ExactMatrix::identity(n), pw = ExactMatrix::identity(n);
  Rational fact = 1;
  for (size_t k = 1; k <= n; ++k) {
    pw = pw * x;
    fact *= static_cast<long>(k);
    out += pw.scaled(Rational(1) / fact);
  }
  return out;
}

}  // namespace

TEST_CASE("rational parsing and formatting") {
  CHECK(parse_rational("3/6") == q(1, 2));
  CHECK(parse_rational("-1.25") == q(-5, 4));
  CHECK(parse_rational("7") == q(7));
  CHECK(format_rational(q(-4, 6)) == "-2/3");
  CHECK(format_rational(q(4, 2)) == "2");
  CHECK_THROWS(parse_rational("1/0"));
  CHECK_THROWS(parse_rational("abc"));
}

TEST_CASE("scalar refuses mixed exact and complex arithmetic") {
  Scalar a(q(1, 3)), b(Complex(1.0, 2.0));
  CHECK((a + a).rational() == q(2, 3));
  CHECK_THROWS_AS(a + b, TypeMismatch);
  CHECK_THROWS_AS(a.complex(), TypeMismatch);
}

TEST_CASE("exact determinant, inverse, rank and nullspace") {
  ExactMatrix m(3, 3, {q(2), q(1), q(0), q(1), q(3), q(1), q(0), q(1), q(4)});
  // cofactor expansion by hand: 2(12-1) - 1(4-0) = 18
  CHECK(det(m) == q(18));
  CHECK(m * inverse(m) == ExactMatrix::identity(3));
  ExactMatrix s(2, 3, {q(1), q(2), q(3), q(2), q(4), q(6)});
  CHECK(rank(s) == 1);
  const auto ns = nullspace(s);
  CHECK(ns.size() == 2);
  for (const auto& v : ns) CHECK((s * v).is_zero());
  CHECK_THROWS(inverse(ExactMatrix(2, 2, {q(1), q(2), q(2), q(4)})));
}

TEST_CASE("jet_mul examples") {
  CHECK(jet_mul(ExactJet::identity(2, 2), ExactJet::identity(2, 2)) == ExactJet::identity(2, 2));
  CHECK(jet_mul(scalar_jet({q(2), q(3)}), scalar_jet({q(5), q(7)})) == scalar_jet({q(10), q(29)}));
  CHECK(jet_mul(scalar_jet({q(1), q(1), q(0)}), scalar_jet({q(1), q(-1), q(1)})) == scalar_jet({q(1), q(0), q(0)}));
  CHECK_THROWS(jet_mul(scalar_jet({q(1), q(1)}), scalar_jet({q(1), q(1), q(1)})));
}

TEST_CASE("jet_mul matches convolution and embed is a homomorphism") {
  ExactRng rng(11);
  for (int k = 0; k < 30; ++k) {
    const size_t r = rng.uniform(1, 3), p = rng.uniform(1, 5);
    const ExactJet a = random_jet(rng, r, p, false), b = random_jet(rng, r, p, false);
    const ExactJet ab = jet_mul(a, b);
    CHECK(ab == convolve(a, b));
    CHECK(embed_jet(ab) == embed_jet(a) * embed_jet(b));
    CHECK(extract_jet(embed_jet(ab), r) == ab);
  }
}

TEST_CASE("jet_inv examples") {
  CHECK(jet_inv(ExactJet::identity(2, 3)) == ExactJet::identity(2, 3));
  CHECK(jet_inv(scalar_jet({q(2), q(3)})) == scalar_jet({q(1, 2), q(-3, 4)}));
  ExactRng rng(12);
  for (int k = 0; k < 20; ++k) {
    const ExactJet a = random_jet(rng, 2, 3, false);
    CHECK(jet_mul(a, jet_inv(a)) == ExactJet::identity(2, 3));
    CHECK(jet_mul(jet_inv(a), a) == ExactJet::identity(2, 3));
  }
  CHECK_THROWS(jet_inv(scalar_jet({q(0), q(1)})));
}

TEST_CASE("jet_log and jet_exp") {
  CHECK(jet_log(ExactJet::identity(2, 4)) == ExactJet(2, 4));
  CHECK(jet_exp(ExactJet(2, 4)) == ExactJet::identity(2, 4));
  CHECK(jet_exp(scalar_jet({q(0), q(1), q(0)})) == scalar_jet({q(1), q(1), q(1, 2)}));
  ExactRng rng(13);
  for (int k = 0; k < 25; ++k) {
    const size_t r = rng.uniform(1, 3), p = rng.uniform(2, 6);
    const ExactJet h = random_jet(rng, r, p, true);
    const ExactJet lg = jet_log(h);
    CHECK(embed_jet(lg) == log_series(embed_jet(h)));
    CHECK(jet_exp(lg) == h);
    ExactJet x = random_jet(rng, r, p, false);
    x.coeffs[0] = ExactMatrix(r, r);
    CHECK(embed_jet(jet_exp(x)) == exp_series(embed_jet(x)));
    CHECK(jet_log(jet_exp(x)) == x);
  }
}

TEST_CASE("embed_jet shape") {
  const ExactJet h = scalar_jet({q(2), q(3), q(5)});
  CHECK(embed_jet(h) == ExactMatrix(3, 3, {q(2), q(3), q(5), q(0), q(2), q(3), q(0), q(0), q(2)}));
  CHECK(embed_jet(ExactJet::identity(2, 3)) == ExactMatrix::identity(6));
  CHECK(is_block_toeplitz_upper(embed_jet(h), 1));
  CHECK_FALSE(is_block_toeplitz_upper(ExactMatrix(2, 2, {q(1), q(0), q(1), q(1)}), 1));
}

TEST_CASE("perm_block_matrix") {
  CHECK(perm_block_matrix<Rational>(perm_identity(3), 2) == ExactMatrix::identity(6));
  // images (1,2,3) -> (2,3,1), one based
  const Permutation s = {1, 2, 0};
  const ExactMatrix I = ExactMatrix::identity(2);
  ExactMatrix expect(6, 6);
  expect.set_sub(0, 4, I);
  expect.set_sub(2, 0, I);
  expect.set_sub(4, 2, I);
  CHECK(perm_block_matrix<Rational>(s, 2) == expect);
  ExactRng rng(14);
  for (int k = 0; k < 20; ++k) {
    const size_t n = rng.uniform(1, 5);
    const Permutation a = random_perm(rng, n), b = random_perm(rng, n);
    CHECK(perm_block_matrix<Rational>(a, 2) * perm_block_matrix<Rational>(b, 2) ==
          perm_block_matrix<Rational>(perm_compose(a, b), 2));
    CHECK(perm_compose(a, perm_inverse(a)) == perm_identity(n));
  }
  CHECK_THROWS(perm_block_matrix<Rational>(Permutation{0, 0}, 1));
}

TEST_CASE("cycles and transpositions") {
  CHECK(cycle(4, {0, 1, 2}) == Permutation{1, 2, 0, 3});
  CHECK(transposition(4, 1, 3) == Permutation{0, 3, 2, 1});
  CHECK(perm_compose(transposition(4, 0, 2), transposition(4, 0, 1)) == cycle(4, {0, 1, 2}));
}

TEST_CASE("partition specs") {
  const PartitionSpec s = parse_partition("2,1,1", 3);
  CHECK(s.n() == 4);
  CHECK(s.N() == 12);
  CHECK(s.length() == 3);
  CHECK(s.multiplicities() == std::vector<std::pair<size_t, size_t>>{{2, 1}, {1, 2}});
  CHECK(s.factor_offset(2) == 3);
  CHECK(s.str() == "(2,1,1)");
  CHECK_THROWS(parse_partition("1,2", 1));
  CHECK_THROWS(parse_partition("", 1));
}
