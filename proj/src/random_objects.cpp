#include "radon/random_objects.hpp"

#include <algorithm>

namespace radon {

size_t ExactRng::uniform(size_t lo, size_t hi) {
  std::uniform_int_distribution<size_t> d(lo, hi);
  return d(g_);
}

Rational ExactRng::rational(long maxnum, long maxden) {
  std::uniform_int_distribution<long> num(-maxnum, maxnum), den(1, maxden);
  const long p = num(g_);
  const long q = den(g_);
  Rational x(p, q);
  x.canonicalize();
  return x;
}

Rational ExactRng::nonzero_rational(long maxnum, long maxden) {
  Rational x;
  do x = rational(maxnum, maxden);
  while (sgn(x) == 0);
  return x;
}

ExactMatrix random_matrix(ExactRng& rng, size_t rows, size_t cols) {
  ExactMatrix m(rows, cols);
  for (size_t i = 0; i < rows; ++i)
    for (size_t j = 0; j < cols; ++j) m(i, j) = rng.rational();
  return m;
}

ExactMatrix random_invertible(ExactRng& rng, size_t n) {
  ExactMatrix m;
  do m = random_matrix(rng, n, n);
  while (sgn(det(m)) == 0);
  return m;
}

ExactJet random_jet(ExactRng& rng, size_t r, size_t p, bool unipotent) {
  std::vector<ExactMatrix> c;
  c.push_back(unipotent ? ExactMatrix::identity(r) : random_invertible(rng, r));
  for (size_t k = 1; k < p; ++k) c.push_back(random_matrix(rng, r, r));
  return ExactJet(r, p, std::move(c));
}

ExactH random_h(ExactRng& rng, const PartitionSpec& spec, bool unipotent) {
  ExactH h{spec, {}};
  for (size_t p : spec.parts) h.factors.push_back(random_jet(rng, spec.r, p, unipotent));
  return h;
}

Permutation random_perm(ExactRng& rng, size_t n) {
  Permutation p = perm_identity(n);
  for (size_t i = n; i > 1; --i) std::swap(p[i - 1], p[rng.uniform(0, i - 1)]);
  return p;
}

MuVector<Rational> random_mu(ExactRng& rng, size_t p) {
  MuVector<Rational> m;
  m.p = p;
  for (size_t k = 1; k < p; ++k) m.c.push_back(k == 1 ? rng.nonzero_rational() : rng.rational());
  return m;
}

ExactWeyl random_weyl(ExactRng& rng, const PartitionSpec& spec) {
  ExactWeyl w = ExactWeyl::identity(spec);
  const auto mult = spec.multiplicities();
  for (size_t i = 0; i < mult.size(); ++i) {
    for (auto& m : w.mus[i]) m = random_mu(rng, mult[i].first);
    w.sigma[i] = random_perm(rng, mult[i].second);
  }
  return w;
}

ZMatrix random_z(ExactRng& rng, const PartitionSpec& spec) {
  while (true) {
    ZMatrix z{spec, random_matrix(rng, 2 * spec.r, spec.N())};
    if (z_membership(z).ok) return z;
  }
}

ExactMatrix random_generic_x(ExactRng& rng, size_t r) {
  const ExactMatrix I = ExactMatrix::identity(r);
  while (true) {
    ExactMatrix x = random_matrix(rng, r, r);
    if (sgn(det(x)) != 0 && sgn(det(ExactMatrix(I - x))) != 0) return x;
  }
}

}  // namespace radon
