#include <string>

#include "radon/weyl.hpp"

namespace radon {

namespace {

[[noreturn]] void fail(const std::string& check) { throw NotNormalizer("normalizer_decompose: check failed: " + check); }

bool is_scalar_block(const ExactMatrix& b, Rational& s) {
  s = b(0, 0);
  return b == ExactMatrix::scalar(b.rows(), s);
}

// Y in N(J_r(n)); returns (h, c) with Y = embed(h) * (mu(c) x 1_r)
std::pair<ExactJet, MuVector<Rational>> decompose_factor(const ExactMatrix& y, size_t r, size_t n) {
  // step 2: h0 from the similarity B0 = h0 D h0^{-1}
  ExactJet probe(r, n);
  ExactMatrix d(r, r);
  for (size_t i = 0; i < r; ++i) d(i, i) = static_cast<long>(i + 1);
  probe.coeffs[0] = d;
  if (n > 1) probe.coeffs[1] = ExactMatrix::identity(r);
  ExactMatrix b = y * embed_jet(probe) * inverse(y);
  if (!is_block_toeplitz_upper(b, r)) fail("probe conjugate not in J_r(n)");
  ExactMatrix b0 = block_get(b, r, 0, 0);
  ExactMatrix ev(r, r);
  for (size_t k = 0; k < r; ++k) {
    ExactMatrix shifted = b0 - ExactMatrix::scalar(r, Rational(static_cast<long>(k + 1)));
    auto ker = nullspace(shifted);
    if (ker.size() != 1) fail("eigenspace of probe leading block");
    ev.set_sub(0, k, ker[0]);
  }
  ExactMatrix y1 = embed_jet(ExactJet::constant(inverse(ev), n)) * y;
  // block upper triangular with diagonal diagonal blocks
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) {
      ExactMatrix blk = block_get(y1, r, i, j);
      if (j < i && !blk.is_zero()) fail("block upper triangular after probe");
      if (j == i)
        for (size_t s = 0; s < r; ++s)
          for (size_t t = 0; t < r; ++t)
            if (s != t && sgn(blk(s, t)) != 0) fail("diagonal blocks after probe");
    }
  // step 3: normalize the (0,0) block, then clear block row 0
  ExactMatrix h1 = block_get(y1, r, 0, 0);
  ExactMatrix y2 = embed_jet(ExactJet::constant(inverse(h1), n)) * y1;
  ExactJet g = ExactJet::identity(r, n);
  for (size_t j = 1; j < n; ++j) {
    ExactMatrix s = block_get(y2, r, 0, j);
    for (size_t i = 1; i < j; ++i) s += g.coeffs[i] * block_get(y2, r, i, j);
    ExactMatrix djj = block_get(y2, r, j, j);
    if (sgn(det(djj)) == 0) fail("singular diagonal block");
    g.coeffs[j] = -(s * inverse(djj));
  }
  ExactMatrix z = embed_jet(g) * y2;
  // step 4: c from block row 1
  MuVector<Rational> c = MuVector<Rational>::identity(n);
  for (size_t j = 1; j < n; ++j) {
    Rational s;
    if (!is_scalar_block(block_get(z, r, 1, j), s)) fail("scalar blocks in row 1");
    c.c[j - 1] = s;
  }
  if (!c.is_group_element()) fail("c_1 != 0");
  if (z != mu_matrix(c).kron_identity(r)) fail("mu pattern");
  ExactJet h = jet_mul(ExactJet::constant(ExactMatrix(ev * h1), n), jet_inv(g));
  return {h, c};
}

}  // namespace

Decomposition normalizer_decompose(const ExactMatrix& x, const PartitionSpec& spec) {
  if (!normalizer_test(x, spec)) fail("Lie criterion");
  const size_t r = spec.r;
  const size_t l = spec.length();
  // step 1: permutation from the eigenvalues of a Jordan-cell probe
  ExactH probe = ExactH::identity(spec);
  for (size_t k = 0; k < l; ++k) {
    probe.factors[k].coeffs[0] = ExactMatrix::scalar(r, Rational(static_cast<long>(k + 1)));
    if (spec.parts[k] > 1) probe.factors[k].coeffs[1] = ExactMatrix::identity(r);
  }
  ExactMatrix b = x * embed_h(probe) * inverse(x);
  std::vector<size_t> source(l);  // source[j] = k with sigma(k) = j
  for (size_t j = 0; j < l; ++j) {
    Rational a;
    const size_t off = spec.factor_offset(j) * r;
    if (!is_scalar_block(b.sub(off, off, r, r), a)) fail("probe leading block not scalar");
    if (a.get_den() != 1 || a < 1 || a > static_cast<long>(l)) fail("probe eigenvalue match");
    size_t k = static_cast<size_t>(a.get_num().get_ui()) - 1;
    if (spec.parts[k] != spec.parts[j]) fail("cell sizes");
    source[j] = k;
  }
  Decomposition out{ExactH::identity(spec), ExactWeyl::identity(spec)};
  const auto mult = spec.multiplicities();
  const auto cls = spec.class_offsets();
  for (size_t i = 0; i < mult.size(); ++i) {
    auto [ni, pi] = mult[i];
    for (size_t jj = 0; jj < pi; ++jj) {
      const size_t j = cls[i] + jj;
      const size_t k = source[j];
      out.w.sigma[i][k - cls[i]] = jj;
      // off-permutation blocks must vanish
      for (size_t kk = 0; kk < l; ++kk) {
        ExactMatrix blk =
            x.sub(spec.factor_offset(j) * r, spec.factor_offset(kk) * r, spec.parts[j] * r, spec.parts[kk] * r);
        if (kk != k && !blk.is_zero()) fail("block permutation support");
      }
      ExactMatrix y = x.sub(spec.factor_offset(j) * r, spec.factor_offset(k) * r, ni * r, ni * r);
      auto [h, c] = decompose_factor(y, r, ni);
      out.h.factors[j] = h;
      out.w.mus[i][jj] = c;
    }
    if (!is_permutation(out.w.sigma[i])) fail("permutation");
  }
  if (embed_h(out.h) * weyl_matrix(out.w) != x) fail("reconstruction");
  return out;
}

}  // namespace radon
