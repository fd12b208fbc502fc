#include <cmath>

#include "radon/weyl.hpp"

namespace radon {

template <class T>
WeylElement<T> WeylElement<T>::identity(const PartitionSpec& spec) {
  WeylElement<T> w;
  w.spec = spec;
  for (auto [ni, pi] : spec.multiplicities()) {
    w.mus.emplace_back(pi, MuVector<T>::identity(ni));
    w.sigma.push_back(perm_identity(pi));
  }
  return w;
}

template <class T>
void WeylElement<T>::validate() const {
  auto mult = spec.multiplicities();
  if (mus.size() != mult.size() || sigma.size() != mult.size()) throw DimensionError("weyl element: class count");
  for (size_t i = 0; i < mult.size(); ++i) {
    auto [ni, pi] = mult[i];
    if (mus[i].size() != pi || sigma[i].size() != pi) throw DimensionError("weyl element: multiplicity mismatch");
    if (!is_permutation(sigma[i])) throw std::invalid_argument("weyl element: sigma is not a permutation");
    for (const auto& m : mus[i]) {
      if (m.p != ni) throw DimensionError("weyl element: mu order != part size");
      m.validate();
      if (!m.is_group_element()) throw std::invalid_argument("weyl element: c_1 = 0");
    }
  }
}

namespace {

template <class T>
Matrix<T> weyl_matrix_r(const WeylElement<T>& w, size_t r) {
  w.validate();
  const auto mult = w.spec.multiplicities();
  Matrix<T> out(w.spec.n() * r, w.spec.n() * r);
  size_t off = 0;
  for (size_t i = 0; i < mult.size(); ++i) {
    auto [ni, pi] = mult[i];
    const size_t b = ni * r;
    Matrix<T> d(pi * b, pi * b);
    for (size_t k = 0; k < pi; ++k) d.set_sub(k * b, k * b, mu_matrix(w.mus[i][k]).kron_identity(r));
    out.set_sub(off, off, d * perm_block_matrix<T>(w.sigma[i], b));
    off += pi * b;
  }
  return out;
}

}  // namespace

template <class T>
Matrix<T> weyl_matrix(const WeylElement<T>& w) {
  return weyl_matrix_r(w, w.spec.r);
}

template <class T>
Matrix<T> rho(const WeylElement<T>& w) {
  return weyl_matrix_r(w, 1);
}

template <class T>
WeylElement<T> weyl_mul(const WeylElement<T>& a, const WeylElement<T>& b) {
  a.validate();
  b.validate();
  if (a.spec != b.spec) throw DimensionError("weyl_mul: spec mismatch");
  // P_s diag(Y) = diag(Y_{s^-1(j)}) P_s
  WeylElement<T> out = a;
  for (size_t i = 0; i < a.mus.size(); ++i) {
    Permutation sinv = perm_inverse(a.sigma[i]);
    for (size_t j = 0; j < a.mus[i].size(); ++j) out.mus[i][j] = mu_compose(a.mus[i][j], b.mus[i][sinv[j]]);
    out.sigma[i] = perm_compose(a.sigma[i], b.sigma[i]);
  }
  return out;
}

template <class T>
WeylElement<T> weyl_inverse(const WeylElement<T>& a) {
  a.validate();
  WeylElement<T> out = a;
  for (size_t i = 0; i < a.mus.size(); ++i) {
    for (size_t j = 0; j < a.mus[i].size(); ++j) out.mus[i][j] = mu_inverse(a.mus[i][a.sigma[i][j]]);
    out.sigma[i] = perm_inverse(a.sigma[i]);
  }
  return out;
}

template <class T>
CharacterParamsT<T> act_on_params(const CharacterParamsT<T>& alpha, const WeylElement<T>& w) {
  alpha.validate();
  if (alpha.spec.parts != w.spec.parts) throw DimensionError("act_on_params: spec mismatch");
  Matrix<T> g = rho(w);
  std::vector<T> flat;
  for (const auto& blk : alpha.alpha) flat.insert(flat.end(), blk.begin(), blk.end());
  const size_t n = flat.size();
  std::vector<T> beta(n, ScalarOps<T>::zero());
  for (size_t a = 0; a < n; ++a)
    for (size_t b = 0; b < n; ++b)
      if (!ScalarOps<T>::is_zero(g(a, b))) beta[a] += flat[b] * g(a, b);
  CharacterParamsT<T> out = alpha;
  size_t pos = 0;
  for (auto& blk : out.alpha)
    for (auto& v : blk) v = beta[pos++];
  return out;
}

NormalizeResult normalize_params(const CharacterParams& alpha) {
  alpha.validate();
  NormalizeResult res{alpha, ComplexWeyl::identity(alpha.spec)};
  const auto mult = alpha.spec.multiplicities();
  size_t k = 0;
  for (size_t i = 0; i < mult.size(); ++i) {
    auto [n, pi] = mult[i];
    for (size_t m = 0; m < pi; ++m, ++k) {
      if (n < 2) continue;
      const auto& a = alpha.alpha[k];
      const Complex top = a[n - 1];
      if (top == Complex(0.0, 0.0)) throw std::invalid_argument("normalize_params: vanishing top coefficient");
      MuVector<Complex> c;
      c.p = n;
      c.c.assign(n - 1, Complex(0.0, 0.0));
      c.c[0] = std::pow(Complex(1.0, 0.0) / top, 1.0 / static_cast<double>(n - 1));
      for (size_t row = n - 2; row >= 1; --row) {
        const size_t unknown = n - row;  // c_{n-row}
        Complex b0 = 0.0;
        for (size_t j = row; j < n; ++j) b0 += a[j] * mu_eval(row, j, c);
        Complex lead = static_cast<double>(row) * std::pow(c.c[0], static_cast<double>(row - 1)) * top;
        c.c[unknown - 1] = -b0 / lead;
      }
      res.w.mus[i][m] = c;
      auto& b = res.beta.alpha[k];
      for (size_t j = 1; j + 1 < n; ++j) b[j] = Complex(0.0, 0.0);
      b[n - 1] = Complex(1.0, 0.0);
    }
  }
  return res;
}

namespace {

// exact k-th root of a rational, if there is one
bool rational_root(const Rational& q, unsigned long k, Rational& out) {
  mpz_class num, den;
  if (k % 2 == 0 && sgn(q) < 0) return false;
  if (mpz_root(num.get_mpz_t(), q.get_num_mpz_t(), k) == 0) return false;
  if (mpz_root(den.get_mpz_t(), q.get_den_mpz_t(), k) == 0) return false;
  out = Rational(num, den);
  out.canonicalize();
  return true;
}

}  // namespace

ExactNormalizeResult normalize_params_exact(const ExactParams& alpha) {
  alpha.validate();
  ExactNormalizeResult res{alpha, ExactWeyl::identity(alpha.spec)};
  const auto mult = alpha.spec.multiplicities();
  size_t k = 0;
  for (size_t i = 0; i < mult.size(); ++i) {
    auto [n, pi] = mult[i];
    for (size_t m = 0; m < pi; ++m, ++k) {
      if (n < 2) continue;
      const auto& a = alpha.alpha[k];
      const Rational top = a[n - 1];
      if (sgn(top) == 0) throw std::invalid_argument("normalize_params_exact: vanishing top coefficient");
      MuVector<Rational> c;
      c.p = n;
      c.c.assign(n - 1, Rational(0));
      if (!rational_root(Rational(1 / top), n - 1, c.c[0]))
        throw std::domain_error("normalize_params_exact: irrational root of the top coefficient");
      for (size_t row = n - 2; row >= 1; --row) {
        Rational b0 = 0;
        for (size_t j = row; j < n; ++j) b0 += a[j] * mu_eval(row, j, c);
        Rational cpow = 1;
        for (size_t e = 1; e < row; ++e) cpow *= c.c[0];
        c.c[n - row - 1] = -b0 / (Rational(static_cast<long>(row)) * cpow * top);
      }
      res.w.mus[i][m] = c;
    }
  }
  res.beta = act_on_params(alpha, res.w);
  return res;
}

template <class T>
bool in_h_lambda_span(const Matrix<T>& m, const PartitionSpec& spec) {
  const size_t r = spec.r;
  if (m.rows() != spec.N() || m.cols() != spec.N()) return false;
  const size_t l = spec.length();
  for (size_t a = 0; a < l; ++a)
    for (size_t b = 0; b < l; ++b) {
      const size_t ra = spec.factor_offset(a) * r, cb = spec.factor_offset(b) * r;
      Matrix<T> blk = m.sub(ra, cb, spec.parts[a] * r, spec.parts[b] * r);
      if (a != b) {
        if (!blk.is_zero()) return false;
      } else if (!is_block_toeplitz_upper(blk, r)) {
        return false;
      }
    }
  return true;
}

bool normalizer_test(const ExactMatrix& x, const PartitionSpec& spec) {
  if (x.rows() != spec.N() || x.cols() != spec.N()) throw DimensionError("normalizer_test: size != N");
  if (sgn(det(x)) == 0) throw SingularMatrix("normalizer_test: singular matrix");
  const ExactMatrix xinv = inverse(x);
  const size_t r = spec.r;
  for (size_t k = 0; k < spec.length(); ++k) {
    const size_t off = spec.factor_offset(k);
    for (size_t i = 0; i < spec.parts[k]; ++i)
      for (size_t a = 0; a < r; ++a)
        for (size_t b = 0; b < r; ++b) {
          // X E X^{-1} with E = E_ab placed on the i-th block superdiagonal of factor k
          ExactMatrix left(spec.N(), spec.N());
          for (size_t blk = 0; blk + i < spec.parts[k]; ++blk) {
            const size_t row = (off + blk) * r + a, col = (off + blk + i) * r + b;
            for (size_t t = 0; t < spec.N(); ++t) left(t, col) += x(t, row);
          }
          if (!in_h_lambda_span(ExactMatrix(left * xinv), spec)) return false;
        }
  }
  return true;
}

template <class T>
HLambdaElement<T> right_action(const HLambdaElement<T>& h, const WeylElement<T>& w) {
  if (h.spec != w.spec) throw DimensionError("right_action: spec mismatch");
  return iota_inv(Matrix<T>(iota(h) * weyl_matrix(w)), h.spec);
}

#define RADON_WEYL_INST(T)                                                                         \
  template struct WeylElement<T>;                                                                  \
  template Matrix<T> weyl_matrix(const WeylElement<T>&);                                           \
  template Matrix<T> rho(const WeylElement<T>&);                                                   \
  template WeylElement<T> weyl_mul(const WeylElement<T>&, const WeylElement<T>&);                  \
  template WeylElement<T> weyl_inverse(const WeylElement<T>&);                                     \
  template CharacterParamsT<T> act_on_params(const CharacterParamsT<T>&, const WeylElement<T>&);   \
  template bool in_h_lambda_span(const Matrix<T>&, const PartitionSpec&);                          \
  template HLambdaElement<T> right_action(const HLambdaElement<T>&, const WeylElement<T>&);

RADON_WEYL_INST(Rational)
RADON_WEYL_INST(Complex)

}  // namespace radon
