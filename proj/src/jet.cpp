#include "radon/jet.hpp"

namespace radon {

namespace {

template <class T>
void same_shape(const Jet<T>& a, const Jet<T>& b) {
  if (a.r != b.r || a.p != b.p) throw DimensionError("jet shape mismatch");
}

template <class T>
bool invertible(const Matrix<T>& m) {
  return !ScalarOps<T>::is_zero(det(m));
}

}  // namespace

template <class T>
bool Jet<T>::is_unit() const {
  return p > 0 && invertible(coeffs[0]);
}

template <class T>
Jet<T> jet_mul(const Jet<T>& a, const Jet<T>& b) {
  same_shape(a, b);
  Jet<T> out(a.r, a.p);
  for (size_t i = 0; i < a.p; ++i) {
    if (a.coeffs[i].is_zero()) continue;
    for (size_t j = 0; i + j < a.p; ++j) out.coeffs[i + j] += a.coeffs[i] * b.coeffs[j];
  }
  return out;
}

template <class T>
Jet<T> jet_add(const Jet<T>& a, const Jet<T>& b) {
  same_shape(a, b);
  Jet<T> out(a.r, a.p);
  for (size_t i = 0; i < a.p; ++i) out.coeffs[i] = a.coeffs[i] + b.coeffs[i];
  return out;
}

template <class T>
Jet<T> jet_inv(const Jet<T>& a) {
  if (a.p == 0) throw DimensionError("empty jet");
  if (!invertible(a.coeffs[0])) throw SingularMatrix("jet leading coefficient is singular");
  Matrix<T> a0inv = inverse(a.coeffs[0]);
  Jet<T> x(a.r, a.p);
  x.coeffs[0] = a0inv;
  for (size_t k = 1; k < a.p; ++k) {
    Matrix<T> s(a.r, a.r);
    for (size_t i = 1; i <= k; ++i) s += a.coeffs[i] * x.coeffs[k - i];
    x.coeffs[k] = -(a0inv * s);
  }
  return x;
}

template <class T>
Jet<T> jet_log(const Jet<T>& h) {
  if (!h.is_unipotent()) throw std::invalid_argument("jet_log needs a unipotent jet");
  Jet<T> nil = h;
  nil.coeffs[0] = Matrix<T>(h.r, h.r);
  Jet<T> out(h.r, h.p);
  Jet<T> power = nil;
  for (size_t k = 1; k < h.p; ++k) {
    T coef = ScalarOps<T>::from_ratio(k % 2 == 1 ? 1 : -1, static_cast<long>(k));
    for (size_t i = 0; i < h.p; ++i) out.coeffs[i] += power.coeffs[i].scaled(coef);
    power = jet_mul(power, nil);
  }
  return out;
}

template <class T>
Jet<T> jet_exp(const Jet<T>& x) {
  if (x.p == 0) throw DimensionError("empty jet");
  if (!x.coeffs[0].is_zero()) throw std::invalid_argument("jet_exp needs zero constant term");
  Jet<T> out = Jet<T>::identity(x.r, x.p);
  Jet<T> power = Jet<T>::identity(x.r, x.p);
  long fact = 1;
  for (size_t k = 1; k < x.p; ++k) {
    power = jet_mul(power, x);
    fact *= static_cast<long>(k);
    T coef = ScalarOps<T>::from_ratio(1, fact);
    for (size_t i = 0; i < x.p; ++i) out.coeffs[i] += power.coeffs[i].scaled(coef);
  }
  return out;
}

template <class T>
Matrix<T> embed_jet(const Jet<T>& h) {
  h.validate();
  Matrix<T> m(h.p * h.r, h.p * h.r);
  for (size_t i = 0; i < h.p; ++i)
    for (size_t j = i; j < h.p; ++j) m.set_sub(i * h.r, j * h.r, h.coeffs[j - i]);
  return m;
}

template <class T>
bool is_block_toeplitz_upper(const Matrix<T>& m, size_t r) {
  if (!m.square() || r == 0 || m.rows() % r != 0) return false;
  const size_t p = m.rows() / r;
  for (size_t i = 0; i < p; ++i)
    for (size_t j = 0; j < p; ++j) {
      Matrix<T> b = block_get(m, r, i, j);
      if (j < i) {
        if (!b.is_zero()) return false;
      } else if (b != block_get(m, r, 0, j - i)) {
        return false;
      }
    }
  return true;
}

template <class T>
Jet<T> extract_jet(const Matrix<T>& m, size_t r) {
  if (!is_block_toeplitz_upper(m, r)) throw std::invalid_argument("matrix is not block upper-triangular Toeplitz");
  const size_t p = m.rows() / r;
  Jet<T> h(r, p);
  for (size_t j = 0; j < p; ++j) h.coeffs[j] = block_get(m, r, 0, j);
  return h;
}

#define RADON_JET_INST(T)                                                   \
  template struct Jet<T>;                                                   \
  template Jet<T> jet_mul(const Jet<T>&, const Jet<T>&);                    \
  template Jet<T> jet_add(const Jet<T>&, const Jet<T>&);                    \
  template Jet<T> jet_inv(const Jet<T>&);                                   \
  template Jet<T> jet_log(const Jet<T>&);                                   \
  template Jet<T> jet_exp(const Jet<T>&);                                   \
  template Matrix<T> embed_jet(const Jet<T>&);                              \
  template Jet<T> extract_jet(const Matrix<T>&, size_t);                    \
  template bool is_block_toeplitz_upper(const Matrix<T>&, size_t);

RADON_JET_INST(Rational)
RADON_JET_INST(Complex)

}  // namespace radon
