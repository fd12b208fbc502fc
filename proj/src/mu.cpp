#include <stdexcept>

#include "radon/weyl.hpp"

namespace radon {

template <class T>
MuVector<T> MuVector<T>::identity(size_t p) {
  MuVector<T> m;
  m.p = p;
  m.c.assign(p > 0 ? p - 1 : 0, ScalarOps<T>::zero());
  if (p >= 2) m.c[0] = ScalarOps<T>::one();
  return m;
}

template <class T>
void MuVector<T>::validate() const {
  if (p == 0) throw std::invalid_argument("mu vector order must be >= 1");
  if (c.size() != p - 1) throw DimensionError("mu vector length != p - 1");
}

namespace {

// coefficients of M(c,T)^i mod T^p for i = 0..p-1
template <class T>
std::vector<std::vector<T>> mu_powers(const MuVector<T>& m) {
  m.validate();
  const size_t p = m.p;
  std::vector<std::vector<T>> pw(p, std::vector<T>(p, ScalarOps<T>::zero()));
  pw[0][0] = ScalarOps<T>::one();
  for (size_t i = 1; i < p; ++i)
    for (size_t a = 0; a < p; ++a) {
      if (ScalarOps<T>::is_zero(pw[i - 1][a])) continue;
      for (size_t b = 1; a + b < p; ++b) pw[i][a + b] += pw[i - 1][a] * m.c[b - 1];
    }
  return pw;
}

}  // namespace

template <class T>
T mu_eval(size_t i, size_t j, const MuVector<T>& c) {
  if (i >= c.p || j >= c.p) throw std::out_of_range("mu_eval index out of range");
  return mu_powers(c)[i][j];
}

template <class T>
Matrix<T> mu_matrix(const MuVector<T>& c) {
  auto pw = mu_powers(c);
  Matrix<T> m(c.p, c.p);
  for (size_t i = 0; i < c.p; ++i)
    for (size_t j = 0; j < c.p; ++j) m(i, j) = pw[i][j];
  return m;
}

template <class T>
MuVector<T> mu_compose(const MuVector<T>& a, const MuVector<T>& b) {
  a.validate();
  b.validate();
  if (a.p != b.p) throw DimensionError("mu_compose: order mismatch");
  if (!a.is_group_element() || !b.is_group_element()) throw std::invalid_argument("mu_compose: c_1 = 0");
  auto pw = mu_powers(b);
  MuVector<T> z;
  z.p = a.p;
  z.c.assign(a.p - 1, ScalarOps<T>::zero());
  for (size_t j = 1; j < a.p; ++j)
    for (size_t k = 1; k <= j; ++k) z.c[j - 1] += a.c[k - 1] * pw[k][j];
  return z;
}

template <class T>
MuVector<T> mu_inverse(const MuVector<T>& a) {
  a.validate();
  if (!a.is_group_element()) throw std::invalid_argument("mu_inverse: c_1 = 0");
  const size_t p = a.p;
  MuVector<T> b;
  b.p = p;
  b.c.assign(p - 1, ScalarOps<T>::zero());
  if (p < 2) return b;
  b.c[0] = ScalarOps<T>::one() / a.c[0];
  for (size_t j = 2; j < p; ++j) {
    // mu_{k,j}(b) for k >= 2 only involves b_1..b_{j-1}; b_j is still zero here
    auto pw = mu_powers(b);
    T s = ScalarOps<T>::zero();
    for (size_t k = 2; k <= j; ++k) s += a.c[k - 1] * pw[k][j];
    b.c[j - 1] = -s / a.c[0];
  }
  return b;
}

#define RADON_MU_INST(T)                                                  \
  template struct MuVector<T>;                                            \
  template T mu_eval(size_t, size_t, const MuVector<T>&);                 \
  template Matrix<T> mu_matrix(const MuVector<T>&);                       \
  template MuVector<T> mu_compose(const MuVector<T>&, const MuVector<T>&); \
  template MuVector<T> mu_inverse(const MuVector<T>&);

RADON_MU_INST(Rational)
RADON_MU_INST(Complex)

}  // namespace radon
