#include "radon/matrix.hpp"

#include <cmath>
#include <utility>

namespace radon {

namespace {

using IntRow = std::vector<mpz_class>;

// rows of a scaled to integers; scale[i] * a(i, .) is integral
std::vector<IntRow> integer_rows(const ExactMatrix& a, std::vector<mpz_class>& scale) {
  std::vector<IntRow> m(a.rows(), IntRow(a.cols()));
  scale.assign(a.rows(), mpz_class(1));
  for (size_t i = 0; i < a.rows(); ++i) {
    mpz_class l = 1;
    for (size_t j = 0; j < a.cols(); ++j) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), a(i, j).get_den_mpz_t());
    scale[i] = l;
    for (size_t j = 0; j < a.cols(); ++j) m[i][j] = a(i, j).get_num() * (l / a(i, j).get_den());
  }
  return m;
}

// Bareiss Gauss-Jordan on [m | extra]; on success left block becomes d*I.
// Returns false when m is singular.
bool bareiss_jordan(std::vector<IntRow>& m, size_t n, int& sign, mpz_class& d) {
  const size_t width = m.empty() ? 0 : m[0].size();
  mpz_class prev = 1;
  sign = 1;
  for (size_t k = 0; k < n; ++k) {
    size_t piv = k;
    while (piv < n && m[piv][k] == 0) ++piv;
    if (piv == n) return false;
    if (piv != k) {
      std::swap(m[piv], m[k]);
      sign = -sign;
    }
    const mpz_class pk = m[k][k];
    for (size_t i = 0; i < n; ++i) {
      if (i == k) continue;
      const mpz_class aik = m[i][k];
      for (size_t j = 0; j < width; ++j) {
        if (j == k) continue;
        mpz_class t = pk * m[i][j] - aik * m[k][j];
        mpz_divexact(m[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      m[i][k] = 0;
    }
    prev = pk;
  }
  d = prev;
  return true;
}

}  // namespace

Rational det(const ExactMatrix& a) {
  if (!a.square()) throw DimensionError("det of non-square matrix");
  const size_t n = a.rows();
  if (n == 0) return Rational(1);
  std::vector<mpz_class> scale;
  auto m = integer_rows(a, scale);
  // plain Bareiss (upper triangular) is enough for det
  mpz_class prev = 1;
  int sign = 1;
  for (size_t k = 0; k + 1 < n; ++k) {
    size_t piv = k;
    while (piv < n && m[piv][k] == 0) ++piv;
    if (piv == n) return Rational(0);
    if (piv != k) {
      std::swap(m[piv], m[k]);
      sign = -sign;
    }
    for (size_t i = k + 1; i < n; ++i) {
      for (size_t j = k + 1; j < n; ++j) {
        mpz_class t = m[k][k] * m[i][j] - m[i][k] * m[k][j];
        mpz_divexact(m[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      m[i][k] = 0;
    }
    prev = m[k][k];
  }
  mpz_class s = 1;
  for (auto& x : scale) s *= x;
  Rational out(m[n - 1][n - 1] * sign, s);
  out.canonicalize();
  return out;
}

ExactMatrix inverse(const ExactMatrix& a) {
  if (!a.square()) throw DimensionError("inverse of non-square matrix");
  const size_t n = a.rows();
  std::vector<mpz_class> scale;
  auto m = integer_rows(a, scale);
  for (size_t i = 0; i < n; ++i) {
    m[i].resize(2 * n, mpz_class(0));
    m[i][n + i] = 1;
  }
  int sign = 1;
  mpz_class d;
  if (!bareiss_jordan(m, n, sign, d)) throw SingularMatrix("matrix is singular");
  // m = [d I | d M^{-1}], M = S a  =>  a^{-1} = M^{-1} S
  ExactMatrix out(n, n);
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) {
      Rational q(m[i][n + j] * scale[j], d);
      q.canonicalize();
      out(i, j) = q;
    }
  return out;
}

Complex det(const ComplexMatrix& a) {
  if (!a.square()) throw DimensionError("det of non-square matrix");
  const size_t n = a.rows();
  ComplexMatrix m = a;
  Complex d = 1.0;
  for (size_t k = 0; k < n; ++k) {
    size_t piv = k;
    double best = std::abs(m(k, k));
    for (size_t i = k + 1; i < n; ++i)
      if (std::abs(m(i, k)) > best) {
        best = std::abs(m(i, k));
        piv = i;
      }
    if (best == 0.0) return 0.0;
    if (piv != k) {
      for (size_t j = 0; j < n; ++j) std::swap(m(k, j), m(piv, j));
      d = -d;
    }
    d *= m(k, k);
    for (size_t i = k + 1; i < n; ++i) {
      Complex f = m(i, k) / m(k, k);
      for (size_t j = k; j < n; ++j) m(i, j) -= f * m(k, j);
    }
  }
  return d;
}

ComplexMatrix inverse(const ComplexMatrix& a) {
  if (!a.square()) throw DimensionError("inverse of non-square matrix");
  const size_t n = a.rows();
  ComplexMatrix m = a;
  ComplexMatrix inv = ComplexMatrix::identity(n);
  for (size_t k = 0; k < n; ++k) {
    size_t piv = k;
    double best = std::abs(m(k, k));
    for (size_t i = k + 1; i < n; ++i)
      if (std::abs(m(i, k)) > best) {
        best = std::abs(m(i, k));
        piv = i;
      }
    if (best == 0.0) throw SingularMatrix("matrix is singular");
    if (piv != k)
      for (size_t j = 0; j < n; ++j) {
        std::swap(m(k, j), m(piv, j));
        std::swap(inv(k, j), inv(piv, j));
      }
    Complex p = m(k, k);
    for (size_t j = 0; j < n; ++j) {
      m(k, j) /= p;
      inv(k, j) /= p;
    }
    for (size_t i = 0; i < n; ++i) {
      if (i == k) continue;
      Complex f = m(i, k);
      if (f == Complex(0.0, 0.0)) continue;
      for (size_t j = 0; j < n; ++j) {
        m(i, j) -= f * m(k, j);
        inv(i, j) -= f * inv(k, j);
      }
    }
  }
  return inv;
}

namespace {

// reduced row echelon form over Q; returns pivot columns
std::vector<size_t> rref(ExactMatrix& m) {
  std::vector<size_t> pivots;
  size_t row = 0;
  for (size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    size_t piv = row;
    while (piv < m.rows() && sgn(m(piv, col)) == 0) ++piv;
    if (piv == m.rows()) continue;
    if (piv != row)
      for (size_t j = 0; j < m.cols(); ++j) std::swap(m(row, j), m(piv, j));
    Rational p = m(row, col);
    for (size_t j = 0; j < m.cols(); ++j) m(row, j) /= p;
    for (size_t i = 0; i < m.rows(); ++i) {
      if (i == row || sgn(m(i, col)) == 0) continue;
      Rational f = m(i, col);
      for (size_t j = 0; j < m.cols(); ++j) m(i, j) -= f * m(row, j);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

}  // namespace

std::vector<ExactMatrix> nullspace(const ExactMatrix& a) {
  ExactMatrix m = a;
  auto pivots = rref(m);
  std::vector<bool> is_piv(a.cols(), false);
  for (auto c : pivots) is_piv[c] = true;
  std::vector<ExactMatrix> basis;
  for (size_t f = 0; f < a.cols(); ++f) {
    if (is_piv[f]) continue;
    ExactMatrix v(a.cols(), 1);
    v(f, 0) = 1;
    for (size_t k = 0; k < pivots.size(); ++k) v(pivots[k], 0) = -m(k, f);
    basis.push_back(v);
  }
  return basis;
}

size_t rank(const ExactMatrix& a) {
  ExactMatrix m = a;
  return rref(m).size();
}

ComplexMatrix to_complex(const ExactMatrix& a) {
  ComplexMatrix out(a.rows(), a.cols());
  for (size_t i = 0; i < a.rows(); ++i)
    for (size_t j = 0; j < a.cols(); ++j) out(i, j) = radon::to_complex(a(i, j));
  return out;
}

}  // namespace radon
