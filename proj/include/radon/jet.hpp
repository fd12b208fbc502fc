#pragma once

#include <vector>

#include "radon/matrix.hpp"

namespace radon {

// h0 + h1 w + ... + h_{p-1} w^{p-1} in Mat(r)[w]/(w^p)
template <class T>
struct Jet {
  size_t r = 0;
  size_t p = 0;
  std::vector<Matrix<T>> coeffs;

  Jet() = default;
  Jet(size_t r_, size_t p_) : r(r_), p(p_), coeffs(p_, Matrix<T>(r_, r_)) {}
  Jet(size_t r_, size_t p_, std::vector<Matrix<T>> c) : r(r_), p(p_), coeffs(std::move(c)) { validate(); }

  static Jet identity(size_t r, size_t p) {
    Jet j(r, p);
    if (p > 0) j.coeffs[0] = Matrix<T>::identity(r);
    return j;
  }
  static Jet constant(const Matrix<T>& h0, size_t p) {
    Jet j(h0.rows(), p);
    if (p > 0) j.coeffs[0] = h0;
    return j;
  }

  void validate() const {
    if (coeffs.size() != p) throw DimensionError("jet coefficient count != p");
    for (const auto& c : coeffs)
      if (c.rows() != r || c.cols() != r) throw DimensionError("jet coefficient is not r x r");
  }
  bool is_unit() const;
  bool is_unipotent() const { return p > 0 && coeffs[0].is_identity(); }
  bool operator==(const Jet& o) const { return r == o.r && p == o.p && coeffs == o.coeffs; }
  bool operator!=(const Jet& o) const { return !(*this == o); }
};

using ExactJet = Jet<Rational>;
using ComplexJet = Jet<Complex>;

template <class T>
Jet<T> jet_mul(const Jet<T>& a, const Jet<T>& b);
template <class T>
Jet<T> jet_add(const Jet<T>& a, const Jet<T>& b);
template <class T>
Jet<T> jet_inv(const Jet<T>& a);
template <class T>
Jet<T> jet_log(const Jet<T>& h);
template <class T>
Jet<T> jet_exp(const Jet<T>& x);
template <class T>
Matrix<T> embed_jet(const Jet<T>& h);
template <class T>
Jet<T> extract_jet(const Matrix<T>& m, size_t r);
template <class T>
bool is_block_toeplitz_upper(const Matrix<T>& m, size_t r);

}  // namespace radon
