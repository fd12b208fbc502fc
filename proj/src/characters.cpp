#include "radon/characters.hpp"

#include <cmath>
#include <sstream>

namespace radon {

template <class T>
HLambdaElement<T> HLambdaElement<T>::identity(const PartitionSpec& spec) {
  HLambdaElement<T> h;
  h.spec = spec;
  for (size_t nk : spec.parts) h.factors.push_back(Jet<T>::identity(spec.r, nk));
  return h;
}

template <class T>
void HLambdaElement<T>::validate() const {
  if (factors.size() != spec.length()) throw DimensionError("factor count != partition length");
  for (size_t k = 0; k < factors.size(); ++k) {
    if (factors[k].r != spec.r || factors[k].p != spec.parts[k]) throw DimensionError("factor shape mismatch");
    factors[k].validate();
  }
}

template <class T>
bool HLambdaElement<T>::is_unipotent() const {
  for (const auto& f : factors)
    if (!f.is_unipotent()) return false;
  return true;
}

template <class T>
HLambdaElement<T> h_mul(const HLambdaElement<T>& a, const HLambdaElement<T>& b) {
  if (a.spec != b.spec) throw DimensionError("spec mismatch");
  HLambdaElement<T> out{a.spec, {}};
  for (size_t k = 0; k < a.factors.size(); ++k) out.factors.push_back(jet_mul(a.factors[k], b.factors[k]));
  return out;
}

template <class T>
HLambdaElement<T> h_inv(const HLambdaElement<T>& a) {
  HLambdaElement<T> out{a.spec, {}};
  for (const auto& f : a.factors) out.factors.push_back(jet_inv(f));
  return out;
}

template <class T>
Matrix<T> embed_h(const HLambdaElement<T>& h) {
  h.validate();
  const size_t r = h.spec.r;
  Matrix<T> m(h.spec.N(), h.spec.N());
  for (size_t k = 0; k < h.factors.size(); ++k) {
    size_t off = h.spec.factor_offset(k) * r;
    m.set_sub(off, off, embed_jet(h.factors[k]));
  }
  return m;
}

template <class T>
Matrix<T> iota(const HLambdaElement<T>& h) {
  h.validate();
  const size_t r = h.spec.r;
  Matrix<T> v(r, h.spec.N());
  for (size_t k = 0; k < h.factors.size(); ++k) {
    size_t off = h.spec.factor_offset(k);
    for (size_t i = 0; i < h.factors[k].p; ++i) v.set_sub(0, (off + i) * r, h.factors[k].coeffs[i]);
  }
  return v;
}

template <class T>
HLambdaElement<T> iota_inv(const Matrix<T>& v, const PartitionSpec& spec) {
  const size_t r = spec.r;
  if (v.rows() != r || v.cols() != spec.N()) throw DimensionError("iota_inv: expected r x N");
  HLambdaElement<T> h{spec, {}};
  for (size_t k = 0; k < spec.length(); ++k) {
    Jet<T> f(r, spec.parts[k]);
    size_t off = spec.factor_offset(k);
    for (size_t i = 0; i < f.p; ++i) f.coeffs[i] = v.sub(0, (off + i) * r, r, r);
    h.factors.push_back(std::move(f));
  }
  return h;
}

template <class T>
void CharacterParamsT<T>::validate() const {
  if (alpha.size() != spec.length()) throw DimensionError("alpha block count != partition length");
  for (size_t k = 0; k < alpha.size(); ++k)
    if (alpha[k].size() != spec.parts[k]) throw DimensionError("alpha block length != part size");
}

template <class T>
std::vector<Matrix<T>> theta_coeffs(const Jet<T>& h) {
  Jet<T> l = jet_log(h);
  return std::vector<Matrix<T>>(l.coeffs.begin() + 1, l.coeffs.end());
}

template <class T>
Jet<T> underline(const Jet<T>& h) {
  if (h.p == 0) throw DimensionError("empty jet");
  if (ScalarOps<T>::is_zero(det(h.coeffs[0]))) throw SingularMatrix("underline: singular leading block");
  Matrix<T> inv0 = inverse(h.coeffs[0]);
  Jet<T> u(h.r, h.p);
  for (size_t i = 0; i < h.p; ++i) u.coeffs[i] = inv0 * h.coeffs[i];
  u.coeffs[0] = Matrix<T>::identity(h.r);
  return u;
}

template <class T>
std::vector<T> theta_traces(const Jet<T>& h) {
  std::vector<T> out;
  for (const auto& th : theta_coeffs(underline(h))) out.push_back(th.trace());
  return out;
}

template <class T>
LogCharacterValue log_character(const HLambdaElement<T>& h, const CharacterParams& params, long branch) {
  h.validate();
  params.validate();
  if (params.spec != h.spec) throw DimensionError("log_character: spec mismatch");
  const Complex two_pi_i(0.0, 2.0 * M_PI);
  Complex total = 0.0;
  for (size_t k = 0; k < h.factors.size(); ++k) {
    const auto& f = h.factors[k];
    T d = det(f.coeffs[0]);
    if (ScalarOps<T>::is_zero(d)) throw SingularMatrix("log_character: singular factor");
    Complex logdet = std::log(ScalarOps<T>::to_complex(d)) + two_pi_i * static_cast<double>(branch);
    total += params.alpha[k][0] * logdet;
    auto tr = theta_traces(f);
    for (size_t i = 0; i < tr.size(); ++i) total += params.alpha[k][i + 1] * ScalarOps<T>::to_complex(tr[i]);
  }
  return {total, branch};
}

Rational log_character_theta_part(const ExactH& h, const ExactParams& params) {
  h.validate();
  params.validate();
  if (params.spec != h.spec) throw DimensionError("spec mismatch");
  Rational total = 0;
  for (size_t k = 0; k < h.factors.size(); ++k) {
    auto tr = theta_traces(h.factors[k]);
    for (size_t i = 0; i < tr.size(); ++i) total += params.alpha[k][i + 1] * tr[i];
  }
  return total;
}

AssumptionReport check_assumption(const CharacterParams& params, double tol) {
  params.validate();
  AssumptionReport rep;
  Complex sum0 = 0.0;
  for (size_t j = 0; j < params.alpha.size(); ++j) {
    const Complex a0 = params.alpha[j][0];
    sum0 += a0;
    if (std::abs(a0.imag()) <= tol && std::abs(a0.real() - std::round(a0.real())) <= tol) {
      std::ostringstream os;
      os << "(i) alpha_0^(" << j << ") is an integer";
      rep.violations.push_back(os.str());
    }
    const size_t nj = params.spec.parts[j];
    if (nj >= 2 && std::abs(params.alpha[j][nj - 1]) <= tol) {
      std::ostringstream os;
      os << "(ii) alpha_" << nj - 1 << "^(" << j << ") vanishes";
      rep.violations.push_back(os.str());
    }
  }
  if (std::abs(sum0 + static_cast<double>(params.m)) > tol) rep.violations.push_back("(iii) sum of alpha_0 != -m");
  rep.ok = rep.violations.empty();
  return rep;
}

ExactMatrix xi_matrix(const ExactH& h) {
  h.validate();
  const size_t r = h.spec.r;
  ExactMatrix xi(r, h.spec.N());
  for (size_t k = 0; k < h.factors.size(); ++k) {
    Jet<Rational> l = jet_log(h.factors[k]);
    size_t off = h.spec.factor_offset(k);
    for (size_t i = 0; i < l.p; ++i) xi.set_sub(0, (off + i) * r, l.coeffs[i]);
  }
  return xi;
}

#define RADON_CHAR_INST(T)                                                                   \
  template struct HLambdaElement<T>;                                                         \
  template struct CharacterParamsT<T>;                                                       \
  template HLambdaElement<T> h_mul(const HLambdaElement<T>&, const HLambdaElement<T>&);      \
  template HLambdaElement<T> h_inv(const HLambdaElement<T>&);                                \
  template Matrix<T> embed_h(const HLambdaElement<T>&);                                      \
  template Matrix<T> iota(const HLambdaElement<T>&);                                         \
  template HLambdaElement<T> iota_inv(const Matrix<T>&, const PartitionSpec&);               \
  template std::vector<Matrix<T>> theta_coeffs(const Jet<T>&);                               \
  template Jet<T> underline(const Jet<T>&);                                                  \
  template std::vector<T> theta_traces(const Jet<T>&);                                       \
  template LogCharacterValue log_character(const HLambdaElement<T>&, const CharacterParams&, long);

RADON_CHAR_INST(Rational)
RADON_CHAR_INST(Complex)

}  // namespace radon
