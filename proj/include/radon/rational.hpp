#pragma once

#include <complex>
#include <stdexcept>
#include <string>
#include <variant>

#include <gmpxx.h>

namespace radon {

using Rational = mpq_class;
using Complex = std::complex<double>;

// "p/q", "p", or a decimal literal like "-1.25" (converted exactly)
Rational parse_rational(const std::string& s);
std::string format_rational(const Rational& q);
double to_double(const Rational& q);
Complex to_complex(const Rational& q);

class TypeMismatch : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// Exact rational or complex double. No implicit coercion between the two.
class Scalar {
 public:
  Scalar() : v_(Rational(0)) {}
  Scalar(const Rational& q) : v_(q) { std::get<Rational>(v_).canonicalize(); }
  Scalar(const Complex& z) : v_(z) {}

  bool is_rational() const { return v_.index() == 0; }
  bool is_complex() const { return v_.index() == 1; }
  const Rational& rational() const;
  const Complex& complex() const;

  Scalar operator+(const Scalar& o) const;
  Scalar operator-(const Scalar& o) const;
  Scalar operator*(const Scalar& o) const;
  Scalar operator/(const Scalar& o) const;
  Scalar operator-() const;
  bool operator==(const Scalar& o) const;
  bool is_zero() const;
  std::string str() const;

 private:
  void same_tag(const Scalar& o) const;
  std::variant<Rational, Complex> v_;
};

// scalar traits used by the templated containers
template <class T>
struct ScalarOps;

template <>
struct ScalarOps<Rational> {
  static Rational zero() { return Rational(0); }
  static Rational one() { return Rational(1); }
  static Rational from_int(long v) { return Rational(v); }
  static Rational from_ratio(long p, long q) {
    Rational x(p, q);
    x.canonicalize();
    return x;
  }
  static bool is_zero(const Rational& x) { return sgn(x) == 0; }
  static Complex to_complex(const Rational& x) { return radon::to_complex(x); }
  static constexpr bool exact = true;
};

template <>
struct ScalarOps<Complex> {
  static Complex zero() { return {0.0, 0.0}; }
  static Complex one() { return {1.0, 0.0}; }
  static Complex from_int(long v) { return {static_cast<double>(v), 0.0}; }
  static Complex from_ratio(long p, long q) { return {static_cast<double>(p) / static_cast<double>(q), 0.0}; }
  static bool is_zero(const Complex& x) { return x == Complex(0.0, 0.0); }
  static Complex to_complex(const Complex& x) { return x; }
  static constexpr bool exact = false;
};

}  // namespace radon
