#include "radon/rational.hpp"

#include <cctype>
#include <sstream>

namespace radon {

Rational parse_rational(const std::string& raw) {
  std::string s;
  for (char ch : raw)
    if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
  if (s.empty()) throw std::invalid_argument("empty rational literal");
  auto dot = s.find('.');
  auto exp = s.find_first_of("eE");
  if (dot != std::string::npos || exp != std::string::npos) {
    // decimal: mantissa digits / 10^k, times 10^e
    std::string mant = s.substr(0, exp);
    long e10 = 0;
    if (exp != std::string::npos) e10 = std::stol(s.substr(exp + 1));
    bool neg = false;
    size_t pos = 0;
    if (!mant.empty() && (mant[0] == '-' || mant[0] == '+')) {
      neg = mant[0] == '-';
      pos = 1;
    }
    std::string digits;
    long frac = 0;
    bool seen_dot = false;
    for (; pos < mant.size(); ++pos) {
      char ch = mant[pos];
      if (ch == '.') {
        if (seen_dot) throw std::invalid_argument("bad rational literal: " + raw);
        seen_dot = true;
      } else if (std::isdigit(static_cast<unsigned char>(ch))) {
        digits.push_back(ch);
        if (seen_dot) ++frac;
      } else {
        throw std::invalid_argument("bad rational literal: " + raw);
      }
    }
    if (digits.empty()) throw std::invalid_argument("bad rational literal: " + raw);
    mpz_class num(digits, 10);
    if (neg) num = -num;
    long shift = e10 - frac;
    mpz_class p10;
    mpz_ui_pow_ui(p10.get_mpz_t(), 10, static_cast<unsigned long>(shift < 0 ? -shift : shift));
    Rational q = shift >= 0 ? Rational(num * p10) : Rational(num, p10);
    q.canonicalize();
    return q;
  }
  Rational q;
  if (q.set_str(s, 10) != 0) throw std::invalid_argument("bad rational literal: " + raw);
  if (sgn(q.get_den()) == 0) throw std::invalid_argument("zero denominator: " + raw);
  q.canonicalize();
  return q;
}

std::string format_rational(const Rational& q) { return q.get_str(10); }

double to_double(const Rational& q) { return q.get_d(); }

Complex to_complex(const Rational& q) { return {q.get_d(), 0.0}; }

const Rational& Scalar::rational() const {
  if (!is_rational()) throw TypeMismatch("scalar is complex, rational requested");
  return std::get<Rational>(v_);
}

const Complex& Scalar::complex() const {
  if (!is_complex()) throw TypeMismatch("scalar is rational, complex requested");
  return std::get<Complex>(v_);
}

void Scalar::same_tag(const Scalar& o) const {
  if (v_.index() != o.v_.index()) throw TypeMismatch("mixed rational/complex arithmetic");
}

Scalar Scalar::operator+(const Scalar& o) const {
  same_tag(o);
  if (is_rational()) return Scalar(Rational(rational() + o.rational()));
  return Scalar(complex() + o.complex());
}

Scalar Scalar::operator-(const Scalar& o) const {
  same_tag(o);
  if (is_rational()) return Scalar(Rational(rational() - o.rational()));
  return Scalar(complex() - o.complex());
}

Scalar Scalar::operator*(const Scalar& o) const {
  same_tag(o);
  if (is_rational()) return Scalar(Rational(rational() * o.rational()));
  return Scalar(complex() * o.complex());
}

Scalar Scalar::operator/(const Scalar& o) const {
  same_tag(o);
  if (o.is_zero()) throw std::domain_error("division by zero");
  if (is_rational()) return Scalar(Rational(rational() / o.rational()));
  return Scalar(complex() / o.complex());
}

Scalar Scalar::operator-() const {
  if (is_rational()) return Scalar(Rational(-rational()));
  return Scalar(-complex());
}

bool Scalar::operator==(const Scalar& o) const {
  if (v_.index() != o.v_.index()) return false;
  if (is_rational()) return rational() == o.rational();
  return complex() == o.complex();
}

bool Scalar::is_zero() const {
  if (is_rational()) return sgn(rational()) == 0;
  return complex() == Complex(0.0, 0.0);
}

std::string Scalar::str() const {
  if (is_rational()) return format_rational(rational());
  std::ostringstream os;
  os.precision(17);
  os << "[" << complex().real() << ", " << complex().imag() << "]";
  return os.str();
}

}  // namespace radon
