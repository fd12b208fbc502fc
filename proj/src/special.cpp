#include "radon/special.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace radon {

namespace {
constexpr double kLanczosG = 7.0;
constexpr double kLanczos[9] = {0.99999999999980993,  676.5203681218851,     -1259.1392167224028,
                                771.32342877765313,   -176.61502916214059,   12.507343278686905,
                                -0.13857109526572012, 9.9843695780195716e-6, 1.5056327351493116e-7};
}  // namespace

Complex lgamma_c(Complex z) {
  const double pi = std::numbers::pi;
  if (z.real() < 0.5) {
    // reflection; log(pi / sin(pi z)) - lgamma(1 - z)
    Complex s = std::sin(pi * z);
    if (std::abs(s) == 0.0) throw std::domain_error("lgamma_c: pole");
    return std::log(pi / s) - lgamma_c(1.0 - z);
  }
  Complex zm = z - 1.0;
  Complex x = kLanczos[0];
  for (int i = 1; i < 9; ++i) x += kLanczos[i] / (zm + static_cast<double>(i));
  Complex t = zm + kLanczosG + 0.5;
  return 0.5 * std::log(2.0 * pi) + (zm + 0.5) * std::log(t) - t + std::log(x);
}

Complex gamma_c(Complex z) {
  if (z.imag() == 0.0) return std::tgamma(z.real());
  return std::exp(lgamma_c(z));
}

double beta_fn(double x, double y) {
  auto pole = [](double v) { return v <= 0.0 && v == std::floor(v); };
  if (pole(x) || pole(y)) throw std::domain_error("beta_fn: pole");
  if (pole(x + y)) return 0.0;
  if (x > 0 && y > 0) return std::exp(std::lgamma(x) + std::lgamma(y) - std::lgamma(x + y));
  return std::tgamma(x) * std::tgamma(y) / std::tgamma(x + y);
}

double airy_ai_series(double x) {
  // Ai(x) = c1 f(x) - c2 g(x)
  const double c1 = 1.0 / (std::pow(3.0, 2.0 / 3.0) * std::tgamma(2.0 / 3.0));
  const double c2 = 1.0 / (std::pow(3.0, 1.0 / 3.0) * std::tgamma(1.0 / 3.0));
  double f = 1.0, g = x, tf = 1.0, tg = x;
  const double x3 = x * x * x;
  for (int k = 1; k < 200; ++k) {
    tf *= x3 / ((3.0 * k - 1.0) * (3.0 * k));
    tg *= x3 / ((3.0 * k) * (3.0 * k + 1.0));
    f += tf;
    g += tg;
    if (std::abs(tf) + std::abs(tg) < 1e-18 * (std::abs(f) + std::abs(g))) break;
  }
  return c1 * f - c2 * g;
}

}  // namespace radon
