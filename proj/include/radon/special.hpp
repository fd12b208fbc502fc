#pragma once

#include "radon/rational.hpp"

namespace radon {

// principal branch, Lanczos g=7
Complex lgamma_c(Complex z);
Complex gamma_c(Complex z);
// Gamma(x)Gamma(y)/Gamma(x+y) for real arguments off the poles (analytically continued)
double beta_fn(double x, double y);
// Maclaurin series of Ai
double airy_ai_series(double x);

}  // namespace radon
