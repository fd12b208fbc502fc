#pragma once

#include <string>
#include <vector>

#include "radon/hgf_series.hpp"

namespace radon {

struct MethodValue {
  std::string side;    // lhs | rhs
  std::string method;  // series | mc | eig_quad
  Complex value{0.0, 0.0};
  double std_error = 0.0;
  double z_vs_series = 0.0;  // |value - series| / std_error for mc
};

struct IdentityReport {
  std::string name;
  bool conjecture = false;
  Complex lhs{0.0, 0.0}, rhs{0.0, 0.0};  // series values
  double residual = 0.0;                 // |lhs - rhs| / |lhs|
  size_t trunc = 0;
  std::vector<double> trunc_residuals;   // residual at weights 4, 8, ..., trunc
  std::vector<MethodValue> methods;
  bool has_mc = false;
  double mc_sigma = 0.0;                 // max z over the MC comparisons
  bool has_quad = false;
  double quad_residual = 0.0;            // max relative deviation quad vs series
};

struct IdentityBudget {
  size_t trunc = 20;
  size_t samples = 0;     // 0: no MC
  uint64_t seed = 7;
  size_t quad_order = 0;  // 0: no quadrature cross-check (r <= 2 only)
  McOptions mc;
};

IdentityReport check_pfaff(Complex a, Complex b, Complex c, const HermMatrix& X, const IdentityBudget& budget);
IdentityReport check_kummer(Complex a, Complex c, const HermMatrix& X, const IdentityBudget& budget);
// conj-1 and conj-2, each against the 2F1 left side
std::vector<IdentityReport> check_conjecture(Complex a, Complex b, Complex c, const HermMatrix& X,
                                             const IdentityBudget& budget);

struct BetaSymmetryReport {
  double a = 0, b = 0;
  size_t r = 1;
  Complex forward, backward;
  double residual = 0.0;  // |forward / backward - 1|
};
BetaSymmetryReport check_beta_symmetry(double a, double b, size_t r, size_t order = 0);

}  // namespace radon
