#pragma once

#include <cstddef>
#include <vector>

namespace radon {

struct Rule1D {
  std::vector<double> nodes;
  std::vector<double> weights;
  size_t size() const { return nodes.size(); }
};

// weight lam^s (1 - lam)^t on [0, 1], s, t > -1
Rule1D gauss_jacobi01(size_t m, double s, double t);
// weight lam^s exp(-rate lam) on [0, inf), s > -1
Rule1D gauss_laguerre(size_t m, double s, double rate);
// weight exp(-lam^2 / 2) on R
Rule1D gauss_hermite(size_t m);
// unit weight on [a, b]
Rule1D gauss_legendre(size_t m, double a, double b);

// Finite-part rule for lam^s (1 - lam)^t on [0, 1] with s, t > -2 (not -1).
// An exponent in (-2, -1) adds an endpoint node carrying the subtracted
// Taylor term, which gives the analytic continuation in s, t.
Rule1D beta_box_rule(size_t m, double s, double t);
// same construction from a given interior rule for the shifted weight;
// total = integral of the shifted weight (used with one random node)
Rule1D regularized_from(const std::vector<double>& nodes, const std::vector<double>& weights, double s, double t);

// lam = e^v, v on a uniform grid in [vmin, vmax]; weights include the Jacobian
Rule1D exp_trapezoid(double vmin, double vmax, size_t n);

}  // namespace radon
