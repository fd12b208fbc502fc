#pragma once

#include <vector>

#include "radon/integrals.hpp"

namespace radon {

struct SeriesValue {
  Complex value{0.0, 0.0};
  double tail = 0.0;          // |last shell| + |previous shell|
  size_t weight_reached = 0;  // largest |kappa| summed
  bool converged = false;     // stopped by the relative-shell rule, not the budget
};

// s_kappa(x) by branching over interlacing partitions
Complex schur_poly(const std::vector<size_t>& kappa, const std::vector<Complex>& x);
// hook-length product
double hook_product(const std::vector<size_t>& kappa);
// [a]_kappa = prod_i (a - i + 1)_{kappa_i}, i one-based
Complex gen_pochhammer(Complex a, const std::vector<size_t>& kappa);
// partitions of k with at most l parts
std::vector<std::vector<size_t>> partitions_of(size_t k, size_t l);

// sum_kappa prod[a]_kappa / prod[b]_kappa * s_kappa(x) / H_kappa over eigenvalues x
SeriesValue hgf_series_pFq(const std::vector<Complex>& num, const std::vector<Complex>& den,
                           const std::vector<double>& x, size_t trunc);
SeriesValue hgf_series_2F1(Complex a, Complex b, Complex c, const HermMatrix& X, size_t trunc);
SeriesValue hgf_series_1F1(Complex a, Complex c, const HermMatrix& X, size_t trunc);

}  // namespace radon
