#include "radon/quadrature.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "radon/special.hpp"

namespace radon {

namespace {

// Golub-Welsch: monic recurrence (a_k, b_k), mu0 = total mass
Rule1D golub_welsch(const std::vector<double>& a, const std::vector<double>& b, double mu0) {
  const Eigen::Index m = static_cast<Eigen::Index>(a.size());
  Eigen::VectorXd diag(m), sub(std::max<Eigen::Index>(m - 1, 0));
  for (Eigen::Index k = 0; k < m; ++k) diag[k] = a[k];
  for (Eigen::Index k = 0; k + 1 < m; ++k) sub[k] = std::sqrt(b[k + 1]);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es;
  es.computeFromTridiagonal(diag, sub, Eigen::ComputeEigenvectors);
  if (es.info() != Eigen::Success) throw std::runtime_error("golub_welsch: eigen solver failed");
  Rule1D rule;
  for (Eigen::Index k = 0; k < m; ++k) {
    rule.nodes.push_back(es.eigenvalues()[k]);
    double v = es.eigenvectors()(0, k);
    rule.weights.push_back(mu0 * v * v);
  }
  return rule;
}

void require_order(size_t m) {
  if (m == 0) throw std::invalid_argument("quadrature order must be positive");
}

}  // namespace

Rule1D gauss_jacobi01(size_t m, double s, double t) {
  require_order(m);
  if (!(s > -1.0 && t > -1.0)) throw std::domain_error("gauss_jacobi01: exponents must exceed -1");
  // (1 - x)^al (1 + x)^be on [-1, 1] with lam = (1 + x) / 2
  const double al = t, be = s, ab = al + be;
  std::vector<double> a(m), b(m, 0.0);
  for (size_t k = 0; k < m; ++k) {
    const double kk = static_cast<double>(k);
    if (k == 0)
      a[k] = (be - al) / (ab + 2.0);
    else
      a[k] = (be * be - al * al) / ((2 * kk + ab) * (2 * kk + ab + 2.0));
    if (k == 1)
      b[k] = 4.0 * (1.0 + al) * (1.0 + be) / ((2.0 + ab) * (2.0 + ab) * (3.0 + ab));
    else if (k > 1)
      b[k] = 4.0 * kk * (kk + al) * (kk + be) * (kk + ab) /
             ((2 * kk + ab) * (2 * kk + ab) * (2 * kk + ab + 1.0) * (2 * kk + ab - 1.0));
  }
  Rule1D rule = golub_welsch(a, b, 1.0);
  const double mass = beta_fn(s + 1.0, t + 1.0);
  for (size_t k = 0; k < m; ++k) {
    rule.nodes[k] = 0.5 * (1.0 + rule.nodes[k]);
    rule.weights[k] *= mass;
  }
  return rule;
}

Rule1D gauss_laguerre(size_t m, double s, double rate) {
  require_order(m);
  if (!(s > -1.0) || !(rate > 0.0)) throw std::domain_error("gauss_laguerre: need s > -1, rate > 0");
  std::vector<double> a(m), b(m, 0.0);
  for (size_t k = 0; k < m; ++k) {
    const double kk = static_cast<double>(k);
    a[k] = 2 * kk + s + 1.0;
    b[k] = kk * (kk + s);
  }
  Rule1D rule = golub_welsch(a, b, std::tgamma(s + 1.0));
  const double scale = std::pow(rate, -(s + 1.0));
  for (size_t k = 0; k < m; ++k) {
    rule.nodes[k] /= rate;
    rule.weights[k] *= scale;
  }
  return rule;
}

Rule1D gauss_hermite(size_t m) {
  require_order(m);
  std::vector<double> a(m, 0.0), b(m, 0.0);
  for (size_t k = 0; k < m; ++k) b[k] = static_cast<double>(k);
  return golub_welsch(a, b, std::sqrt(2.0 * std::numbers::pi));
}

Rule1D gauss_legendre(size_t m, double lo, double hi) {
  require_order(m);
  std::vector<double> a(m, 0.0), b(m, 0.0);
  for (size_t k = 1; k < m; ++k) {
    const double kk = static_cast<double>(k);
    b[k] = kk * kk / (4.0 * kk * kk - 1.0);
  }
  Rule1D rule = golub_welsch(a, b, 2.0);
  const double half = 0.5 * (hi - lo);
  for (size_t k = 0; k < m; ++k) {
    rule.nodes[k] = lo + half * (rule.nodes[k] + 1.0);
    rule.weights[k] *= half;
  }
  return rule;
}

Rule1D regularized_from(const std::vector<double>& nodes, const std::vector<double>& weights, double s, double t) {
  const bool r0 = s < -1.0, r1 = t < -1.0;
  if (!(s > -2.0 && t > -2.0) || s == -1.0 || t == -1.0)
    throw std::domain_error("beta_box_rule: exponents must lie in (-2, inf) minus {-1}");
  Rule1D rule;
  double sum_c = 0.0, sum_c_lam = 0.0, sum_c_1m = 0.0;
  for (size_t k = 0; k < nodes.size(); ++k) {
    const double x = nodes[k];
    double c = weights[k];
    if (r0) c /= x;
    if (r1) c /= (1.0 - x);
    rule.nodes.push_back(x);
    rule.weights.push_back(c);
    sum_c += c;
    sum_c_lam += c * x;
    sum_c_1m += c * (1.0 - x);
  }
  if (r0 && r1) {
    // subtract (1 - lam) psi(0) + lam psi(1)
    rule.nodes.push_back(0.0);
    rule.weights.push_back(beta_fn(s + 1.0, t + 2.0) - sum_c_1m);
    rule.nodes.push_back(1.0);
    rule.weights.push_back(beta_fn(s + 2.0, t + 1.0) - sum_c_lam);
  } else if (r0) {
    rule.nodes.push_back(0.0);
    rule.weights.push_back(beta_fn(s + 1.0, t + 1.0) - sum_c);
  } else if (r1) {
    rule.nodes.push_back(1.0);
    rule.weights.push_back(beta_fn(s + 1.0, t + 1.0) - sum_c);
  }
  return rule;
}

Rule1D beta_box_rule(size_t m, double s, double t) {
  const double s1 = s < -1.0 ? s + 1.0 : s;
  const double t1 = t < -1.0 ? t + 1.0 : t;
  Rule1D inner = gauss_jacobi01(m, s1, t1);
  return regularized_from(inner.nodes, inner.weights, s, t);
}

Rule1D exp_trapezoid(double vmin, double vmax, size_t n) {
  if (n < 2 || !(vmax > vmin)) throw std::invalid_argument("exp_trapezoid: bad grid");
  Rule1D rule;
  const double h = (vmax - vmin) / static_cast<double>(n - 1);
  for (size_t k = 0; k < n; ++k) {
    const double lam = std::exp(vmin + h * static_cast<double>(k));
    rule.nodes.push_back(lam);
    rule.weights.push_back((k == 0 || k + 1 == n ? 0.5 : 1.0) * h * lam);
  }
  return rule;
}

}  // namespace radon
