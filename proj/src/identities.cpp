#include "radon/identities.hpp"

#include <cmath>
#include <stdexcept>

namespace radon {

namespace {

// prefactor * pFq(params; Y), with an integral representation over the unit box
struct Side {
  Complex prefactor{1.0, 0.0};
  bool gauss = true;
  Complex a, b, c;
  HermMatrix Y;
};

Complex series_value(const Side& s, size_t trunc) {
  const SeriesValue v = s.gauss ? hgf_series_2F1(s.a, s.b, s.c, s.Y, trunc) : hgf_series_1F1(s.a, s.c, s.Y, trunc);
  return s.prefactor * v.value;
}

bool real_params(const Side& s) {
  return s.a.imag() == 0.0 && s.b.imag() == 0.0 && s.c.imag() == 0.0 && s.prefactor.imag() == 0.0;
}

EigWeight side_weight(const Side& s) {
  const double r = static_cast<double>(s.Y.r());
  return EigWeight{{DomainTag::BetaBox}, s.a.real() - r, (s.c - s.a).real() - r, 1.0};
}

MatFn side_integrand(const Side& s) {
  const CMat Y = s.Y.mat();
  const Eigen::Index n = Y.rows();
  if (s.gauss) {
    const Complex b = s.b;
    return [Y, b, n](const CMat& u) { return std::exp(-b * std::log((CMat::Identity(n, n) - u * Y).determinant())); };
  }
  return [Y](const CMat& u) { return std::exp((u * Y).trace()); };
}

const MatFn kOne = [](const CMat&) { return Complex(1.0, 0.0); };

bool weight_ok(const EigWeight& w) {
  return w.s > -2.0 && w.t > -2.0 && w.s != -1.0 && w.t != -1.0;
}

Complex det_power(const HermMatrix& X, Complex p) {
  const Eigen::Index n = X.mat().rows();
  return std::exp(p * std::log((CMat::Identity(n, n) - X.mat()).determinant()));
}

HermMatrix pfaff_argument(const HermMatrix& X) {
  const Eigen::Index n = X.mat().rows();
  const CMat m = X.mat() - CMat::Identity(n, n);
  if (std::abs(m.determinant()) < 1e-14) throw std::domain_error("singular 1 - X");
  return HermMatrix(X.mat() * m.inverse(), 1e-10);
}

IdentityReport run_identity(const std::string& name, bool conjecture, const Side& L, const Side& R,
                            const IdentityBudget& budget) {
  IdentityReport rep;
  rep.name = name;
  rep.conjecture = conjecture;
  rep.trunc = budget.trunc;
  rep.lhs = series_value(L, budget.trunc);
  rep.rhs = series_value(R, budget.trunc);
  auto resid = [](Complex l, Complex r) {
    const double d = std::abs(l - r);
    return d == 0.0 ? 0.0 : d / std::abs(l);
  };
  rep.residual = resid(rep.lhs, rep.rhs);
  for (size_t w = 4; w < budget.trunc; w += 4) rep.trunc_residuals.push_back(resid(series_value(L, w), series_value(R, w)));
  rep.trunc_residuals.push_back(rep.residual);
  rep.methods.push_back({"lhs", "series", rep.lhs, 0.0, 0.0});
  rep.methods.push_back({"rhs", "series", rep.rhs, 0.0, 0.0});

  const size_t r = L.Y.r();
  const EigWeight wl = side_weight(L), wr = side_weight(R);
  const bool numeric_ok = real_params(L) && real_params(R) && weight_ok(wl) && weight_ok(wr);
  if (budget.samples > 0 && numeric_ok) {
    McMulti ml = mc_integral_multi({side_integrand(L), kOne}, wl, r, budget.samples, budget.seed, budget.mc);
    McMulti mr = mc_integral_multi({side_integrand(R), kOne}, wr, r, budget.samples, budget.seed + 1, budget.mc);
    IntegralEstimate el = ml.ratio(0, 1), er = mr.ratio(0, 1);
    el.value *= L.prefactor;
    el.std_error *= std::abs(L.prefactor);
    er.value *= R.prefactor;
    er.std_error *= std::abs(R.prefactor);
    auto z = [](Complex d, double se) { return d == Complex(0.0, 0.0) ? 0.0 : std::abs(d) / se; };
    const double zl = z(el.value - rep.lhs, el.std_error);
    const double zr = z(er.value - rep.rhs, er.std_error);
    const double zlr = z(el.value - er.value, std::hypot(el.std_error, er.std_error));
    rep.methods.push_back({"lhs", "mc", el.value, el.std_error, zl});
    rep.methods.push_back({"rhs", "mc", er.value, er.std_error, zr});
    rep.has_mc = true;
    rep.mc_sigma = std::max({zl, zr, zlr});
    if (ml.nonfinite + mr.nonfinite > 0) rep.mc_sigma = INFINITY;
  }
  if (budget.quad_order > 0 && numeric_ok && r <= 2) {
    auto quad_side = [&](const Side& s, const EigWeight& w) {
      const Complex num = matrix_quadrature(side_integrand(s), w, r, budget.quad_order).value;
      const Complex den = matrix_quadrature(kOne, w, r, budget.quad_order, 1).value;
      return s.prefactor * num / den;
    };
    const Complex ql = quad_side(L, wl), qr = quad_side(R, wr);
    rep.methods.push_back({"lhs", "eig_quad", ql, 0.0, 0.0});
    rep.methods.push_back({"rhs", "eig_quad", qr, 0.0, 0.0});
    rep.has_quad = true;
    rep.quad_residual = std::max(resid(rep.lhs, ql), resid(rep.rhs, qr));
  }
  return rep;
}

}  // namespace

IdentityReport check_pfaff(Complex a, Complex b, Complex c, const HermMatrix& X, const IdentityBudget& budget) {
  Side L{1.0, true, a, b, c, X};
  Side R{det_power(X, -b), true, c - a, b, c, pfaff_argument(X)};
  return run_identity("pfaff", false, L, R, budget);
}

IdentityReport check_kummer(Complex a, Complex c, const HermMatrix& X, const IdentityBudget& budget) {
  Side L{1.0, false, a, 0.0, c, X};
  Side R{std::exp(X.mat().trace()), false, c - a, 0.0, c, HermMatrix(CMat(-X.mat()))};
  return run_identity("kummer", false, L, R, budget);
}

std::vector<IdentityReport> check_conjecture(Complex a, Complex b, Complex c, const HermMatrix& X,
                                             const IdentityBudget& budget) {
  Side L{1.0, true, a, b, c, X};
  Side R1{det_power(X, -a), true, a, c - b, c, pfaff_argument(X)};
  Side R2{det_power(X, c - a - b), true, c - a, c - b, c, X};
  IdentityBudget b2 = budget;
  b2.seed = budget.seed + 2;
  return {run_identity("conjecture-1", true, L, R1, budget), run_identity("conjecture-2", true, L, R2, b2)};
}

BetaSymmetryReport check_beta_symmetry(double a, double b, size_t r, size_t order) {
  const double rr = static_cast<double>(r);
  const EigFn one = [](const std::vector<double>&) { return Complex(1.0, 0.0); };
  BetaSymmetryReport rep;
  rep.a = a;
  rep.b = b;
  rep.r = r;
  rep.forward = eig_quadrature(one, EigWeight{{DomainTag::BetaBox}, a - rr, b - rr, 1.0}, r, order).value;
  rep.backward = eig_quadrature(one, EigWeight{{DomainTag::BetaBox}, b - rr, a - rr, 1.0}, r, order).value;
  rep.residual = std::abs(rep.forward / rep.backward - 1.0);
  return rep;
}

}  // namespace radon
