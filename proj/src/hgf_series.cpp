#include "radon/hgf_series.hpp"

#include <cmath>
#include <map>
#include <stdexcept>

namespace radon {

namespace {

void gen_parts(size_t k, size_t maxpart, size_t l, std::vector<size_t>& cur, std::vector<std::vector<size_t>>& out) {
  if (k == 0) {
    out.push_back(cur);
    return;
  }
  if (l == 0) return;
  for (size_t p = std::min(k, maxpart); p >= 1; --p) {
    cur.push_back(p);
    gen_parts(k - p, p, l - 1, cur, out);
    cur.pop_back();
  }
}

// mu interlaces kappa: kappa_1 >= mu_1 >= kappa_2 >= mu_2 >= ...
void interlacing(const std::vector<size_t>& kappa, size_t i, std::vector<size_t>& cur,
                 std::vector<std::vector<size_t>>& out, size_t maxlen) {
  if (i == kappa.size() || i == maxlen) {
    // any remaining kappa rows beyond maxlen must fit below the last mu row
    if (i < kappa.size() && i + 1 < kappa.size()) return;
    std::vector<size_t> mu = cur;
    while (!mu.empty() && mu.back() == 0) mu.pop_back();
    out.push_back(mu);
    return;
  }
  const size_t hi = kappa[i];
  const size_t lo = i + 1 < kappa.size() ? kappa[i + 1] : 0;
  for (size_t v = lo; v <= hi; ++v) {
    cur.push_back(v);
    interlacing(kappa, i + 1, cur, out, maxlen);
    cur.pop_back();
  }
}

class SchurEval {
 public:
  explicit SchurEval(const std::vector<Complex>& x) : x_(x) {}

  Complex eval(const std::vector<size_t>& kappa, size_t m) {
    if (kappa.empty()) return 1.0;
    if (kappa.size() > m) return 0.0;
    if (m == 1) return std::pow(x_[0], static_cast<int>(kappa[0]));
    auto key = std::make_pair(m, kappa);
    auto it = memo_.find(key);
    if (it != memo_.end()) return it->second;
    // s_kappa(x_1..x_m) = sum_mu s_mu(x_1..x_{m-1}) x_m^{|kappa|-|mu|}
    std::vector<std::vector<size_t>> mus;
    std::vector<size_t> cur;
    interlacing(kappa, 0, cur, mus, m - 1);
    size_t wk = 0;
    for (size_t v : kappa) wk += v;
    Complex acc(0.0, 0.0);
    for (const auto& mu : mus) {
      if (mu.size() > m - 1) continue;
      size_t wm = 0;
      for (size_t v : mu) wm += v;
      acc += eval(mu, m - 1) * std::pow(x_[m - 1], static_cast<int>(wk - wm));
    }
    memo_[key] = acc;
    return acc;
  }

 private:
  std::vector<Complex> x_;
  std::map<std::pair<size_t, std::vector<size_t>>, Complex> memo_;
};

}  // namespace

std::vector<std::vector<size_t>> partitions_of(size_t k, size_t l) {
  std::vector<std::vector<size_t>> out;
  std::vector<size_t> cur;
  gen_parts(k, k, l, cur, out);
  return out;
}

Complex schur_poly(const std::vector<size_t>& kappa, const std::vector<Complex>& x) {
  SchurEval s(x);
  return s.eval(kappa, x.size());
}

double hook_product(const std::vector<size_t>& kappa) {
  double h = 1.0;
  for (size_t i = 0; i < kappa.size(); ++i)
    for (size_t j = 0; j < kappa[i]; ++j) {
      size_t leg = 0;
      for (size_t k = i + 1; k < kappa.size() && kappa[k] > j; ++k) ++leg;
      h *= static_cast<double>(kappa[i] - j - 1 + leg + 1);
    }
  return h;
}

Complex gen_pochhammer(Complex a, const std::vector<size_t>& kappa) {
  Complex v(1.0, 0.0);
  for (size_t i = 0; i < kappa.size(); ++i)
    for (size_t j = 0; j < kappa[i]; ++j) v *= a - static_cast<double>(i) + static_cast<double>(j);
  return v;
}

SeriesValue hgf_series_pFq(const std::vector<Complex>& num, const std::vector<Complex>& den,
                           const std::vector<double>& x, size_t trunc) {
  const size_t r = x.size();
  std::vector<Complex> xc(x.begin(), x.end());
  SchurEval schur(xc);
  SeriesValue out;
  out.value = 1.0;
  double prev_shell = 0.0;
  bool all_zero = true;
  for (double v : x) all_zero = all_zero && v == 0.0;
  if (all_zero) {
    out.converged = true;
    return out;
  }
  for (size_t k = 1; k <= trunc; ++k) {
    Complex shell(0.0, 0.0);
    for (const auto& kappa : partitions_of(k, r)) {
      Complex term = schur.eval(kappa, r) / hook_product(kappa);
      for (const auto& a : num) term *= gen_pochhammer(a, kappa);
      for (const auto& c : den) {
        const Complex p = gen_pochhammer(c, kappa);
        if (std::abs(p) == 0.0) throw std::domain_error("hgf series: pole in the denominator parameters");
        term /= p;
      }
      shell += term;
    }
    out.value += shell;
    out.weight_reached = k;
    out.tail = std::abs(shell) + prev_shell;
    prev_shell = std::abs(shell);
    if (k >= 2 && out.tail < 1e-12 * std::abs(out.value)) {
      out.converged = true;
      break;
    }
  }
  if (!std::isfinite(out.value.real()) || !std::isfinite(out.value.imag()))
    throw std::domain_error("hgf series: non-finite value");
  return out;
}

SeriesValue hgf_series_2F1(Complex a, Complex b, Complex c, const HermMatrix& X, size_t trunc) {
  const auto ev = X.eigenvalues();
  for (double v : ev)
    if (!(std::abs(v) < 1.0)) throw std::domain_error("2F1 series: spectral radius of X must be < 1");
  return hgf_series_pFq({a, b}, {c}, ev, trunc);
}

SeriesValue hgf_series_1F1(Complex a, Complex c, const HermMatrix& X, size_t trunc) {
  return hgf_series_pFq({a}, {c}, X.eigenvalues(), trunc);
}

}  // namespace radon
