#include "radon/integrals.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <mutex>
#include <numbers>
#include <stdexcept>
#include <thread>

#include "radon/simd.hpp"
#include "radon/special.hpp"

namespace radon {

// ---------- basic types ----------

CMat to_cmat(const ComplexMatrix& m) {
  CMat out(m.rows(), m.cols());
  for (size_t i = 0; i < m.rows(); ++i)
    for (size_t j = 0; j < m.cols(); ++j) out(i, j) = m(i, j);
  return out;
}

ComplexMatrix from_cmat(const CMat& m) {
  ComplexMatrix out(m.rows(), m.cols());
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) out(i, j) = m(i, j);
  return out;
}

HermMatrix::HermMatrix(const CMat& m, double tol) {
  if (m.rows() != m.cols() || m.rows() == 0) throw DimensionError("HermMatrix must be square and nonempty");
  const double scale = std::max(1.0, m.cwiseAbs().maxCoeff());
  const double off = (m - m.adjoint()).cwiseAbs().maxCoeff();
  if (off > tol * scale) throw std::invalid_argument("HermMatrix: input is not Hermitian");
  m_ = 0.5 * (m + m.adjoint());
}

HermMatrix HermMatrix::diag(const std::vector<double>& d) {
  CMat m = CMat::Zero(static_cast<Eigen::Index>(d.size()), static_cast<Eigen::Index>(d.size()));
  for (size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
  return HermMatrix(m);
}

std::vector<double> HermMatrix::eigenvalues() const {
  Eigen::SelfAdjointEigenSolver<CMat> es(m_, Eigen::EigenvaluesOnly);
  std::vector<double> ev(es.eigenvalues().data(), es.eigenvalues().data() + es.eigenvalues().size());
  return ev;
}

bool Domain::contains(const HermMatrix& u, double tol) const {
  auto ev = u.eigenvalues();
  switch (tag) {
    case DomainTag::BetaBox:
      return ev.front() > -tol && ev.back() < 1.0 + tol;
    case DomainTag::PositiveCone:
      return ev.front() > -tol;
    default:
      return true;
  }
}

std::string Domain::name() const {
  switch (tag) {
    case DomainTag::BetaBox:
      return "beta_box";
    case DomainTag::PositiveCone:
      return "positive_cone";
    default:
      return "full_space";
  }
}

Domain Domain::parse(const std::string& s) {
  if (s == "beta_box" || s == "box") return {DomainTag::BetaBox};
  if (s == "positive_cone" || s == "cone") return {DomainTag::PositiveCone};
  if (s == "full_space" || s == "herm") return {DomainTag::FullSpace};
  throw std::invalid_argument("unknown domain: " + s);
}

IntegralEstimate combine_estimates(const IntegralEstimate& a, const IntegralEstimate& b) {
  if (a.std_error == 0.0) return a;
  if (b.std_error == 0.0) return b;
  const double wa = 1.0 / (a.std_error * a.std_error), wb = 1.0 / (b.std_error * b.std_error);
  IntegralEstimate out = a;
  out.value = (wa * a.value + wb * b.value) / (wa + wb);
  out.std_error = std::sqrt(1.0 / (wa + wb));
  out.n_samples = a.n_samples + b.n_samples;
  out.nonfinite = a.nonfinite + b.nonfinite;
  return out;
}

// ---------- sampling ----------

CMat sample_haar_unitary(size_t r, std::mt19937_64& rng) {
  if (r == 0 || r > 4) throw DimensionError("sample_haar_unitary: 1 <= r <= 4");
  std::normal_distribution<double> nd(0.0, std::sqrt(0.5));
  const Eigen::Index n = static_cast<Eigen::Index>(r);
  CMat z(n, n);
  for (Eigen::Index j = 0; j < n; ++j)
    for (Eigen::Index i = 0; i < n; ++i) {
      const double re = nd(rng);
      const double im = nd(rng);
      z(i, j) = Complex(re, im);
    }
  Eigen::HouseholderQR<CMat> qr(z);
  CMat q = qr.householderQ();
  const CMat& rr = qr.matrixQR();
  for (Eigen::Index j = 0; j < n; ++j) {
    const Complex d = rr(j, j);
    const double ad = std::abs(d);
    q.col(j) *= ad > 0 ? d / ad : Complex(1.0, 0.0);
  }
  return q;
}

unsigned resolve_threads(unsigned requested) {
  if (requested > 0) return requested;
  if (const char* env = std::getenv("RADON_THREADS")) {
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end != env && v > 0) return static_cast<unsigned>(v);
  }
  unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : hw;
}

namespace {

uint64_t splitmix64(uint64_t x) {
  x += 0x9E3779B97F4A7C15ull;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
  return x ^ (x >> 31);
}

double box_shift(double e) { return e < -1.0 ? e + 1.0 : e; }

void check_weight(const EigWeight& w) {
  switch (w.domain.tag) {
    case DomainTag::BetaBox:
      if (!(w.s > -2.0 && w.t > -2.0) || w.s == -1.0 || w.t == -1.0)
        throw std::domain_error("BetaBox exponents must lie in (-2, inf) minus {-1}");
      break;
    case DomainTag::PositiveCone:
      if (!(w.s > -1.0) || !(w.rate > 0.0)) throw std::domain_error("PositiveCone weight needs s > -1, rate > 0");
      break;
    default:
      break;
  }
}

Rule1D random_rule(const EigWeight& w, std::mt19937_64& rng) {
  Rule1D rule;
  switch (w.domain.tag) {
    case DomainTag::BetaBox: {
      const double s1 = box_shift(w.s), t1 = box_shift(w.t);
      std::gamma_distribution<double> ga(s1 + 1.0, 1.0), gb(t1 + 1.0, 1.0);
      double lam = 0.0;
      do {
        const double x = ga(rng);
        const double y = gb(rng);
        lam = x / (x + y);
      } while (!(lam > 0.0 && lam < 1.0));
      return regularized_from({lam}, {beta_fn(s1 + 1.0, t1 + 1.0)}, w.s, w.t);
    }
    case DomainTag::PositiveCone: {
      std::gamma_distribution<double> g(w.s + 1.0, 1.0 / w.rate);
      double lam = 0.0;
      do lam = g(rng);
      while (!(lam > 0.0));
      rule.nodes = {lam};
      rule.weights = {std::tgamma(w.s + 1.0) * std::pow(w.rate, -(w.s + 1.0))};
      return rule;
    }
    default: {
      std::normal_distribution<double> nd(0.0, 1.0);
      rule.nodes = {nd(rng)};
      rule.weights = {std::sqrt(2.0 * std::numbers::pi)};
      return rule;
    }
  }
}

Rule1D deterministic_rule(const EigWeight& w, size_t m) {
  switch (w.domain.tag) {
    case DomainTag::BetaBox:
      return beta_box_rule(m, w.s, w.t);
    case DomainTag::PositiveCone:
      return gauss_laguerre(m, w.s, w.rate);
    default:
      return gauss_hermite(m);
  }
}

// SoA batch of eigenvalue tuples with their product weights
struct NodeBatch {
  size_t r = 0;
  std::vector<std::vector<double>> lam;
  std::vector<double> w;
  std::vector<size_t> owner;

  explicit NodeBatch(size_t r_) : r(r_), lam(r_) {}
  size_t size() const { return w.size(); }

  // all tuples from one rule per coordinate
  void push_tensor(const std::vector<const Rule1D*>& rules, size_t own) {
    std::vector<size_t> idx(r, 0);
    while (true) {
      double wt = 1.0;
      for (size_t i = 0; i < r; ++i) {
        lam[i].push_back(rules[i]->nodes[idx[i]]);
        wt *= rules[i]->weights[idx[i]];
      }
      w.push_back(wt);
      owner.push_back(own);
      size_t i = 0;
      while (i < r && ++idx[i] == rules[i]->size()) idx[i++] = 0;
      if (i == r) break;
    }
  }

  // w * Delta^2
  std::vector<double> weighted_vandermonde() const {
    const auto& k = simd::active();
    std::vector<double> d2(size()), out(size());
    std::vector<const double*> ptrs(r);
    for (size_t i = 0; i < r; ++i) ptrs[i] = lam[i].data();
    k.vandermonde_sq(ptrs.data(), r, size(), d2.data());
    k.mul(w.data(), d2.data(), out.data(), size());
    return out;
  }

  CMat diag_matrix(size_t c) const {
    CMat d = CMat::Zero(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(r));
    for (size_t i = 0; i < r; ++i) d(i, i) = lam[i][c];
    return d;
  }
};

bool finite(Complex z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

struct ChunkResult {
  std::vector<Complex> sum;
  std::vector<Complex> gram;  // K x K
  size_t nonfinite = 0;
};

ChunkResult run_chunk(const std::vector<MatFn>& fs, const EigWeight& w, size_t r, size_t ns, uint64_t seed,
                      size_t chunk_index) {
  const size_t K = fs.size();
  std::mt19937_64 rng(splitmix64(seed ^ splitmix64(chunk_index + 1)));
  NodeBatch batch(r);
  std::vector<CMat> vs(ns);
  std::vector<Rule1D> rules(r);
  std::vector<const Rule1D*> rp(r);
  for (size_t k = 0; k < ns; ++k) {
    vs[k] = sample_haar_unitary(r, rng);
    for (size_t i = 0; i < r; ++i) {
      rules[i] = random_rule(w, rng);
      rp[i] = &rules[i];
    }
    batch.push_tensor(rp, k);
  }
  const std::vector<double> cw = batch.weighted_vandermonde();
  std::vector<std::vector<double>> re(K, std::vector<double>(ns, 0.0)), im(K, std::vector<double>(ns, 0.0));
  std::vector<char> bad(ns, 0);
  for (size_t c = 0; c < batch.size(); ++c) {
    const size_t k = batch.owner[c];
    if (bad[k] || cw[c] == 0.0) continue;
    const CMat& v = vs[k];
    const CMat u = v * batch.diag_matrix(c) * v.adjoint();
    for (size_t f = 0; f < K; ++f) {
      const Complex val = cw[c] * fs[f](u);
      if (!finite(val)) {
        bad[k] = 1;
        break;
      }
      re[f][k] += val.real();
      im[f][k] += val.imag();
    }
  }
  ChunkResult out;
  for (size_t k = 0; k < ns; ++k)
    if (bad[k]) {
      ++out.nonfinite;
      for (size_t f = 0; f < K; ++f) re[f][k] = im[f][k] = 0.0;
    }
  const auto& kern = simd::active();
  const std::vector<double> ones(ns, 1.0);
  out.sum.resize(K);
  out.gram.resize(K * K);
  for (size_t i = 0; i < K; ++i) {
    out.sum[i] = Complex(kern.dot(re[i].data(), ones.data(), ns), kern.dot(im[i].data(), ones.data(), ns));
    for (size_t j = 0; j < K; ++j) {
      const double gr = kern.dot(re[i].data(), re[j].data(), ns) + kern.dot(im[i].data(), im[j].data(), ns);
      const double gi = kern.dot(im[i].data(), re[j].data(), ns) - kern.dot(re[i].data(), im[j].data(), ns);
      out.gram[i * K + j] = Complex(gr, gi);
    }
  }
  return out;
}

}  // namespace

IntegralEstimate McMulti::estimate(size_t i) const {
  IntegralEstimate e;
  e.method = "mc";
  e.n_samples = n;
  e.seed = seed;
  e.nonfinite = nonfinite;
  const double nn = static_cast<double>(n);
  e.value = sum.at(i) / nn;
  if (n > 1) {
    const double var = (gram[i][i].real() / nn - std::norm(e.value)) / (nn - 1.0);
    e.std_error = std::sqrt(std::max(0.0, var));
  }
  return e;
}

IntegralEstimate McMulti::ratio(size_t i, size_t j) const {
  IntegralEstimate e;
  e.method = "mc";
  e.n_samples = n;
  e.seed = seed;
  e.nonfinite = nonfinite;
  const double nn = static_cast<double>(n);
  const Complex mi = sum.at(i) / nn, mj = sum.at(j) / nn;
  if (std::abs(mj) == 0.0) throw std::domain_error("McMulti::ratio: zero denominator");
  const Complex R = mi / mj;
  e.value = R;
  if (n > 1) {
    const double ss =
        gram[i][i].real() - 2.0 * (std::conj(R) * gram[i][j]).real() + std::norm(R) * gram[j][j].real();
    const double var = std::max(0.0, ss) / (nn * (nn - 1.0) * std::norm(mj));
    e.std_error = std::sqrt(var);
  }
  return e;
}

McMulti mc_integral_multi(const std::vector<MatFn>& fs, const EigWeight& w, size_t r, size_t n, uint64_t seed,
                          const McOptions& opt) {
  if (r == 0 || r > 4) throw DimensionError("mc_integral: 1 <= r <= 4");
  if (n == 0) throw std::invalid_argument("mc_integral: n must be positive");
  if (fs.empty()) throw std::invalid_argument("mc_integral: no integrands");
  check_weight(w);
  const size_t chunk = std::max<size_t>(1, opt.chunk);
  const size_t nchunks = (n + chunk - 1) / chunk;
  std::vector<ChunkResult> results(nchunks);
  std::atomic<size_t> next{0};
  std::exception_ptr failure;
  std::mutex fail_mu;
  auto worker = [&] {
    while (true) {
      const size_t c = next.fetch_add(1);
      if (c >= nchunks) return;
      try {
        const size_t ns = std::min(chunk, n - c * chunk);
        results[c] = run_chunk(fs, w, r, ns, seed, c);
      } catch (...) {
        std::lock_guard<std::mutex> lk(fail_mu);
        if (!failure) failure = std::current_exception();
      }
    }
  };
  const unsigned nt = std::min<size_t>(resolve_threads(opt.threads), nchunks);
  if (nt <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < nt; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  if (failure) std::rethrow_exception(failure);

  const size_t K = fs.size();
  McMulti out;
  out.n = n;
  out.seed = seed;
  out.sum.assign(K, Complex(0.0, 0.0));
  out.gram.assign(K, std::vector<Complex>(K, Complex(0.0, 0.0)));
  for (const auto& cr : results) {
    out.nonfinite += cr.nonfinite;
    for (size_t i = 0; i < K; ++i) {
      out.sum[i] += cr.sum[i];
      for (size_t j = 0; j < K; ++j) out.gram[i][j] += cr.gram[i * K + j];
    }
  }
  return out;
}

IntegralEstimate mc_integral(const MatFn& f, const EigWeight& w, size_t r, size_t n, uint64_t seed,
                             const McOptions& opt) {
  return mc_integral_multi({f}, w, r, n, seed, opt).estimate(0);
}

IntegralEstimate mc_integral(const MatFn& f, const Domain& d, size_t r, size_t n, uint64_t seed,
                             const McOptions& opt) {
  EigWeight w{d, 0.0, 0.0, 1.0};
  switch (d.tag) {
    case DomainTag::PositiveCone:
      return mc_integral([f](const CMat& u) { return f(u) * std::exp(u.trace().real()); }, w, r, n, seed, opt);
    case DomainTag::FullSpace:
      return mc_integral([f](const CMat& u) { return f(u) * std::exp(0.5 * (u * u).trace().real()); }, w, r, n,
                         seed, opt);
    default:
      return mc_integral(f, w, r, n, seed, opt);
  }
}

// ---------- quadrature ----------

namespace {

size_t default_order(const EigWeight& w, size_t r) {
  if (w.domain.tag == DomainTag::BetaBox) return r == 1 ? 48 : (r == 2 ? 36 : 20);
  return r == 1 ? 64 : (r == 2 ? 40 : 24);
}

Complex eig_quad_once(const EigFn& g, const Rule1D& rule, size_t r) {
  NodeBatch batch(r);
  std::vector<const Rule1D*> rp(r, &rule);
  batch.push_tensor(rp, 0);
  const std::vector<double> cw = batch.weighted_vandermonde();
  std::vector<double> re(batch.size()), im(batch.size());
  std::vector<double> lam(r);
  for (size_t c = 0; c < batch.size(); ++c) {
    if (cw[c] == 0.0) {
      re[c] = im[c] = 0.0;
      continue;
    }
    for (size_t i = 0; i < r; ++i) lam[i] = batch.lam[i][c];
    const Complex v = g(lam);
    re[c] = v.real();
    im[c] = v.imag();
  }
  const auto& k = simd::active();
  return {k.dot(cw.data(), re.data(), cw.size()), k.dot(cw.data(), im.data(), cw.size())};
}

struct AngularGrid {
  std::vector<CMat> v;
  std::vector<double> w;
};

// U(2)/T ~ S^2: Gauss-Legendre in cos(theta), trapezoid in phi; weights sum to 1
AngularGrid angular_grid(size_t r, size_t n) {
  AngularGrid g;
  if (r == 1) {
    g.v.push_back(CMat::Identity(1, 1));
    g.w.push_back(1.0);
    return g;
  }
  Rule1D gl = gauss_legendre(n, -1.0, 1.0);
  for (size_t a = 0; a < n; ++a) {
    const double ct = gl.nodes[a];
    const double c = std::sqrt(0.5 * (1.0 + ct)), s = std::sqrt(0.5 * (1.0 - ct));
    for (size_t b = 0; b < n; ++b) {
      const double phi = 2.0 * std::numbers::pi * static_cast<double>(b) / static_cast<double>(n);
      const Complex e = std::polar(1.0, phi);
      CMat v(2, 2);
      v(0, 0) = c;
      v(1, 0) = e * s;
      v(0, 1) = -std::conj(e) * s;
      v(1, 1) = c;
      g.v.push_back(v);
      g.w.push_back(0.5 * gl.weights[a] / static_cast<double>(n));
    }
  }
  return g;
}

Complex matrix_quad_once(const MatFn& f, const Rule1D& rule, size_t r, size_t angular) {
  if (r > 2) throw DimensionError("matrix_quadrature: non-invariant integrands need r <= 2");
  const AngularGrid ag = angular_grid(r, angular);
  EigFn g = [&](const std::vector<double>& lam) {
    CMat d = CMat::Zero(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(r));
    for (size_t i = 0; i < r; ++i) d(i, i) = lam[i];
    Complex acc(0.0, 0.0);
    for (size_t a = 0; a < ag.v.size(); ++a) acc += ag.w[a] * f(ag.v[a] * d * ag.v[a].adjoint());
    return acc;
  };
  return eig_quad_once(g, rule, r);
}

}  // namespace

IntegralEstimate eig_quadrature(const EigFn& g, const EigWeight& w, size_t r, size_t order) {
  if (r == 0 || r > 3) throw DimensionError("eig_quadrature: 1 <= r <= 3");
  check_weight(w);
  const size_t m = order ? order : default_order(w, r);
  const size_t m2 = m + std::max<size_t>(4, m / 4);
  IntegralEstimate e;
  e.method = "eig_quad";
  e.value = eig_quad_once(g, deterministic_rule(w, m), r);
  e.abs_error = std::abs(eig_quad_once(g, deterministic_rule(w, m2), r) - e.value);
  return e;
}

IntegralEstimate eig_quadrature(const EigFn& g, const Domain& d, size_t r, size_t order) {
  EigWeight w{d, 0.0, 0.0, 1.0};
  switch (d.tag) {
    case DomainTag::PositiveCone:
      return eig_quadrature(
          [g](const std::vector<double>& l) {
            double s = 0.0;
            for (double x : l) s += x;
            return g(l) * std::exp(s);
          },
          w, r, order);
    case DomainTag::FullSpace:
      return eig_quadrature(
          [g](const std::vector<double>& l) {
            double s = 0.0;
            for (double x : l) s += 0.5 * x * x;
            return g(l) * std::exp(s);
          },
          w, r, order);
    default:
      return eig_quadrature(g, w, r, order);
  }
}

IntegralEstimate matrix_quadrature(const MatFn& f, const EigWeight& w, size_t r, size_t order, size_t angular) {
  check_weight(w);
  const size_t m = order ? order : (r == 1 ? 48 : 24);
  IntegralEstimate e;
  e.method = "eig_quad";
  e.value = matrix_quad_once(f, deterministic_rule(w, m), r, angular);
  e.abs_error = std::abs(matrix_quad_once(f, deterministic_rule(w, m + 8), r, angular + 8) - e.value);
  return e;
}

IntegralEstimate matrix_quadrature_rule(const MatFn& f, const Rule1D& rule, size_t r, size_t angular) {
  IntegralEstimate e;
  e.method = "eig_quad";
  e.value = matrix_quad_once(f, rule, r, angular);
  return e;
}

// ---------- integrands ----------

namespace {

Complex logdet(const CMat& m) { return std::log(m.determinant()); }

double real_exponent(Complex a, const char* what) {
  if (std::abs(a.imag()) > 0.0) throw std::domain_error(std::string(what) + " must be real for numeric integration");
  return a.real();
}

}  // namespace

std::vector<Complex> flat_alpha(const CharacterParams& alpha) {
  std::vector<Complex> out;
  for (const auto& a : alpha.alpha) out.insert(out.end(), a.begin(), a.end());
  return out;
}

RadonIntegrand radon_integrand(const PartitionSpec& spec, const CMat& x, const CharacterParams& alpha) {
  if (!supported_normal_form(spec)) throw std::invalid_argument("radon_integrand: unsupported partition " + spec.str());
  if (alpha.spec != spec) throw std::invalid_argument("radon_integrand: alpha is for a different partition");
  const size_t r = spec.r;
  if (spec.n() == 4 && (static_cast<size_t>(x.rows()) != r || static_cast<size_t>(x.cols()) != r))
    throw DimensionError("radon_integrand: x must be r x r");
  const std::vector<Complex> a = flat_alpha(alpha);
  const CMat I = CMat::Identity(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(r));
  using V = std::vector<size_t>;
  const auto& p = spec.parts;
  RadonIntegrand out{spec, {}};
  if (p == V{1, 1, 1, 1}) {
    out.log_f = [=](const CMat& u) { return a[1] * logdet(u) + a[2] * logdet(I - u) + a[3] * logdet(I - u * x); };
  } else if (p == V{2, 1, 1}) {
    out.log_f = [=](const CMat& u) { return (u * x).trace() + a[2] * logdet(u) + a[3] * logdet(I - u); };
  } else if (p == V{2, 2}) {
    out.log_f = [=](const CMat& u) { return (u * x - u.inverse()).trace() + a[2] * logdet(u); };
  } else if (p == V{3, 1}) {
    out.log_f = [=](const CMat& u) { return (u * x - 0.5 * u * u).trace() + a[3] * logdet(u); };
  } else if (p == V{4}) {
    out.log_f = [=](const CMat& u) { return (u * x - (u * u * u) / 3.0).trace(); };
  } else if (p == V{1, 1, 1}) {
    out.log_f = [=](const CMat& u) { return a[1] * logdet(u) + a[2] * logdet(I - u); };
  } else if (p == V{2, 1}) {
    out.log_f = [=](const CMat& u) { return a[1] * u.trace() + a[2] * logdet(u); };
  } else {  // (3)
    out.log_f = [=](const CMat& u) { return a[1] * u.trace() - 0.5 * a[2] * (u * u).trace(); };
  }
  return out;
}

Complex character_log_integrand(const ComplexMatrix& z, const CharacterParams& alpha, const ComplexMatrix& u) {
  const size_t r = alpha.spec.r;
  if (z.rows() != 2 * r || z.cols() != alpha.spec.N()) throw DimensionError("character_log_integrand: z shape");
  ComplexMatrix t(r, 2 * r);
  t.set_sub(0, 0, ComplexMatrix::identity(r));
  t.set_sub(0, r, u);
  ComplexH h = iota_inv<Complex>(t * z, alpha.spec);
  return log_character(h, alpha).value;
}

double covariance_check_integrand(const PartitionSpec& spec, const ZMatrix& z, const ExactH& h,
                                  const CharacterParams& alpha, size_t samples, uint64_t seed) {
  if (z.spec != spec || h.spec != spec || alpha.spec != spec)
    throw std::invalid_argument("covariance_check_integrand: partition mismatch");
  z.validate();
  h.validate();
  const size_t r = spec.r;
  for (const auto& f : h.factors) {
    const Rational s = f.coeffs[0](0, 0);
    if (sgn(s) <= 0 || f.coeffs[0] != ExactMatrix::scalar(r, s))
      throw std::invalid_argument("covariance_check_integrand: domain-moving h rejected");
  }
  const ComplexMatrix zc = to_complex(z.data);
  const ComplexMatrix zhc = to_complex(z.data * embed_h(h));
  const Complex lchi = log_character(h, alpha).value;
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> ud(0.05, 0.95);
  double worst = 0.0;
  size_t used = 0;
  for (size_t k = 0; k < samples; ++k) {
    CMat v = sample_haar_unitary(r, rng);
    CMat d = CMat::Zero(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(r));
    for (size_t i = 0; i < r; ++i) d(i, i) = ud(rng);
    const ComplexMatrix u = from_cmat(v * d * v.adjoint());
    const Complex l1 = character_log_integrand(zc, alpha, u);
    const Complex l2 = character_log_integrand(zhc, alpha, u);
    if (!finite(l1) || !finite(l2)) continue;
    worst = std::max(worst, std::abs(l2 - l1 - lchi));
    ++used;
  }
  if (used == 0) throw std::domain_error("covariance_check_integrand: no admissible sample points");
  return worst;
}

IntegralPlan integral_plan(const PartitionSpec& spec, const CMat& x, const CharacterParams& alpha) {
  if (!supported_normal_form(spec)) throw std::invalid_argument("integral_plan: unsupported partition " + spec.str());
  const std::vector<Complex> a = flat_alpha(alpha);
  const size_t r = spec.r;
  const CMat I = CMat::Identity(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(r));
  using V = std::vector<size_t>;
  const auto& p = spec.parts;
  IntegralPlan plan;
  if (p == V{1, 1, 1, 1}) {
    plan.weight = {{DomainTag::BetaBox}, real_exponent(a[1], "alpha_1"), real_exponent(a[2], "alpha_2"), 1.0};
    const Complex e = a[3];
    plan.rest = [=](const CMat& u) { return std::exp(e * logdet(I - u * x)); };
  } else if (p == V{2, 1, 1}) {
    plan.weight = {{DomainTag::BetaBox}, real_exponent(a[2], "alpha_2"), real_exponent(a[3], "alpha_3"), 1.0};
    plan.rest = [=](const CMat& u) { return std::exp((u * x).trace()); };
  } else if (p == V{1, 1, 1}) {
    plan.weight = {{DomainTag::BetaBox}, real_exponent(a[1], "alpha_1"), real_exponent(a[2], "alpha_2"), 1.0};
    plan.rest = [](const CMat&) { return Complex(1.0, 0.0); };
  } else if (p == V{2, 1}) {
    const double rate = -real_exponent(a[1], "alpha_1");
    plan.weight = {{DomainTag::PositiveCone}, real_exponent(a[2], "alpha_2"), 0.0, rate};
    plan.rest = [](const CMat&) { return Complex(1.0, 0.0); };
  } else if (p == V{3}) {
    const Complex a1 = a[1], a2 = a[2];
    plan.weight = {{DomainTag::FullSpace}, 0.0, 0.0, 1.0};
    plan.rest = [=](const CMat& u) { return std::exp(a1 * u.trace() - 0.5 * (a2 - 1.0) * (u * u).trace()); };
  } else if (p == V{2, 2}) {
    Eigen::SelfAdjointEigenSolver<CMat> es(x, Eigen::EigenvaluesOnly);
    const double top = es.eigenvalues().maxCoeff();
    if (!(top < 0.0)) throw std::domain_error("(2,2): x must be negative definite");
    const double rate = -top;
    plan.weight = {{DomainTag::PositiveCone}, real_exponent(a[2], "alpha_2"), 0.0, rate};
    plan.rest = [=](const CMat& u) { return std::exp((u * (x + rate * I) - u.inverse()).trace()); };
  } else if (p == V{3, 1}) {
    const double a3 = real_exponent(a[3], "alpha_3");
    if (a3 < 0 || a3 != std::floor(a3)) throw std::domain_error("(3,1): alpha_3 must be a nonnegative integer");
    plan.weight = {{DomainTag::FullSpace}, 0.0, 0.0, 1.0};
    const int n3 = static_cast<int>(a3);
    plan.rest = [=](const CMat& u) { return std::exp((u * x).trace()) * std::pow(u.determinant(), n3); };
  } else {
    throw std::domain_error("(4): only the r = 1 rotated contour is supported (bessel_hermite_airy_eval)");
  }
  return plan;
}

// ---------- gamma_r ----------

const GammaCalibration& gamma_r_calibration(size_t r) {
  if (r == 0 || r > 3) throw DimensionError("gamma_r: 1 <= r <= 3");
  static const std::vector<GammaCalibration> table = [] {
    std::vector<GammaCalibration> t;
    for (size_t rr = 1; rr <= 3; ++rr) {
      const double a0 = static_cast<double>(rr) + 0.5;
      EigWeight w{{DomainTag::PositiveCone}, a0 - static_cast<double>(rr), 0.0, 1.0};
      const Complex v = eig_quadrature([](const std::vector<double>&) { return Complex(1.0, 0.0); }, w, rr).value;
      double prod = 1.0;
      for (size_t j = 0; j < rr; ++j) prod *= std::tgamma(a0 - static_cast<double>(j));
      GammaCalibration c;
      c.r = rr;
      c.constant = v.real() / prod;
      c.provenance = "eig_quadrature(etr(-U)|U|^{a-r}, a=" + std::to_string(a0).substr(0, 3) +
                     ") / prod_j Gamma(a-j), r=" + std::to_string(rr);
      t.push_back(c);
    }
    return t;
  }();
  return table[r - 1];
}

Complex gamma_r(Complex a, size_t r) {
  if (!(a.real() > static_cast<double>(r) - 1.0)) throw std::domain_error("gamma_r: need Re(a) > r - 1");
  Complex v = gamma_r_calibration(r).constant;
  for (size_t j = 0; j < r; ++j) v *= gamma_c(a - static_cast<double>(j));
  return v;
}

Complex hgf_prefactor(Complex a, Complex c, size_t r) { return gamma_r(c, r) / (gamma_r(a, r) * gamma_r(c - a, r)); }

HGFParams hgf_params_from_alpha(const CharacterParams& alpha) {
  const auto a = flat_alpha(alpha);
  const double r = static_cast<double>(alpha.spec.r);
  using V = std::vector<size_t>;
  if (alpha.spec.parts == V{1, 1, 1, 1}) return {true, a[1] + r, -a[3], a[1] + a[2] + 2.0 * r};
  if (alpha.spec.parts == V{2, 1, 1}) return {false, a[2] + r, 0.0, a[2] + a[3] + 2.0 * r};
  throw std::invalid_argument("hgf bridge defined for (1,1,1,1) and (2,1,1) only");
}

CharacterParams alpha_from_hgf(const HGFParams& p, size_t r) {
  const double rr = static_cast<double>(r);
  CharacterParams out;
  out.m = 2 * r;
  if (p.gauss) {
    out.spec = PartitionSpec(r, {1, 1, 1, 1});
    const Complex a1 = p.a - rr, a3 = -p.b, a2 = p.c - p.a - rr;
    out.alpha = {{-2.0 * rr - a1 - a2 - a3}, {a1}, {a2}, {a3}};
  } else {
    out.spec = PartitionSpec(r, {2, 1, 1});
    const Complex a2 = p.a - rr, a3 = p.c - p.a - rr;
    out.alpha = {{-2.0 * rr - a2 - a3, 1.0}, {a2}, {a3}};
  }
  return out;
}

// ---------- Bessel / Hermite-Weber / Airy ----------

IntegralEstimate bessel_hermite_airy_eval(const PartitionSpec& spec, const CMat& x, const CharacterParams& alpha,
                                          size_t budget) {
  using V = std::vector<size_t>;
  const size_t r = spec.r;
  const auto a = flat_alpha(alpha);
  if (static_cast<size_t>(x.rows()) != r || static_cast<size_t>(x.cols()) != r)
    throw DimensionError("bessel_hermite_airy_eval: x must be r x r");
  const HermMatrix xh(x, 1e-12);
  const auto ev = xh.eigenvalues();
  if (spec.parts == V{2, 2}) {
    if (r > 2) throw std::domain_error("(2,2): r <= 2 supported");
    if (!(ev.back() < 0.0)) throw std::domain_error("(2,2): x must be negative definite");
    const double a2 = real_exponent(a[2], "alpha_2");
    // e^{x u} and e^{-1/u} both negligible past these ends
    const double vmin = std::log(1.0 / 80.0);
    const double vmax = std::log((80.0 + 4.0 * std::abs(a2)) / -ev.back());
    const size_t n = budget ? budget : (r == 1 ? 400 : 120);
    const Rule1D rule = exp_trapezoid(vmin, vmax, n);
    const CMat X = xh.mat();
    MatFn f = [=](const CMat& u) { return std::exp((u * X - u.inverse()).trace() + a2 * logdet(u)); };
    return matrix_quadrature_rule(f, rule, r, r == 1 ? 1 : 20);
  }
  if (spec.parts == V{3, 1}) {
    if (r > 2) throw std::domain_error("(3,1): r <= 2 supported");
    const double a3 = real_exponent(a[3], "alpha_3");
    if (a3 < 0 || a3 != std::floor(a3))
      throw std::domain_error("(3,1): alpha_3 must be a nonnegative integer (single-valued power)");
    const int n3 = static_cast<int>(a3);
    const CMat X = xh.mat();
    MatFn f = [=](const CMat& u) { return std::exp((u * X).trace()) * std::pow(u.determinant(), n3); };
    const size_t m = budget ? budget : 60;
    IntegralEstimate e;
    e.method = "eig_quad";
    e.value = matrix_quadrature_rule(f, gauss_hermite(m), r, 20).value;
    e.abs_error = std::abs(matrix_quadrature_rule(f, gauss_hermite(m + 10), r, 24).value - e.value);
    return e;
  }
  if (spec.parts == V{4}) {
    if (r != 1) throw std::domain_error("(4): numeric evaluation only for r = 1 (rotated contour)");
    const double xv = ev[0];
    const Complex om = std::polar(1.0, 2.0 * std::numbers::pi / 3.0);
    const size_t panels = budget ? budget : 24;
    const double L = 12.0;
    Complex acc(0.0, 0.0);
    const Rule1D gl = gauss_legendre(20, 0.0, 1.0);
    for (size_t pnl = 0; pnl < panels; ++pnl) {
      const double lo = L * static_cast<double>(pnl) / static_cast<double>(panels);
      const double h = L / static_cast<double>(panels);
      for (size_t k = 0; k < gl.size(); ++k) {
        const double s = lo + h * gl.nodes[k];
        const double e3 = std::exp(-s * s * s / 3.0);
        // from infinity along conj(om) into 0, then out along om
        acc += h * gl.weights[k] * e3 * (om * std::exp(xv * s * om) - std::conj(om) * std::exp(xv * s * std::conj(om)));
      }
    }
    IntegralEstimate e;
    e.method = "eig_quad";
    e.value = acc / Complex(0.0, 1.0);
    return e;
  }
  throw std::invalid_argument("bessel_hermite_airy_eval: partition must be (2,2), (3,1) or (4)");
}

}  // namespace radon
