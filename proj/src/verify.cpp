#include "radon/verify.hpp"

#include <chrono>
#include <cmath>
#include <functional>
#include <numbers>
#include <sstream>

#include "radon/identities.hpp"
#include "radon/random_objects.hpp"
#include "radon/special.hpp"

namespace radon {

int criterion_of(const std::string& name) {
  if (name.size() < 4 || name[0] != 'c' || name[3] != '.') return 0;
  if (!std::isdigit(static_cast<unsigned char>(name[1])) || !std::isdigit(static_cast<unsigned char>(name[2]))) return 0;
  return (name[1] - '0') * 10 + (name[2] - '0');
}

namespace {

using Clock = std::chrono::steady_clock;

// exact suites: lhs = cases that agree, rhs = cases run, residual = mismatches
struct Tally {
  size_t ok = 0, total = 0;
  std::string first_failure;
  void record(bool good, const std::string& what) {
    ++total;
    if (good) ++ok;
    else if (first_failure.empty()) first_failure = what;
  }
};

CheckRecord tally_record(const std::string& name, const std::string& anchor, const Tally& t) {
  CheckRecord c;
  c.name = name;
  c.paper_anchor = anchor;
  c.lhs = Json{{"agree", t.ok}};
  if (!t.first_failure.empty()) c.lhs["first_failure"] = t.first_failure;
  c.rhs = Json{{"cases", t.total}};
  c.residual = static_cast<double>(t.total - t.ok);
  c.tolerance = 0.0;
  c.status = status_for(t.ok == t.total && t.total > 0);
  return c;
}

CheckRecord numeric_record(const std::string& name, const std::string& anchor, Json lhs, Json rhs, double residual,
                           double tol, bool conjecture = false) {
  CheckRecord c;
  c.name = name;
  c.paper_anchor = anchor;
  c.lhs = std::move(lhs);
  c.rhs = std::move(rhs);
  c.residual = residual;
  c.tolerance = tol;
  c.status = status_for(std::isfinite(residual) && residual <= tol, conjecture);
  return c;
}

// runs body, times it, converts an escaping exception into a failed record
void run_check(Report& rep, const std::string& name, const std::string& anchor,
               const std::function<std::vector<CheckRecord>()>& body) {
  const auto t0 = Clock::now();
  std::vector<CheckRecord> out;
  try {
    out = body();
  } catch (const std::exception& e) {
    CheckRecord c;
    c.name = name;
    c.paper_anchor = anchor;
    c.status = Status::fail;
    c.lhs = Json{{"error", e.what()}};
    c.rhs = nullptr;
    c.residual = INFINITY;
    out = {c};
  }
  const double ms = std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
  for (auto& c : out) {
    c.runtime_ms = ms / static_cast<double>(out.size());
    rep.checks.push_back(std::move(c));
  }
}

CharacterParams to_complex_params(const ExactParams& a) {
  CharacterParams c;
  c.spec = a.spec;
  c.m = a.m;
  for (const auto& blk : a.alpha) {
    std::vector<Complex> b;
    for (const auto& v : blk) b.push_back(to_complex(v));
    c.alpha.push_back(b);
  }
  return c;
}

PartitionSpec random_partition(ExactRng& rng, size_t r, size_t n) {
  std::vector<size_t> parts;
  size_t left = n, cap = n;
  while (left > 0) {
    const size_t p = rng.uniform(1, std::min(left, cap));
    parts.push_back(p);
    left -= p;
    cap = p;
  }
  return PartitionSpec(r, parts);
}

bool same_h(const ExactH& a, const ExactH& b) { return a.spec == b.spec && a.factors == b.factors; }

// ---- criterion 1 ----
std::vector<CheckRecord> c01(uint64_t seed) {
  ExactRng rng(seed);
  Tally t;
  for (int k = 0; k < 200; ++k) {
    const size_t p = rng.uniform(1, 8);
    const auto a = random_mu(rng, p), b = random_mu(rng, p);
    const bool ok = mu_matrix(a) * mu_matrix(b) == mu_matrix(mu_compose(a, b));
    t.record(ok, "p=" + std::to_string(p) + " case " + std::to_string(k));
  }
  return {tally_record("c01.mu_group_law", "mu-group-law", t)};
}

// ---- criterion 2 ----
std::vector<CheckRecord> c02(uint64_t seed) {
  ExactRng rng(seed);
  // n <= 4, at most two multiplicity classes, multiplicities <= 3
  const std::vector<std::vector<size_t>> shapes = {{1}, {2}, {3}, {4}, {1, 1}, {1, 1, 1}, {2, 1}, {2, 2}, {3, 1}, {2, 1, 1}};
  Tally round, accept;
  for (int k = 0; k < 100; ++k) {
    const PartitionSpec spec(rng.uniform(1, 3), shapes[rng.uniform(0, shapes.size() - 1)]);
    const ExactH h = random_h(rng, spec, false);
    const ExactWeyl w = random_weyl(rng, spec);
    const ExactMatrix x = embed_h(h) * weyl_matrix(w);
    const std::string tag = spec.str() + " r=" + std::to_string(spec.r);
    const Decomposition d = normalizer_decompose(x, spec);
    round.record(same_h(d.h, h) && d.w == w, tag);
    accept.record(normalizer_test(x, spec), tag);
  }
  return {tally_record("c02.decompose_roundtrip", "normalizer-semidirect-decomposition", round),
          tally_record("c02.normalizer_test_accepts", "normalizer-semidirect-decomposition", accept)};
}

// ---- criterion 3 ----

// group-level certificate: some x h x^{-1} leaves the H_lambda pattern
bool certified_non_normalizer(ExactRng& rng, const ExactMatrix& x, const PartitionSpec& spec) {
  const ExactMatrix xinv = inverse(x);
  for (int k = 0; k < 4; ++k) {
    const ExactMatrix conj = x * embed_h(random_h(rng, spec, false)) * xinv;
    if (!in_h_lambda_span(conj, spec)) return true;
  }
  return false;
}

std::vector<CheckRecord> c03(uint64_t seed) {
  ExactRng rng(seed);
  const std::vector<std::vector<size_t>> shapes = {{2}, {3}, {1, 1}, {2, 1}, {1, 1, 1}, {2, 2}, {3, 1}, {2, 1, 1}};
  Tally t;
  int done = 0;
  while (done < 50) {
    const PartitionSpec spec(rng.uniform(1, 3), shapes[rng.uniform(0, shapes.size() - 1)]);
    ExactMatrix x = embed_h(random_h(rng, spec, false)) * weyl_matrix(random_weyl(rng, spec));
    const size_t nb = spec.n(), r = spec.r;
    for (size_t bi = 1; bi < nb; ++bi)
      for (size_t bj = 0; bj < bi; ++bj)
        for (size_t a = 0; a < r; ++a)
          for (size_t b = 0; b < r; ++b) x(bi * r + a, bj * r + b) += rng.rational();
    if (sgn(det(x)) == 0 || !certified_non_normalizer(rng, x, spec)) continue;
    ++done;
    t.record(!normalizer_test(x, spec), spec.str() + " r=" + std::to_string(r) + " accepted");
  }
  return {tally_record("c03.lie_criterion_rejects", "lie-criterion", t)};
}

// ---- criterion 4 ----
std::vector<CheckRecord> c04(uint64_t seed) {
  ExactRng rng(seed);
  Tally xi, theta;
  for (int k = 0; k < 100; ++k) {
    const PartitionSpec spec = random_partition(rng, rng.uniform(1, 3), rng.uniform(1, 6));
    const ExactH h = random_h(rng, spec, true);
    const ExactWeyl w = random_weyl(rng, spec);
    const ExactH hp = right_action(h, w);
    const std::string tag = spec.str() + " r=" + std::to_string(spec.r);
    xi.record(xi_matrix(hp) == xi_matrix(h) * weyl_matrix(w), tag);
    ExactParams a;
    a.spec = spec;
    a.m = 2 * spec.r;
    for (size_t p : spec.parts) {
      std::vector<Rational> blk;
      for (size_t j = 0; j < p; ++j) blk.push_back(rng.rational());
      a.alpha.push_back(blk);
    }
    theta.record(log_character_theta_part(hp, a) == log_character_theta_part(h, act_on_params(a, w)), tag);
  }
  return {tally_record("c04.xi_equivariance", "character-equivariance", xi),
          tally_record("c04.theta_character_equivariance", "character-equivariance", theta)};
}

// ---- criterion 5 ----
ExactParams random_admissible(ExactRng& rng, const PartitionSpec& spec) {
  ExactParams a;
  a.spec = spec;
  a.m = 2 * spec.r;
  Rational sum0 = 0;
  for (size_t k = 0; k < spec.length(); ++k) {
    const size_t p = spec.parts[k];
    std::vector<Rational> blk(p);
    blk[0] = Rational(static_cast<long>(rng.uniform(0, 40)) - 20, static_cast<long>(rng.uniform(2, 4)));
    blk[0].canonicalize();
    sum0 += blk[0];
    for (size_t j = 1; j + 1 < p; ++j) blk[j] = rng.rational();
    if (p >= 2) {
      const Rational c1 = rng.nonzero_rational();
      Rational top = 1;
      for (size_t e = 0; e + 1 < p; ++e) top /= c1;
      blk[p - 1] = top;
    }
    a.alpha.push_back(blk);
  }
  // alpha_0 sum to -m; integrality of alpha_0 left free, single-factor shapes force alpha_0 = -m
  a.alpha.back()[0] -= sum0 + static_cast<long>(a.m);
  return a;
}

std::vector<CheckRecord> c05(uint64_t seed) {
  ExactRng rng(seed);
  const std::vector<std::vector<size_t>> shapes = {{2, 1}, {3}, {2, 1, 1}, {2, 2}, {3, 1}, {4}};
  Tally exact;
  double worst = 0.0;
  for (int k = 0; k < 100; ++k) {
    const PartitionSpec spec(rng.uniform(1, 3), shapes[k % shapes.size()]);
    const ExactParams a = random_admissible(rng, spec);
    const ExactNormalizeResult er = normalize_params_exact(a);
    const ExactParams beta = act_on_params(a, er.w);
    bool ok = true;
    for (size_t f = 0; f < spec.length(); ++f) {
      const size_t p = spec.parts[f];
      ok = ok && beta.alpha[f][0] == a.alpha[f][0];
      if (p < 2) continue;
      for (size_t j = 1; j + 1 < p; ++j) ok = ok && sgn(beta.alpha[f][j]) == 0;
      ok = ok && beta.alpha[f][p - 1] == 1;
    }
    exact.record(ok, spec.str() + " r=" + std::to_string(spec.r));

    const CharacterParams ac = to_complex_params(a);
    const NormalizeResult cr = normalize_params(ac);
    const CharacterParams bc = act_on_params(ac, cr.w);
    for (size_t f = 0; f < spec.length(); ++f) {
      const size_t p = spec.parts[f];
      worst = std::max(worst, std::abs(bc.alpha[f][0] - ac.alpha[f][0]) / std::max(1.0, std::abs(ac.alpha[f][0])));
      if (p < 2) continue;
      for (size_t j = 1; j + 1 < p; ++j) worst = std::max(worst, std::abs(bc.alpha[f][j]));
      worst = std::max(worst, std::abs(bc.alpha[f][p - 1] - 1.0));
    }
  }
  return {tally_record("c05.normalize_exact", "parameter-normalization", exact),
          numeric_record("c05.normalize_complex", "parameter-normalization", Json{{"max_deviation", worst}},
                         Json{{"target", "(alpha_0, 0, ..., 0, 1)"}}, worst, 1e-12)};
}

// ---- criterion 6 ----
std::vector<CheckRecord> c06(uint64_t seed) {
  ExactRng rng(seed);
  const std::vector<std::vector<size_t>> shapes = {{1, 1, 1}, {2, 1}, {3}, {1, 1, 1, 1}, {2, 1, 1}, {2, 2}, {3, 1}, {4}};
  std::vector<CheckRecord> out;
  for (const auto& parts : shapes) {
    Tally t;
    for (int k = 0; k < 20; ++k) {
      const PartitionSpec spec(rng.uniform(1, 3), parts);
      const ZMatrix z = random_z(rng, spec);
      const NormalFormResult nf = normal_form(z);
      ExactMatrix param;
      const bool table = matches_table(nf.x, param);
      const bool witness = inverse(nf.witness.g) * z.data * embed_h(nf.witness.h) == nf.x.data;
      t.record(table && witness, "r=" + std::to_string(spec.r) + (table ? " witness" : " table"));
    }
    std::string tag = PartitionSpec(1, parts).str();
    for (auto& ch : tag)
      if (ch == ',') ch = '_';
    out.push_back(tally_record("c06.normal_form." + tag, "normal-form-tables", t));
  }
  return out;
}

// ---- criterion 7 ----
struct SigmaCase {
  std::string name;
  Permutation sigma;
  std::function<ExactMatrix(const ExactMatrix&)> map;
};

std::vector<CheckRecord> c07(uint64_t seed) {
  ExactRng rng(seed);
  auto inv = [](const ExactMatrix& x) { return inverse(x); };
  auto one_minus = [](const ExactMatrix& x) { return ExactMatrix(ExactMatrix::identity(x.rows()) - x); };
  auto pfaff = [](const ExactMatrix& x) { return ExactMatrix(x * inverse(ExactMatrix(x - ExactMatrix::identity(x.rows())))); };
  auto same = [](const ExactMatrix& x) { return x; };
  auto inv_one_minus = [](const ExactMatrix& x) { return inverse(ExactMatrix(ExactMatrix::identity(x.rows()) - x)); };
  auto one_minus_inv = [](const ExactMatrix& x) { return ExactMatrix(ExactMatrix::identity(x.rows()) - inverse(x)); };
  const std::vector<SigmaCase> cases = {
      {"t01", transposition(4, 0, 1), inv},
      {"t02", transposition(4, 0, 2), one_minus},
      {"t03", transposition(4, 0, 3), pfaff},
      {"t12", transposition(4, 1, 2), pfaff},
      {"t13", transposition(4, 1, 3), one_minus},
      {"t23", transposition(4, 2, 3), inv},
      {"klein_01_23", perm_compose(transposition(4, 0, 1), transposition(4, 2, 3)), same},
      {"klein_02_13", perm_compose(transposition(4, 0, 2), transposition(4, 1, 3)), same},
      {"klein_03_12", perm_compose(transposition(4, 0, 3), transposition(4, 1, 2)), same},
      {"cycle_012", cycle(4, {0, 1, 2}), inv_one_minus},
      {"cycle_021", cycle(4, {0, 2, 1}), one_minus_inv},
  };
  std::vector<CheckRecord> out;
  for (const auto& cs : cases) {
    Tally t;
    for (int k = 0; k < 20; ++k) {
      const size_t r = rng.uniform(1, 3);
      const ExactMatrix x = random_generic_x(rng, r);
      const SigmaAction sa = sigma_action_x(cs.sigma, x);
      const PartitionSpec spec(r, {1, 1, 1, 1});
      const ExactMatrix z = table_normal_form(spec, x).data * perm_block_matrix<Rational>(cs.sigma, r);
      const bool map_ok = sa.x_new == cs.map(x);
      const bool wit_ok =
          inverse(sa.witness.g) * z * embed_h(sa.witness.h) == table_normal_form(spec, sa.x_new).data;
      // beta_a = alpha_{sigma(a)}
      const bool perm_ok = sa.alpha_perm == cs.sigma;
      t.record(map_ok && wit_ok && perm_ok, std::string("r=") + std::to_string(r) + (map_ok ? "" : " map") +
                                                (wit_ok ? "" : " witness") + (perm_ok ? "" : " alpha"));
    }
    out.push_back(tally_record("c07.sigma." + cs.name, "transposition-table", t));
  }
  return out;
}

// ---- numeric criteria ----

Json complex_json(Complex z) { return to_json(z); }

Json method_json(const IdentityReport& rep, const std::string& side, const std::string& method) {
  for (const auto& m : rep.methods)
    if (m.side == side && m.method == method)
      return Json{{"value", complex_json(m.value)}, {"stderr", m.std_error}, {"z_vs_series", m.z_vs_series}};
  return nullptr;
}

void identity_records(std::vector<CheckRecord>& out, const std::string& prefix, const std::string& anchor,
                      const IdentityReport& rep, double series_tol) {
  Json lhs{{"series", complex_json(rep.lhs)}, {"trunc", rep.trunc}};
  Json rhs{{"series", complex_json(rep.rhs)}, {"trunc_residuals", rep.trunc_residuals}};
  out.push_back(numeric_record(prefix + ".series", anchor, lhs, rhs, rep.residual, series_tol, rep.conjecture));
  if (rep.has_mc)
    out.push_back(numeric_record(prefix + ".mc", anchor, method_json(rep, "lhs", "mc"), method_json(rep, "rhs", "mc"),
                                 rep.mc_sigma, 3.0, rep.conjecture));
  if (rep.has_quad)
    out.push_back(numeric_record(prefix + ".quad", anchor, method_json(rep, "lhs", "eig_quad"),
                                 method_json(rep, "rhs", "eig_quad"), rep.quad_residual, series_tol, rep.conjecture));
}

// classical Euler integral for 2F1(a, b; c; x), r = 1, Re c > Re a > 0
double euler_2f1(double a, double b, double c, double x) {
  const Rule1D rule = gauss_jacobi01(80, a - 1.0, c - a - 1.0);
  double num = 0.0, den = 0.0;
  for (size_t i = 0; i < rule.size(); ++i) {
    num += rule.weights[i] * std::pow(1.0 - x * rule.nodes[i], -b);
    den += rule.weights[i];
  }
  return num / den;
}

Json scalar_json(double v) { return Json{{"value", v}}; }

std::vector<CheckRecord> c08() {
  std::vector<CheckRecord> out;
  for (size_t r = 1; r <= 3; ++r)
    for (auto [a, b] : {std::pair{2.3, 3.1}, std::pair{1.7, 4.2}}) {
      const BetaSymmetryReport br = check_beta_symmetry(a, b, r);
      std::ostringstream name;
      name << "c08.beta_symmetry.r" << r << ".a" << a << ".b" << b;
      out.push_back(numeric_record(name.str(), "beta-symmetry", complex_json(br.forward), complex_json(br.backward),
                                   br.residual, 1e-8));
    }
  // r = 1 against the classical beta function
  const BetaSymmetryReport b1 = check_beta_symmetry(2.3, 3.1, 1);
  const double oracle = beta_fn(2.3, 3.1);
  out.push_back(numeric_record("c08.beta_symmetry.r1.classical", "beta-symmetry", complex_json(b1.forward),
                               scalar_json(oracle), std::abs(b1.forward.real() / oracle - 1.0), 1e-8));
  return out;
}

IdentityBudget budget_for(const VerifyOptions& opt, uint64_t seed, bool numeric) {
  IdentityBudget b;
  b.trunc = opt.trunc;
  b.samples = numeric ? opt.samples : 0;
  b.seed = seed;
  b.quad_order = numeric ? 40 : 0;
  b.mc.threads = opt.threads;
  return b;
}

std::vector<CheckRecord> c09(const VerifyOptions& opt) {
  std::vector<CheckRecord> out;
  const IdentityReport r1 = check_kummer(1.0, 2.0, HermMatrix::diag({1.0}), budget_for(opt, opt.seed, false));
  identity_records(out, "c09.kummer.r1", "kummer-transformation", r1, 1e-10);
  const double e1 = std::numbers::e - 1.0;
  out.push_back(numeric_record("c09.kummer.r1.classical", "kummer-transformation", complex_json(r1.lhs),
                               scalar_json(e1), std::abs(r1.lhs - e1), 1e-10));
  const IdentityReport r2 = check_kummer(0.9, 2.2, HermMatrix::diag({0.4, -0.3}), budget_for(opt, opt.seed, true));
  identity_records(out, "c09.kummer.r2", "kummer-transformation", r2, 1e-3);
  return out;
}

std::vector<CheckRecord> c10(const VerifyOptions& opt) {
  std::vector<CheckRecord> out;
  const double a = 0.5, b = 0.7, c = 1.9, x = 0.3;
  const IdentityReport r1 = check_pfaff(a, b, c, HermMatrix::diag({x}), budget_for(opt, opt.seed + 10, false));
  identity_records(out, "c10.pfaff.r1", "pfaff-transformation", r1, 1e-8);
  const double oracle = euler_2f1(a, b, c, x);
  out.push_back(numeric_record("c10.pfaff.r1.classical", "pfaff-transformation", complex_json(r1.lhs),
                               scalar_json(oracle), std::abs(r1.lhs - oracle) / oracle, 1e-8));
  const IdentityReport r2 =
      check_pfaff(0.8, 1.1, 2.4, HermMatrix::diag({0.2, 0.35}), budget_for(opt, opt.seed + 10, true));
  identity_records(out, "c10.pfaff.r2", "pfaff-transformation", r2, 1e-3);
  return out;
}

std::vector<CheckRecord> c11(const VerifyOptions& opt) {
  std::vector<CheckRecord> out;
  const double a = 0.5, b = 0.7, c = 1.9, x = 0.3;
  for (const auto& rep : check_conjecture(a, b, c, HermMatrix::diag({x}), budget_for(opt, opt.seed + 20, false)))
    identity_records(out, "c11." + rep.name + ".r1", rep.name, rep, 1e-8);
  // r = 1: the right sides are the classical Pfaff and Euler transforms of the Euler integral
  const double oracle = euler_2f1(a, b, c, x);
  const double pf = std::pow(1.0 - x, -a) * euler_2f1(a, c - b, c, x / (x - 1.0));
  const double eu = std::pow(1.0 - x, c - a - b) * euler_2f1(c - a, c - b, c, x);
  out.push_back(numeric_record("c11.conjecture-1.r1.classical", "conjecture-1", scalar_json(oracle), scalar_json(pf),
                               std::abs(pf / oracle - 1.0), 1e-8, true));
  out.push_back(numeric_record("c11.conjecture-2.r1.classical", "conjecture-2", scalar_json(oracle), scalar_json(eu),
                               std::abs(eu / oracle - 1.0), 1e-8, true));
  for (const auto& rep :
       check_conjecture(0.8, 1.1, 2.4, HermMatrix::diag({0.2, 0.35}), budget_for(opt, opt.seed + 20, true)))
    identity_records(out, "c11." + rep.name + ".r2", rep.name, rep, 1e-3);
  return out;
}

std::vector<CheckRecord> c12() {
  std::vector<CheckRecord> out;
  const double tol = 1e-6;
  const SeriesValue g = hgf_series_2F1(1.0, 1.0, 2.0, HermMatrix::diag({0.5}), 200);
  out.push_back(numeric_record("c12.gauss_2f1", "classical-reductions", complex_json(g.value), scalar_json(1.3862944),
                               std::abs(g.value - 1.3862944), tol));
  const SeriesValue k = hgf_series_1F1(1.0, 2.0, HermMatrix::diag({1.0}), 200);
  out.push_back(numeric_record("c12.kummer_1f1", "classical-reductions", complex_json(k.value), scalar_json(1.7182818),
                               std::abs(k.value - 1.7182818), tol));

  const PartitionSpec s4(1, {4});
  const IntegralEstimate airy = bessel_hermite_airy_eval(s4, CMat::Zero(1, 1), CharacterParams{s4, {{-2.0, 0.0, 0.0, 1.0}}, 2});
  const double airy_oracle = 2.0 * std::numbers::pi / (std::cbrt(9.0) * std::tgamma(2.0 / 3.0));
  out.push_back(numeric_record("c12.airy_point", "classical-reductions", to_json(airy), scalar_json(airy_oracle),
                               std::abs(airy.value - airy_oracle), tol));

  const PartitionSpec s22(1, {2, 2});
  const IntegralEstimate bessel = bessel_hermite_airy_eval(s22, CMat::Constant(1, 1, -1.0),
                                                           CharacterParams{s22, {{-2.0, 1.0}, {0.0, 1.0}}, 2});
  const double bessel_oracle = 2.0 * std::cyl_bessel_k(1.0, 2.0);
  out.push_back(numeric_record("c12.bessel_point", "classical-reductions", to_json(bessel), scalar_json(bessel_oracle),
                               std::abs(bessel.value - bessel_oracle), tol));

  const PartitionSpec s31(1, {3, 1});
  const IntegralEstimate herm =
      bessel_hermite_airy_eval(s31, CMat::Zero(1, 1), CharacterParams{s31, {{-2.0, 0.0, 1.0}, {0.0}}, 2});
  const double herm_oracle = std::sqrt(2.0 * std::numbers::pi);
  out.push_back(numeric_record("c12.hermite_point", "classical-reductions", to_json(herm), scalar_json(herm_oracle),
                               std::abs(herm.value - herm_oracle), tol));
  return out;
}

}  // namespace

Report verify_all(const VerifyOptions& opt) {
  Report rep;
  rep.config = Json{{"command", "verify-all"},
                    {"suite", opt.full ? "full" : "quick"},
                    {"seed", opt.seed},
                    {"samples", opt.full ? opt.samples : 0},
                    {"trunc", opt.full ? opt.trunc : 0},
                    {"mc_chunk", McOptions{}.chunk},
                    {"quad_order", opt.full ? 40 : 0}};
  const uint64_t s = opt.seed;
  run_check(rep, "c01.mu_group_law", "mu-group-law", [&] { return c01(s + 1); });
  run_check(rep, "c02.decompose_roundtrip", "normalizer-semidirect-decomposition", [&] { return c02(s + 2); });
  run_check(rep, "c03.lie_criterion_rejects", "lie-criterion", [&] { return c03(s + 3); });
  run_check(rep, "c04.xi_equivariance", "character-equivariance", [&] { return c04(s + 4); });
  run_check(rep, "c05.normalize", "parameter-normalization", [&] { return c05(s + 5); });
  run_check(rep, "c06.normal_form", "normal-form-tables", [&] { return c06(s + 6); });
  run_check(rep, "c07.sigma", "transposition-table", [&] { return c07(s + 7); });
  if (!opt.full) return rep;
  run_check(rep, "c08.beta_symmetry", "beta-symmetry", [&] { return c08(); });
  run_check(rep, "c09.kummer", "kummer-transformation", [&] { return c09(opt); });
  run_check(rep, "c10.pfaff", "pfaff-transformation", [&] { return c10(opt); });
  run_check(rep, "c11.conjecture", "conjecture-1", [&] { return c11(opt); });
  run_check(rep, "c12.classical", "classical-reductions", [&] { return c12(); });
  return rep;
}

}  // namespace radon
