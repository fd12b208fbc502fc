#include <CLI11.hpp>
#include <chrono>
#include <iostream>
#include <optional>

#include "radon/identities.hpp"
#include "radon/json_io.hpp"
#include "radon/report.hpp"
#include "radon/verify.hpp"

using namespace radon;

namespace {

struct Global {
  uint64_t seed = 7;
  size_t samples = 100000;
  size_t trunc = 20;
  std::optional<double> tol;
  std::string format = "text";
};

Json base_config(const Global& g, const std::string& command) {
  Json c;
  c["command"] = command;
  c["seed"] = g.seed;
  c["samples"] = g.samples;
  c["trunc"] = g.trunc;
  c["tol"] = g.tol ? Json(*g.tol) : Json(nullptr);
  return c;
}

void print_text(const Json& j, const std::string& indent = "") {
  if (!j.is_object()) {
    std::cout << indent << (j.is_string() ? j.get<std::string>() : j.dump()) << "\n";
    return;
  }
  for (const auto& [k, v] : j.items())
    std::cout << indent << k << ": " << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
}

// single results: text prints a bare "value" when that is all there is
int emit(const Global& g, const Json& j) {
  if (g.format == "json") {
    std::cout << j.dump(2) << "\n";
  } else if (g.format == "text") {
    if (j.is_object() && j.size() == 1 && j.contains("value")) print_text(j["value"]);
    else print_text(j);
  } else {
    throw ConfigError("unknown format " + g.format + " (json|text)");
  }
  return 0;
}

struct Stopwatch {
  std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();
  double ms() const { return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count(); }
};

int emit(const Global& g, Report& rep, const Stopwatch& sw) {
  for (auto& c : rep.checks) c.runtime_ms = sw.ms() / static_cast<double>(rep.checks.size());
  std::cout << emit_report(rep, g.format);
  return exit_code(rep);
}

int emit(const Global& g, const Report& rep) {
  std::cout << emit_report(rep, g.format);
  return exit_code(rep);
}

double tol_or(const Global& g, double dflt) { return g.tol ? *g.tol : dflt; }

PartitionSpec spec_from(const std::string& partition, size_t r) {
  try {
    return parse_partition(partition, r);
  } catch (const std::invalid_argument& e) {
    throw ConfigError(e.what());
  }
}

HermMatrix herm_arg(const std::string& arg) {
  const auto first = arg.find_first_not_of(" \t");
  Json j;
  if (first != std::string::npos && (arg[first] == '{' || arg[first] == '[')) {
    j = load_json_arg(arg);
  } else {
    j["diag"] = Json::array();
    for (const auto& q : parse_rational_list(arg)) j["diag"].push_back(to_double(q));
  }
  try {
    return HermMatrix(json_cmat(j), 1e-12);
  } catch (const std::invalid_argument& e) {
    throw ConfigError(e.what());
  }
}

Complex complex_arg(const std::string& s) {
  try {
    return json_complex(Json::parse(s));
  } catch (const Json::parse_error&) {
    return to_complex(parse_rational(s));
  }
}

CheckRecord record_from(const IdentityReport& rep, const std::string& anchor, double tol, bool use_mc) {
  CheckRecord c;
  c.name = rep.name;
  c.paper_anchor = anchor;
  Json lhs{{"series", to_json(rep.lhs)}}, rhs{{"series", to_json(rep.rhs)}};
  for (const auto& m : rep.methods) {
    if (m.method == "series") continue;
    Json v{{"value", to_json(m.value)}, {"stderr", m.std_error}};
    (m.side == "lhs" ? lhs : rhs)[m.method] = v;
  }
  rhs["trunc_residuals"] = rep.trunc_residuals;
  c.lhs = lhs;
  c.rhs = rhs;
  c.residual = rep.residual;
  c.tolerance = tol;
  bool ok = std::isfinite(rep.residual) && rep.residual <= tol;
  if (use_mc && rep.has_mc) ok = ok && rep.mc_sigma <= 3.0;
  c.status = status_for(ok, rep.conjecture);
  return c;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact and numeric tools for Jordan-group characters, Weyl normalizers and matrix integrals"};
  app.fallthrough();
  app.require_subcommand(1);
  Global g;
  app.add_option("--seed", g.seed, "RNG seed")->capture_default_str();
  app.add_option("--samples", g.samples, "Monte Carlo samples")->capture_default_str();
  app.add_option("--trunc", g.trunc, "series truncation weight")->capture_default_str();
  app.add_option("--tol", g.tol, "tolerance override for checks");
  app.add_option("--format", g.format, "json | text")->capture_default_str();

  std::function<int()> action;

  // mu
  auto* mu = app.add_subcommand("mu", "mu_{i,j}(c): coefficient of T^j in (c1 T + c2 T^2 + ...)^i");
  size_t mu_p = 0, mu_i = 0, mu_j = 0;
  std::string mu_c;
  mu->add_option("--p", mu_p)->required();
  mu->add_option("--i", mu_i)->required();
  mu->add_option("--j", mu_j)->required();
  mu->add_option("--c", mu_c, "c_1,...,c_{p-1}")->required();
  mu->callback([&] {
    action = [&] {
      MuVector<Rational> c;
      c.p = mu_p;
      c.c = parse_rational_list(mu_c);
      if (mu_p == 0 || c.c.size() != mu_p - 1) throw ConfigError("--c needs p - 1 entries");
      if (mu_i >= mu_p || mu_j >= mu_p) throw ConfigError("i and j must be < p");
      return emit(g, Json{{"value", format_rational(mu_eval(mu_i, mu_j, c))}});
    };
  });

  // jet
  auto* jet = app.add_subcommand("jet", "jet algebra in Mat(r)[w]/(w^p)");
  std::string jet_op, jet_a, jet_b;
  size_t jet_r = 1;
  jet->add_option("--op", jet_op, "mul | inv | log | exp | embed")->required();
  jet->add_option("--r", jet_r)->required();
  jet->add_option("--a", jet_a, "coefficient list (JSON or file)")->required();
  jet->add_option("--b", jet_b, "second operand for mul");
  jet->callback([&] {
    action = [&] {
      const ExactJet a = json_exact_jet(load_json_arg(jet_a), jet_r);
      if (jet_op == "mul") {
        if (jet_b.empty()) throw ConfigError("mul needs --b");
        return emit(g, to_json(jet_mul(a, json_exact_jet(load_json_arg(jet_b), jet_r))));
      }
      if (jet_op == "inv") return emit(g, to_json(jet_inv(a)));
      if (jet_op == "log") return emit(g, to_json(jet_log(a)));
      if (jet_op == "exp") return emit(g, to_json(jet_exp(a)));
      if (jet_op == "embed") return emit(g, Json{{"value", to_json(embed_jet(a))}});
      throw ConfigError("unknown jet op " + jet_op);
    };
  });

  // character
  auto* ch = app.add_subcommand("character", "log chi(h; alpha) for h in H_lambda");
  std::string ch_params, ch_h;
  long ch_branch = 0;
  ch->add_option("--params", ch_params, "{partition, r, alpha[, m]}")->required();
  ch->add_option("--element", ch_h, "h: one coefficient list per part")->required();
  ch->add_option("--branch", ch_branch);
  ch->callback([&] {
    action = [&] {
      const CharacterParams p = json_params(load_json_arg(ch_params));
      const ExactH h = json_exact_h(load_json_arg(ch_h), p.spec);
      const LogCharacterValue v = log_character(h, p, ch_branch);
      const AssumptionReport a = check_assumption(p);
      return emit(g, Json{{"log_chi", to_json(v.value)},
                          {"branch", v.branch_note},
                          {"assumption_ok", a.ok},
                          {"violations", a.violations}});
    };
  });

  // weyl
  auto* weyl = app.add_subcommand("weyl", "Weyl-group analogue W_lambda");
  weyl->require_subcommand(1);
  std::string w_partition, w_a, w_b, w_x, w_params;
  size_t w_r = 1;
  bool w_exact = false;
  auto weyl_sub = [&](const std::string& name, const std::string& help) {
    auto* s = weyl->add_subcommand(name, help);
    s->add_option("--partition", w_partition, "e.g. 2,1,1")->required();
    s->add_option("--r", w_r)->required();
    return s;
  };
  auto* w_compose = weyl_sub("compose", "a * b");
  w_compose->add_option("--a", w_a)->required();
  w_compose->add_option("--b", w_b)->required();
  auto* w_inverse = weyl_sub("inverse", "a^{-1}");
  w_inverse->add_option("--a", w_a)->required();
  auto* w_matrix = weyl_sub("matrix", "N x N matrix of a");
  w_matrix->add_option("--a", w_a)->required();
  auto* w_rho = weyl_sub("rho", "n x n compression");
  w_rho->add_option("--a", w_a)->required();
  auto* w_decompose = weyl_sub("decompose", "x = embed(h) W(w)");
  w_decompose->add_option("--x", w_x, "N x N rational matrix")->required();
  auto* w_norm = weyl->add_subcommand("normalize-params", "w with alpha.rho(w)^T = (alpha_0, 0, ..., 0, 1)");
  w_norm->add_option("--params", w_params)->required();
  w_norm->add_flag("--exact", w_exact, "rational arithmetic (alpha given as rationals)");

  auto weyl_of = [&](const std::string& arg, const PartitionSpec& spec) { return json_exact_weyl(load_json_arg(arg), spec); };
  w_compose->callback([&] {
    action = [&] {
      const PartitionSpec spec = spec_from(w_partition, w_r);
      return emit(g, to_json(weyl_mul(weyl_of(w_a, spec), weyl_of(w_b, spec))));
    };
  });
  w_inverse->callback([&] {
    action = [&] { return emit(g, to_json(weyl_inverse(weyl_of(w_a, spec_from(w_partition, w_r))))); };
  });
  w_matrix->callback([&] {
    action = [&] { return emit(g, Json{{"value", to_json(weyl_matrix(weyl_of(w_a, spec_from(w_partition, w_r))))}}); };
  });
  w_rho->callback([&] {
    action = [&] { return emit(g, Json{{"value", to_json(rho(weyl_of(w_a, spec_from(w_partition, w_r))))}}); };
  });
  w_decompose->callback([&] {
    action = [&] {
      const PartitionSpec spec = spec_from(w_partition, w_r);
      const ExactMatrix x = json_exact_matrix(load_json_arg(w_x));
      if (x.rows() != spec.N() || x.cols() != spec.N()) throw ConfigError("x must be N x N");
      if (!normalizer_test(x, spec)) {
        emit(g, Json{{"normalizer", false}});
        return 1;
      }
      const Decomposition d = normalizer_decompose(x, spec);
      return emit(g, Json{{"normalizer", true}, {"h", to_json(d.h)}, {"w", to_json(d.w)}});
    };
  });
  w_norm->callback([&] {
    action = [&] {
      const Json j = load_json_arg(w_params);
      if (w_exact) {
        const PartitionSpec spec = json_partition(j);
        ExactParams a;
        a.spec = spec;
        a.m = j.value("m", 2 * spec.r);
        const Json& al = j.at("alpha");
        if (al.size() != spec.length()) throw ConfigError("exact alpha: one block per factor");
        for (size_t k = 0; k < al.size(); ++k) {
          std::vector<Rational> blk;
          for (const auto& v : al[k]) blk.push_back(json_rational(v));
          a.alpha.push_back(blk);
        }
        a.validate();
        const ExactNormalizeResult r = normalize_params_exact(a);
        Json beta = Json::array();
        for (const auto& blk : r.beta.alpha) {
          Json b = Json::array();
          for (const auto& v : blk) b.push_back(to_json(v));
          beta.push_back(b);
        }
        return emit(g, Json{{"beta", beta}, {"w", to_json(r.w)}});
      }
      const NormalizeResult r = normalize_params(json_params(j));
      return emit(g, Json{{"beta", to_json(r.beta)}, {"w", to_json(r.w)}});
    };
  });

  // normal-form
  auto* nf = app.add_subcommand("normal-form", "GL(2r) x H_lambda normal form of z");
  std::string nf_partition, nf_z;
  size_t nf_r = 1;
  nf->add_option("--partition", nf_partition)->required();
  nf->add_option("--r", nf_r)->required();
  nf->add_option("--z", nf_z, "2r x nr rational matrix")->required();
  nf->callback([&] {
    action = [&] {
      const PartitionSpec spec = spec_from(nf_partition, nf_r);
      const ZMatrix z{spec, json_exact_matrix(load_json_arg(nf_z))};
      if (z.data.rows() != 2 * spec.r || z.data.cols() != spec.N()) throw ConfigError("z must be 2r x nr");
      const MembershipReport m = z_membership(z);
      if (!m.ok) {
        emit(g, Json{{"member", false}, {"singular", m.failing}});
        return 1;
      }
      const NormalFormResult res = normal_form(z);
      Json out{{"member", true}, {"x", to_json(res.x.data)}};
      if (res.param.rows() > 0) out["param"] = to_json(res.param);
      out["g"] = to_json(res.witness.g);
      out["h"] = to_json(res.witness.h);
      return emit(g, out);
    };
  });

  // sigma
  auto* sg = app.add_subcommand("sigma", "finite Weyl action on the (1,1,1,1) normal form");
  std::string sg_sigma, sg_x;
  bool sg_kummer = false;
  sg->add_option("--sigma", sg_sigma, "images of 0..3, e.g. 1,0,2,3");
  sg->add_option("--x", sg_x, "r x r rational matrix")->required();
  sg->add_flag("--kummer", sg_kummer, "lambda = (2,1,1), swap of the two singleton factors");
  sg->callback([&] {
    action = [&] {
      const ExactMatrix x = json_exact_matrix(load_json_arg(sg_x));
      if (!x.square()) throw ConfigError("x must be square");
      if (sg_kummer) {
        const KummerWitness k = kummer_sigma_witness(x);
        return emit(g, Json{{"x_new", to_json(k.x_new)},
                            {"chi_factor", to_json(k.chi_factor)},
                            {"g", to_json(k.witness.g)},
                            {"h", to_json(k.witness.h)}});
      }
      if (sg_sigma.empty()) throw ConfigError("--sigma required unless --kummer");
      Permutation s;
      for (const auto& q : parse_rational_list(sg_sigma)) {
        if (q.get_den() != 1 || sgn(q) < 0) throw ConfigError("sigma entries must be 0..3");
        s.push_back(q.get_num().get_ui());
      }
      if (s.size() != 4 || !is_permutation(s)) throw ConfigError("sigma must permute 0..3");
      const SigmaAction a = sigma_action_x(s, x);
      return emit(g, Json{{"x_new", to_json(a.x_new)},
                          {"alpha_perm", a.alpha_perm},
                          {"det_g", to_json(a.det_g)},
                          {"g", to_json(a.witness.g)},
                          {"h", to_json(a.witness.h)}});
    };
  });

  // integrate
  auto* in = app.add_subcommand("integrate", "Radon HGF integral over the normal form x");
  std::string in_params, in_partition, in_alpha, in_x, in_method = "auto";
  size_t in_order = 0, in_r = 1;
  auto* in_p = in->add_option("--params", in_params, "{partition, r, alpha}");
  auto* in_part = in->add_option("--partition", in_partition, "e.g. 2,1,1 (with --r and --alpha)");
  in->add_option("--r", in_r)->capture_default_str()->needs(in_part);
  auto* in_al = in->add_option("--alpha", in_alpha, "nested or flat alpha list")->needs(in_part);
  in_part->needs(in_al)->excludes(in_p);
  in->add_option("--x", in_x, "r x r matrix (JSON, {\"diag\": [...]}, or a scalar)")->required();
  in->add_option("--method", in_method, "auto | mc | quad | series")->capture_default_str();
  in->add_option("--order", in_order, "quadrature order (0: default)");
  in->callback([&] {
    action = [&] {
      if (in_params.empty() && in_partition.empty()) throw ConfigError("integrate needs --params or --partition/--alpha");
      const CharacterParams p = in_params.empty()
                                    ? json_alpha(load_json_arg(in_alpha), parse_partition(in_partition, in_r))
                                    : json_params(load_json_arg(in_params));
      const CMat x = json_cmat(load_json_arg(in_x));
      const size_t r = p.spec.r;
      if (static_cast<size_t>(x.rows()) != r || static_cast<size_t>(x.cols()) != r) throw ConfigError("x must be r x r");
      using V = std::vector<size_t>;
      const auto& parts = p.spec.parts;
      Json cfg = base_config(g, "integrate");
      cfg["method"] = in_method;
      IntegralEstimate e;
      if (parts == V{2, 2} || parts == V{3, 1} || parts == V{4}) {
        e = bessel_hermite_airy_eval(p.spec, x, p, in_order);
      } else {
        const IntegralPlan plan = integral_plan(p.spec, x, p);
        std::string m = in_method;
        if (m == "auto") m = r <= 2 ? "quad" : "mc";
        if (m == "mc") {
          e = mc_integral(plan.rest, plan.weight, r, g.samples, g.seed);
        } else if (m == "quad") {
          if (r > 2) throw ConfigError("quad supports r <= 2");
          e = matrix_quadrature(plan.rest, plan.weight, r, in_order);
        } else if (m == "series") {
          const HGFParams h = hgf_params_from_alpha(p);
          const HermMatrix X(x, 1e-12);
          const SeriesValue s = h.gauss ? hgf_series_2F1(h.a, h.b, h.c, X, g.trunc) : hgf_series_1F1(h.a, h.c, X, g.trunc);
          const EigFn one = [](const std::vector<double>&) { return Complex(1.0, 0.0); };
          const IntegralEstimate norm = eig_quadrature(one, plan.weight, r, in_order);
          e.value = norm.value * s.value;
          e.abs_error = std::abs(norm.value) * s.tail + norm.abs_error * std::abs(s.value);
          e.method = "series";
        } else {
          throw ConfigError("unknown method " + in_method);
        }
      }
      return emit(g, Json{{"config", cfg}, {"estimate", to_json(e)}});
    };
  });

  // check
  auto* chk = app.add_subcommand("check", "identity checks, reported as check records");
  chk->require_subcommand(1);
  std::string c_a = "0.9", c_b = "1.1", c_c = "2.2", c_x = "0.4,-0.3";
  std::string c_params;
  size_t c_quad = 0, c_budget = 0;
  bool c_mc = false;
  auto id_sub = [&](const std::string& name, const std::string& help, bool has_b) {
    auto* s = chk->add_subcommand(name, help);
    s->add_option("--params", c_params, "JSON object with any of a, b, c, x; overrides the single options");
    s->add_option("--budget", c_budget, "Monte Carlo samples; turns on the MC cross-check");
    s->add_option("--a", c_a)->capture_default_str();
    if (has_b) s->add_option("--b", c_b)->capture_default_str();
    s->add_option("--c", c_c)->capture_default_str();
    s->add_option("--x", c_x, "eigenvalues a,b,... or a JSON Hermitian matrix")->capture_default_str();
    s->add_flag("--mc", c_mc, "Monte Carlo cross-check (--samples, --seed)");
    s->add_option("--quad-order", c_quad, "eigenvalue quadrature cross-check order (r <= 2)");
    return s;
  };
  auto load_identity_params = [&] {
    if (c_budget > 0) c_mc = true;
    if (c_params.empty()) return;
    const Json j = load_json_arg(c_params);
    if (!j.is_object()) throw ConfigError("--params must be a JSON object");
    auto text = [](const Json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); };
    for (auto [key, dst] : {std::pair{"a", &c_a}, std::pair{"b", &c_b}, std::pair{"c", &c_c}})
      if (j.contains(key)) *dst = text(j[key]);
    if (j.contains("x")) {
      const Json& x = j["x"];
      // a flat number list is read as eigenvalues
      if (x.is_array() && !x.empty() && x[0].is_number()) {
        c_x.clear();
        for (size_t k = 0; k < x.size(); ++k) c_x += (k ? "," : "") + x[k].dump();
      } else {
        c_x = text(x);
      }
    }
  };
  auto identity_budget = [&] {
    IdentityBudget b;
    b.trunc = g.trunc;
    b.samples = c_mc ? (c_budget ? c_budget : g.samples) : 0;
    b.seed = g.seed;
    b.quad_order = c_quad;
    return b;
  };
  auto identity_config = [&](const std::string& name) {
    Json cfg = base_config(g, "check " + name);
    cfg["a"] = c_a;
    cfg["b"] = c_b;
    cfg["c"] = c_c;
    cfg["x"] = c_x;
    cfg["mc"] = c_mc;
    cfg["budget"] = c_budget;
    cfg["quad_order"] = c_quad;
    return cfg;
  };
  id_sub("pfaff", "2F1(a,b;c;X) vs det(1-X)^{-b} 2F1(c-a,b;c;X(X-1)^{-1})", true)->callback([&] {
    action = [&] {
      const Stopwatch sw;
      Report rep;
      load_identity_params();
      rep.config = identity_config("pfaff");
      const IdentityReport ir =
          check_pfaff(complex_arg(c_a), complex_arg(c_b), complex_arg(c_c), herm_arg(c_x), identity_budget());
      rep.checks.push_back(record_from(ir, "pfaff-transformation", tol_or(g, 1e-3), c_mc));
      return emit(g, rep, sw);
    };
  });
  id_sub("kummer", "1F1(a;c;X) vs etr(X) 1F1(c-a;c;-X)", false)->callback([&] {
    action = [&] {
      const Stopwatch sw;
      Report rep;
      load_identity_params();
      rep.config = identity_config("kummer");
      rep.config.erase("b");
      const IdentityReport ir = check_kummer(complex_arg(c_a), complex_arg(c_c), herm_arg(c_x), identity_budget());
      rep.checks.push_back(record_from(ir, "kummer-transformation", tol_or(g, 1e-3), c_mc));
      return emit(g, rep, sw);
    };
  });
  id_sub("conjecture", "the two conjectural 2F1 transformations", true)->callback([&] {
    action = [&] {
      const Stopwatch sw;
      Report rep;
      load_identity_params();
      rep.config = identity_config("conjecture");
      for (const auto& ir :
           check_conjecture(complex_arg(c_a), complex_arg(c_b), complex_arg(c_c), herm_arg(c_x), identity_budget()))
        rep.checks.push_back(record_from(ir, ir.name, tol_or(g, 1e-3), c_mc));
      return emit(g, rep, sw);
    };
  });
  auto* bs = chk->add_subcommand("beta-symmetry", "B_r(a,b) = B_r(b,a) by eigenvalue quadrature");
  double bs_a = 2.3, bs_b = 3.1;
  size_t bs_r = 2, bs_order = 0;
  bs->add_option("--a", bs_a)->capture_default_str();
  bs->add_option("--b", bs_b)->capture_default_str();
  bs->add_option("--r", bs_r)->capture_default_str();
  bs->add_option("--order", bs_order, "0: default");
  bs->callback([&] {
    action = [&] {
      if (bs_r < 1 || bs_r > 3) throw ConfigError("r must be 1..3");
      const Stopwatch sw;
      Report rep;
      rep.config = base_config(g, "check beta-symmetry");
      rep.config["a"] = bs_a;
      rep.config["b"] = bs_b;
      rep.config["r"] = bs_r;
      rep.config["order"] = bs_order;
      const BetaSymmetryReport br = check_beta_symmetry(bs_a, bs_b, bs_r, bs_order);
      CheckRecord c;
      c.name = "beta-symmetry";
      c.paper_anchor = "beta-symmetry";
      c.lhs = to_json(br.forward);
      c.rhs = to_json(br.backward);
      c.residual = br.residual;
      c.tolerance = tol_or(g, 1e-8);
      c.status = status_for(br.residual <= c.tolerance);
      rep.checks.push_back(c);
      return emit(g, rep, sw);
    };
  });
  auto* cov = chk->add_subcommand("covariance", "L(u; z h) = L(u; z) + log chi(h) on sampled u");
  std::string cov_params, cov_z, cov_h;
  size_t cov_samples = 32;
  cov->add_option("--params", cov_params, "{partition, r, alpha}")->required();
  cov->add_option("--z", cov_z, "2r x nr rational matrix")->required();
  cov->add_option("--element", cov_h, "h in H_lambda")->required();
  cov->add_option("--points", cov_samples, "sampled u")->capture_default_str();
  cov->callback([&] {
    action = [&] {
      const CharacterParams p = json_params(load_json_arg(cov_params));
      const ZMatrix z{p.spec, json_exact_matrix(load_json_arg(cov_z))};
      const ExactH h = json_exact_h(load_json_arg(cov_h), p.spec);
      const Stopwatch sw;
      Report rep;
      rep.config = base_config(g, "check covariance");
      rep.config["points"] = cov_samples;
      const double dev = covariance_check_integrand(p.spec, z, h, p, cov_samples, g.seed);
      CheckRecord c;
      c.name = "covariance";
      c.paper_anchor = "integrand-covariance";
      c.lhs = Json{{"sup_deviation", dev}};
      c.rhs = Json{{"expected", 0.0}};
      c.residual = dev;
      c.tolerance = tol_or(g, 1e-9);
      c.status = status_for(dev <= c.tolerance);
      rep.checks.push_back(c);
      return emit(g, rep, sw);
    };
  });

  // verify-all
  auto* va = app.add_subcommand("verify-all", "acceptance suite");
  bool va_quick = false, va_full = false;
  va->add_flag("--quick", va_quick, "exact suite only (default)");
  va->add_flag("--full", va_full, "add the numeric identities");
  va->callback([&] {
    action = [&] {
      if (va_quick && va_full) throw ConfigError("--quick and --full are exclusive");
      VerifyOptions o;
      o.full = va_full;
      o.seed = g.seed;
      o.trunc = g.trunc;
      // the suite's default sample count is the criterion's 1e6 unless --samples is given
      if (app.get_option("--samples")->count() > 0) o.samples = g.samples;
      return emit(g, verify_all(o));
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }
  try {
    if (g.format != "json" && g.format != "text") throw ConfigError("unknown format " + g.format + " (json|text)");
    return action();
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 2;
  } catch (const Json::exception& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
