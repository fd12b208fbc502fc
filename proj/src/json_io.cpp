#include "radon/json_io.hpp"

#include <fstream>
#include <sstream>

namespace radon {

Json load_json_arg(const std::string& arg) {
  try {
    const auto first = arg.find_first_not_of(" \t\n");
    if (first != std::string::npos && (arg[first] == '{' || arg[first] == '[')) return Json::parse(arg);
    // bare scalars such as 0.4 or "1/3"
    Json scalar = Json::parse(arg, nullptr, false);
    if (!scalar.is_discarded()) return scalar;
    std::ifstream in(arg);
    if (!in) throw ConfigError("cannot open " + arg);
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw ConfigError(std::string("invalid JSON: ") + e.what());
  }
}

Rational json_rational(const Json& j) {
  try {
    if (j.is_string()) return parse_rational(j.get<std::string>());
    if (j.is_number_integer()) return Rational(j.get<long>());
  } catch (const std::invalid_argument& e) {
    throw ConfigError(e.what());
  }
  throw ConfigError("expected a rational (string \"p/q\" or integer), got " + j.dump());
}

Complex json_complex(const Json& j) {
  if (j.is_number()) return {j.get<double>(), 0.0};
  if (j.is_string()) {
    try {
      return to_complex(parse_rational(j.get<std::string>()));
    } catch (const std::invalid_argument& e) {
      throw ConfigError(e.what());
    }
  }
  if (j.is_array() && j.size() == 2) return {json_complex(j[0]).real(), json_complex(j[1]).real()};
  if (j.is_object() && j.contains("re")) return {j["re"].get<double>(), j.value("im", 0.0)};
  throw ConfigError("expected a complex number, got " + j.dump());
}

ExactMatrix json_exact_matrix(const Json& j) {
  if (!j.is_array() || j.empty() || !j[0].is_array()) throw ConfigError("expected a matrix (array of rows)");
  const size_t rows = j.size(), cols = j[0].size();
  ExactMatrix m(rows, cols);
  for (size_t i = 0; i < rows; ++i) {
    if (!j[i].is_array() || j[i].size() != cols) throw ConfigError("ragged matrix rows");
    for (size_t k = 0; k < cols; ++k) m(i, k) = json_rational(j[i][k]);
  }
  return m;
}

CMat json_cmat(const Json& j) {
  if (j.is_object() && j.contains("diag")) {
    const auto& d = j["diag"];
    CMat m = CMat::Zero(static_cast<Eigen::Index>(d.size()), static_cast<Eigen::Index>(d.size()));
    for (size_t i = 0; i < d.size(); ++i) m(i, i) = json_complex(d[i]);
    return m;
  }
  if (j.is_number() || j.is_string()) {
    CMat m(1, 1);
    m(0, 0) = json_complex(j);
    return m;
  }
  if (!j.is_array() || j.empty() || !j[0].is_array()) throw ConfigError("expected a matrix (array of rows)");
  const size_t rows = j.size(), cols = j[0].size();
  if (rows > 4 || cols > 4) throw ConfigError("numeric matrices are limited to 4 x 4");
  CMat m(static_cast<Eigen::Index>(rows), static_cast<Eigen::Index>(cols));
  for (size_t i = 0; i < rows; ++i) {
    if (!j[i].is_array() || j[i].size() != cols) throw ConfigError("ragged matrix rows");
    for (size_t k = 0; k < cols; ++k) m(i, k) = json_complex(j[i][k]);
  }
  return m;
}

std::vector<Rational> parse_rational_list(const std::string& csv) {
  std::vector<Rational> out;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto a = item.find_first_not_of(" \t");
    const auto b = item.find_last_not_of(" \t");
    if (a == std::string::npos) throw ConfigError("empty entry in list: " + csv);
    try {
      out.push_back(parse_rational(item.substr(a, b - a + 1)));
    } catch (const std::invalid_argument& e) {
      throw ConfigError(e.what());
    }
  }
  return out;
}

Json to_json(const Rational& q) { return format_rational(q); }

Json to_json(const Complex& z) { return Json{{"re", z.real()}, {"im", z.imag()}}; }

Json to_json(const ExactMatrix& m) {
  Json out = Json::array();
  for (size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (size_t k = 0; k < m.cols(); ++k) row.push_back(format_rational(m(i, k)));
    out.push_back(row);
  }
  return out;
}

Json to_json(const CMat& m) {
  Json out = Json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (Eigen::Index k = 0; k < m.cols(); ++k) row.push_back(to_json(Complex(m(i, k))));
    out.push_back(row);
  }
  return out;
}

Json to_json(const ExactJet& j) {
  Json c = Json::array();
  for (const auto& m : j.coeffs) c.push_back(to_json(m));
  return Json{{"r", j.r}, {"p", j.p}, {"coeffs", c}};
}

Json to_json(const ExactH& h) {
  Json f = Json::array();
  for (const auto& j : h.factors) {
    Json c = Json::array();
    for (const auto& m : j.coeffs) c.push_back(to_json(m));
    f.push_back(c);
  }
  return Json{{"partition", h.spec.str()}, {"r", h.spec.r}, {"factors", f}};
}

namespace {
template <class T, class F>
Json weyl_json(const WeylElement<T>& w, F scalar) {
  Json mus = Json::array();
  for (const auto& cls : w.mus) {
    Json c = Json::array();
    for (const auto& m : cls) {
      Json v = Json::array();
      for (const auto& x : m.c) v.push_back(scalar(x));
      c.push_back(v);
    }
    mus.push_back(c);
  }
  return Json{{"partition", w.spec.str()}, {"r", w.spec.r}, {"mus", mus}, {"sigma", w.sigma}};
}
}  // namespace

Json to_json(const ExactWeyl& w) {
  return weyl_json(w, [](const Rational& q) { return to_json(q); });
}

Json to_json(const ComplexWeyl& w) {
  return weyl_json(w, [](const Complex& z) { return to_json(z); });
}

Json to_json(const CharacterParams& p) {
  Json a = Json::array();
  for (const auto& blk : p.alpha) {
    Json b = Json::array();
    for (const auto& v : blk) b.push_back(to_json(v));
    a.push_back(b);
  }
  return Json{{"partition", p.spec.str()}, {"r", p.spec.r}, {"m", p.m}, {"alpha", a}};
}

Json to_json(const IntegralEstimate& e) {
  return Json{{"value", to_json(e.value)}, {"stderr", e.std_error}, {"n_samples", e.n_samples},
              {"seed", e.seed},            {"method", e.method},    {"abs_error", e.abs_error},
              {"nonfinite", e.nonfinite}};
}

ExactJet json_exact_jet(const Json& j, size_t r) {
  const Json& c = j.is_object() ? j.at("coeffs") : j;
  if (!c.is_array() || c.empty()) throw ConfigError("jet needs a nonempty coefficient list");
  std::vector<ExactMatrix> coeffs;
  for (const auto& m : c) {
    coeffs.push_back(json_exact_matrix(m));
    if (coeffs.back().rows() != r || coeffs.back().cols() != r) throw ConfigError("jet coefficient is not r x r");
  }
  const size_t p = coeffs.size();
  return ExactJet(r, p, std::move(coeffs));
}

ExactH json_exact_h(const Json& j, const PartitionSpec& spec) {
  const Json& f = j.is_object() ? j.at("factors") : j;
  if (!f.is_array() || f.size() != spec.length()) throw ConfigError("h needs one factor per part");
  ExactH h{spec, {}};
  for (size_t k = 0; k < f.size(); ++k) {
    h.factors.push_back(json_exact_jet(f[k], spec.r));
    if (h.factors.back().p != spec.parts[k]) throw ConfigError("h factor length != part size");
  }
  h.validate();
  return h;
}

ExactWeyl json_exact_weyl(const Json& j, const PartitionSpec& spec) {
  ExactWeyl w = ExactWeyl::identity(spec);
  const auto mult = spec.multiplicities();
  if (j.contains("mus")) {
    const auto& mus = j["mus"];
    if (mus.size() != mult.size()) throw ConfigError("weyl: one mus entry per multiplicity class");
    for (size_t i = 0; i < mult.size(); ++i) {
      if (mus[i].size() != mult[i].second) throw ConfigError("weyl: mus class size mismatch");
      for (size_t k = 0; k < mult[i].second; ++k) {
        MuVector<Rational> m;
        m.p = mult[i].first;
        for (const auto& v : mus[i][k]) m.c.push_back(json_rational(v));
        w.mus[i][k] = m;
      }
    }
  }
  if (j.contains("sigma")) {
    const auto& s = j["sigma"];
    if (s.size() != mult.size()) throw ConfigError("weyl: one sigma per multiplicity class");
    for (size_t i = 0; i < mult.size(); ++i) w.sigma[i] = s[i].get<Permutation>();
  }
  try {
    w.validate();
  } catch (const std::exception& e) {
    throw ConfigError(e.what());
  }
  return w;
}

PartitionSpec json_partition(const Json& j) {
  if (!j.contains("partition") || !j.contains("r")) throw ConfigError("need \"partition\" and \"r\"");
  const auto& p = j["partition"];
  const size_t r = j["r"].get<size_t>();
  try {
    if (p.is_string()) return parse_partition(p.get<std::string>(), r);
    return PartitionSpec(r, p.get<std::vector<size_t>>());
  } catch (const std::invalid_argument& e) {
    throw ConfigError(e.what());
  }
}

CharacterParams json_alpha(const Json& j, const PartitionSpec& spec) {
  const Json& a = j.is_object() ? j.at("alpha") : j;
  CharacterParams out;
  out.spec = spec;
  out.m = 2 * spec.r;
  if (j.is_object() && j.contains("m")) out.m = j["m"].get<size_t>();
  if (!a.is_array()) throw ConfigError("alpha must be an array");
  // nested: one array per factor of the part's length; flat: n scalars (a scalar may be a [re, im] pair)
  bool nested = a.size() == spec.length();
  for (size_t k = 0; nested && k < a.size(); ++k) nested = a[k].is_array() && a[k].size() == spec.parts[k];
  if (nested) {
    for (size_t k = 0; k < a.size(); ++k) {
      if (a[k].size() != spec.parts[k]) throw ConfigError("alpha block length != part size");
      std::vector<Complex> blk;
      for (const auto& v : a[k]) blk.push_back(json_complex(v));
      out.alpha.push_back(blk);
    }
  } else {
    if (a.size() != spec.n()) throw ConfigError("flat alpha must have n entries");
    size_t pos = 0;
    for (size_t p : spec.parts) {
      std::vector<Complex> blk;
      for (size_t i = 0; i < p; ++i) blk.push_back(json_complex(a[pos++]));
      out.alpha.push_back(blk);
    }
  }
  try {
    out.validate();
  } catch (const std::exception& e) {
    throw ConfigError(e.what());
  }
  return out;
}

CharacterParams json_params(const Json& j) { return json_alpha(j, json_partition(j)); }

}  // namespace radon
