#include "radon/report.hpp"

#include <cmath>
#include <iomanip>
#include <sstream>

namespace radon {

const char* status_name(Status s) {
  switch (s) {
    case Status::pass:
      return "pass";
    case Status::fail:
      return "fail";
    case Status::conjecture_consistent:
      return "conjecture-consistent";
  }
  return "fail";
}

Status status_for(bool ok, bool conjecture) {
  if (!ok) return Status::fail;
  return conjecture ? Status::conjecture_consistent : Status::pass;
}

bool Report::ok() const { return count(Status::fail) == 0; }

size_t Report::count(Status s) const {
  size_t n = 0;
  for (const auto& c : checks) n += c.status == s;
  return n;
}

namespace {
// JSON has no inf/nan
Json num(double x) {
  if (std::isfinite(x)) return x;
  if (std::isnan(x)) return "nan";
  return x > 0 ? "inf" : "-inf";
}
}  // namespace

Json report_json(const Report& report, bool include_runtime) {
  Json checks = Json::array();
  for (const auto& c : report.checks) {
    Json j;
    j["name"] = c.name;
    j["paper_anchor"] = c.paper_anchor;
    j["status"] = status_name(c.status);
    j["lhs"] = c.lhs;
    j["rhs"] = c.rhs;
    j["residual"] = num(c.residual);
    j["tolerance"] = num(c.tolerance);
    if (include_runtime) j["runtime_ms"] = c.runtime_ms;
    checks.push_back(j);
  }
  Json out;
  out["config"] = report.config;
  out["summary"] = Json{{"total", report.checks.size()},
                        {"pass", report.count(Status::pass)},
                        {"fail", report.count(Status::fail)},
                        {"conjecture-consistent", report.count(Status::conjecture_consistent)}};
  out["checks"] = checks;
  return out;
}

std::string emit_report(const Report& report, const std::string& format) {
  if (format == "json") return report_json(report).dump(2) + "\n";
  if (format != "text") throw ConfigError("unknown format " + format + " (json|text)");
  std::ostringstream os;
  for (const auto& c : report.checks) {
    os << std::left << std::setw(22) << status_name(c.status) << ' ' << c.name << "  [" << c.paper_anchor << "]"
       << std::setprecision(3) << "  residual=" << c.residual << " tol=" << c.tolerance << "  " << std::fixed
       << std::setprecision(1) << c.runtime_ms << " ms" << std::defaultfloat << "\n";
  }
  os << report.checks.size() << " checks: " << report.count(Status::pass) << " pass, " << report.count(Status::fail)
     << " fail, " << report.count(Status::conjecture_consistent) << " conjecture-consistent\n";
  return os.str();
}

int exit_code(const Report& report) { return report.ok() ? 0 : 1; }

}  // namespace radon
