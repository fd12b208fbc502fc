// One PASS/FAIL line per acceptance criterion; exit status 1 if any fails.
#include <cstdio>
#include <cstdlib>
#include <map>
#include <string>
#include <vector>

#include "radon/verify.hpp"

using namespace radon;

namespace {

struct Limit {
  int criterion;
  double seconds;  // 0: none stated
  std::vector<std::string> required;  // name fragments that must appear
};

const std::vector<Limit> kLimits = {
    {1, 5, {}},
    {2, 30, {}},
    {3, 10, {}},
    {4, 10, {}},
    {5, 5, {}},
    {6, 60, {"(1_1_1)", "(2_1)", "(3)", "(1_1_1_1)", "(2_1_1)", "(2_2)", "(3_1)", "(4)"}},
    {7, 20, {"t01", "t02", "t03", "t12", "t13", "t23", "klein", "cycle_012", "cycle_021"}},
    {8, 30, {".r1.", ".r2.", ".r3."}},
    {9, 300, {"kummer.r1.series", "kummer.r2.series", "kummer.r2.mc"}},
    {10, 300, {"pfaff.r1.series", "pfaff.r2.series", "pfaff.r2.mc"}},
    {11, 0, {"conjecture-1.r1", "conjecture-2.r1", "conjecture-1.r2.mc", "conjecture-2.r2.mc"}},
    {12, 60, {"gauss_2f1", "kummer_1f1", "airy_point", "bessel_point"}},
};

Report run_full(const char* threads) {
  setenv("RADON_THREADS", threads, 1);
  VerifyOptions opt;
  opt.full = true;
  opt.seed = 7;
  return verify_all(opt);
}

bool line(int k, bool ok, const std::string& detail) {
  std::printf("criterion %2d: %s  %s\n", k, ok ? "PASS" : "FAIL", detail.c_str());
  std::fflush(stdout);
  return ok;
}

}  // namespace

int main() {
  const Report a = run_full("4");
  bool all = true;
  for (const auto& lim : kLimits) {
    size_t n = 0, bad = 0;
    double ms = 0.0, worst = 0.0;
    std::string first_bad;
    std::map<std::string, bool> seen;
    for (const auto& f : lim.required) seen[f] = false;
    for (const auto& c : a.checks) {
      if (criterion_of(c.name) != lim.criterion) continue;
      ++n;
      ms += c.runtime_ms;
      if (c.tolerance > 0) worst = std::max(worst, c.residual / c.tolerance);
      const Status want = lim.criterion == 11 ? Status::conjecture_consistent : Status::pass;
      if (c.status != want) {
        ++bad;
        if (first_bad.empty()) first_bad = c.name;
      }
      for (auto& [frag, hit] : seen)
        if (c.name.find(frag) != std::string::npos) hit = true;
    }
    std::string missing;
    for (const auto& [frag, hit] : seen)
      if (!hit) missing += " " + frag;
    const bool in_time = lim.seconds == 0 || ms < lim.seconds * 1000.0;
    const bool ok = n > 0 && bad == 0 && missing.empty() && in_time;
    char buf[256];
    std::snprintf(buf, sizeof buf, "checks=%zu failed=%zu worst_residual/tol=%.3g runtime=%.1fs", n, bad, worst,
                  ms / 1000.0);
    std::string detail = buf;
    if (lim.seconds > 0) detail += " limit=" + std::to_string(static_cast<int>(lim.seconds)) + "s";
    if (!first_bad.empty()) detail += " first_failure=" + first_bad;
    if (!missing.empty()) detail += " missing:" + missing;
    all &= line(lim.criterion, ok, detail);
  }

  const Report b = run_full("4");
  const Report c = run_full("1");
  const Json ja = report_json(a, false), jb = report_json(b, false), jc = report_json(c, false);
  const bool same_44 = ja == jb, same_41 = ja == jc;
  all &= line(13, same_44 && same_41 && a.config["samples"] == 1000000,
              std::string("threads 4 vs 4: ") + (same_44 ? "identical" : "DIFFER") +
                  ", threads 4 vs 1: " + (same_41 ? "identical" : "DIFFER") +
                  ", samples=" + a.config["samples"].dump());
  return all ? 0 : 1;
}
