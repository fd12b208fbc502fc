#pragma once

#include <string>
#include <vector>

#include "radon/json_io.hpp"

namespace radon {

enum class Status { pass, fail, conjecture_consistent };

const char* status_name(Status s);
// a passing conjecture check is never reported as plain pass
Status status_for(bool ok, bool conjecture = false);

struct CheckRecord {
  std::string name;
  std::string paper_anchor;
  Status status = Status::pass;
  Json lhs;
  Json rhs;
  double residual = 0.0;
  double tolerance = 0.0;
  double runtime_ms = 0.0;
};

struct Report {
  Json config = Json::object();
  std::vector<CheckRecord> checks;

  bool ok() const;
  size_t count(Status s) const;
};

// runtime_ms is left out when include_runtime is false
Json report_json(const Report& report, bool include_runtime = true);
// format: json | text
std::string emit_report(const Report& report, const std::string& format);
int exit_code(const Report& report);

}  // namespace radon
