#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <limits>

#include "radon/verify.hpp"

using namespace radon;

namespace {

CheckRecord rec(const std::string& name, Status s, double res = 0.0) {
  CheckRecord c;
  c.name = name;
  c.paper_anchor = "mu-group-law";
  c.status = s;
  c.lhs = Json{{"value", 1}};
  c.rhs = Json{{"value", 1}};
  c.residual = res;
  c.tolerance = 1e-8;
  c.runtime_ms = 3.5;
  return c;
}

}  // namespace

TEST_CASE("status policy") {
  CHECK(status_for(true) == Status::pass);
  CHECK(status_for(false) == Status::fail);
  CHECK(status_for(true, true) == Status::conjecture_consistent);
  CHECK(status_for(false, true) == Status::fail);
  CHECK(std::string(status_name(Status::conjecture_consistent)) == "conjecture-consistent");
  CHECK(std::string(status_name(Status::pass)) == "pass");
  CHECK(std::string(status_name(Status::fail)) == "fail");
}

TEST_CASE("report json layout") {
  Report empty;
  CHECK(empty.ok());
  CHECK(exit_code(empty) == 0);
  const Json e = report_json(empty);
  CHECK(e["summary"]["total"] == 0);
  CHECK(e["checks"].is_array());

  Report rep;
  rep.config = Json{{"command", "test"}};
  rep.checks = {rec("c01.a", Status::pass), rec("c11.b", Status::conjecture_consistent)};
  CHECK(rep.ok());
  const Json j = report_json(rep);
  std::vector<std::string> top;
  for (auto it = j.begin(); it != j.end(); ++it) top.push_back(it.key());
  CHECK(top == std::vector<std::string>{"config", "summary", "checks"});
  std::vector<std::string> fields;
  for (auto it = j["checks"][0].begin(); it != j["checks"][0].end(); ++it) fields.push_back(it.key());
  CHECK(fields == std::vector<std::string>{"name", "paper_anchor", "status", "lhs", "rhs", "residual", "tolerance",
                                           "runtime_ms"});
  CHECK(j["summary"]["pass"] == 1);
  CHECK(j["summary"]["conjecture-consistent"] == 1);
  CHECK(j["checks"][1]["status"] == "conjecture-consistent");
  CHECK_FALSE(report_json(rep, false)["checks"][0].contains("runtime_ms"));

  rep.checks.push_back(rec("c02.c", Status::fail, 1.0));
  CHECK_FALSE(rep.ok());
  CHECK(exit_code(rep) == 1);
  CHECK(rep.count(Status::fail) == 1);
}

TEST_CASE("non-finite residuals stay valid JSON") {
  Report rep;
  rep.checks = {rec("c09.x", Status::fail, std::numeric_limits<double>::infinity())};
  const std::string s = emit_report(rep, "json");
  CHECK(Json::parse(s)["checks"][0]["residual"] == "inf");
}

TEST_CASE("text output and format errors") {
  Report rep;
  rep.checks = {rec("c01.a", Status::pass)};
  const std::string t = emit_report(rep, "text");
  CHECK(t.find("c01.a") != std::string::npos);
  CHECK(t.find("mu-group-law") != std::string::npos);
  CHECK(t.find("pass") != std::string::npos);
  CHECK_THROWS_AS(emit_report(rep, "yaml"), ConfigError);
  CHECK(Json::parse(emit_report(rep, "json"))["checks"][0]["name"] == "c01.a");
}

TEST_CASE("criterion_of") {
  CHECK(criterion_of("c09.kummer.r2.mc") == 9);
  CHECK(criterion_of("c13.determinism") == 13);
  CHECK(criterion_of("misc") == 0);
  CHECK(criterion_of("cx1.y") == 0);
}

TEST_CASE("quick verify is deterministic and green") {
  VerifyOptions opt;
  opt.full = false;
  const Report a = verify_all(opt), b = verify_all(opt);
  CHECK(a.ok());
  CHECK(report_json(a, false) == report_json(b, false));
  for (const auto& c : a.checks) {
    const int k = criterion_of(c.name);
    CHECK(k >= 1);
    CHECK(k <= 7);
    CHECK_FALSE(c.paper_anchor.empty());
  }
  CHECK(report_json(a)["config"]["suite"] == "quick");
}

TEST_CASE("json_io parsing") {
  CHECK(json_rational(Json("3/4")) == Rational(3, 4));
  CHECK(json_rational(Json(2)) == Rational(2));
  CHECK(json_complex(Json(0.5)) == Complex(0.5, 0.0));
  CHECK(json_complex(Json::parse("[1.0, -2.0]")) == Complex(1.0, -2.0));
  CHECK(load_json_arg("0.4").get<double>() == 0.4);
  CHECK(load_json_arg("[1, 2]").size() == 2);
  CHECK_THROWS(load_json_arg("/nonexistent/file.json"));

  const PartitionSpec s(1, {2, 1});
  const CharacterParams nested = json_alpha(Json::parse("[[-1.5, 1], [-0.5]]"), s);
  const CharacterParams flat = json_alpha(Json::parse("[-1.5, 1, -0.5]"), s);
  CHECK(nested.alpha == flat.alpha);
  CHECK(nested.alpha[1][0] == Complex(-0.5));
  CHECK_THROWS(json_alpha(Json::parse("[1, 2]"), s));

  const CharacterParams p = json_params(Json::parse(R"({"partition": "2,1", "r": 2, "alpha": [-3.5, 1, -0.5]})"));
  CHECK(p.spec.r == 2);
  CHECK(p.spec.parts == std::vector<size_t>{2, 1});
  CHECK(json_exact_matrix(Json::parse(R"([["1/2", 0], [0, 1]])")) ==
        ExactMatrix(2, 2, {Rational(1, 2), Rational(0), Rational(0), Rational(1)}));
  const CMat d = json_cmat(Json::parse(R"({"diag": [0.1, 0.2]})"));
  CHECK(d(1, 1) == Complex(0.2));
  CHECK(d(0, 1) == Complex(0.0));
  Rational third(-2, 6);
  third.canonicalize();
  CHECK(to_json(third) == "-1/3");
}
