#include <doctest.h>

#include <cmath>
#include <limits>

#include "sasaki/cli/commands.hpp"
#include "sasaki/cli/config.hpp"
#include "sasaki/errors.hpp"

using namespace sasaki;
using namespace sasaki::cli;
using nlohmann::json;

namespace {

RunConfig verify_config(std::string suite, std::string model) {
  RunConfig c;
  c.suite = std::move(suite);
  c.model = std::move(model);
  c.samples = 12;
  c.format = Format::json;
  return c;
}

}  // namespace

TEST_CASE("config validation") {
  RunConfig c = verify_config("axioms", "heisenberg");
  CHECK_NOTHROW(validate(c));
  c.tolerance = 0.0;
  CHECK_THROWS_AS(validate(c), InvalidArgument);
  c = verify_config("axioms", "heisenberg");
  c.jet_order = 5;
  CHECK_THROWS_AS(validate(c), InvalidArgument);
  c.jet_order = 4;
  c.samples = 0;
  CHECK_THROWS_AS(validate(c), InvalidArgument);
  c.samples = 1;
  c.a = -1.0;
  CHECK_THROWS_AS(validate(c), InvalidArgument);
}

TEST_CASE("reports survive a JSON round trip, including non-finite values") {
  SuiteReport r;
  r.suite = "demo";
  Check c = make_check("big", "big-tag", ResidualStats{std::numeric_limits<double>::infinity(), 1.0, 3}, 1e-9);
  c.precondition = true;
  r.add(c);
  r.add(make_check("nan", "nan-tag", ResidualStats{std::nan(""), -std::numeric_limits<double>::infinity(), 2}, 1e-9));
  r.add(not_applicable("skipped", "skip-tag", "no structure"));
  r.constants.push_back({"lambda", 6.0, 1e-15});
  r.notes.push_back("hello");

  VerificationReport rep;
  rep.model = "heisenberg:n=1";
  rep.config = verify_config("theorem1", "heisenberg:n=1");
  rep.config.output = "out.json";
  rep.result = r;
  const json j = rep;
  CHECK(j["schema_version"] == kSchemaVersion);
  CHECK(j["checks"][0]["max_residual"] == "inf");
  CHECK(j["checks"][1]["max_residual"] == "nan");
  CHECK(j["checks"][1]["mean_residual"] == "-inf");

  const VerificationReport back = json::parse(j.dump()).get<VerificationReport>();
  CHECK(json(back) == j);
  CHECK(std::isinf(back.result.checks[0].max_residual));
  CHECK(std::isnan(back.result.checks[1].max_residual));
  CHECK(back.result.checks[0].precondition);
  CHECK_FALSE(back.result.checks[2].applicable);
  CHECK(back.config.output == std::optional<std::string>("out.json"));
  CHECK(back.result.constants[0].value == 6.0);
}

TEST_CASE("verify: pass, fail, usage and numeric exit codes") {
  const CommandResult ok = cmd_verify(verify_config("theorem1", "heisenberg:n=1"));
  CHECK(ok.exit_code == kExitPass);
  const json j = json::parse(ok.output);
  CHECK(j["pass"] == true);
  bool lambda_found = false;
  for (const auto& k : j["constants"]) {
    if (k["name"] == "lambda") {
      lambda_found = true;
      CHECK(k["value"].get<double>() == doctest::Approx(6.0));
    }
  }
  CHECK(lambda_found);

  RunConfig strict = verify_config("theorem1", "heisenberg:n=1");
  strict.tolerance = 1e-30;
  CHECK(cmd_verify(strict).exit_code == kExitFail);

  CHECK(cmd_verify(verify_config("nonsense", "heisenberg")).exit_code == kExitUsage);
  const CommandResult bad_model = cmd_verify(verify_config("axioms", "nowhere"));
  CHECK(bad_model.exit_code == kExitUsage);
  CHECK(bad_model.diagnostic.find("usage error") != std::string::npos);

  RunConfig shallow = verify_config("integrability", "heisenberg:n=1");
  shallow.jet_order = 3;
  const CommandResult numeric = cmd_verify(shallow);
  CHECK(numeric.exit_code == kExitNumeric);
  CHECK_FALSE(numeric.diagnostic.empty());
}

TEST_CASE("verify output is deterministic") {
  const RunConfig c = verify_config("lemma1", "heisenberg:n=2");
  const CommandResult a = cmd_verify(c), b = cmd_verify(c);
  CHECK(a.output == b.output);
  RunConfig text = c;
  text.format = Format::text;
  const CommandResult t = cmd_verify(text);
  CHECK(t.output.find("overall: PASS") != std::string::npos);
}

TEST_CASE("suites on models without a contact structure are not applicable") {
  const auto model = models::resolve_model("random:dim=3,seed=7", {}, 4);
  const auto pts = fields::sample_box(model.box, 4, 0);
  for (const char* suite : {"axioms", "theorem1", "lemma1", "theorem2", "pde"}) {
    CAPTURE(suite);
    CHECK(status_of(run_suite(suite, model, pts, 1e-7, 0)) == "not-applicable");
  }
  CHECK(status_of(run_suite("universal", model, pts, 1e-7, 0)) == "pass");
  CHECK_THROWS_AS(run_suite("nonsense", model, pts, 1e-7, 0), InvalidArgument);
}

TEST_CASE("coverage matrix") {
  RunConfig c;
  c.command = "matrix";
  c.n_max = 1;
  c.samples = 8;
  c.format = Format::json;
  const CommandResult res = cmd_report_matrix(c);
  CHECK(res.exit_code == kExitPass);
  const json m = json::parse(res.output);
  CHECK(m["schema_version"] == kSchemaVersion);
  CHECK(m["tag_count"].get<int>() >= 25);
  bool random_theorem1 = false;
  for (const auto& cell : m["cells"]) {
    if (cell["model"] == "random:dim=3,seed=7" && cell["suite"] == "theorem1") {
      random_theorem1 = true;
      CHECK(cell["status"] == "not-applicable");
    }
    CHECK(cell["status"] != "fail");
    CHECK(cell["status"] != "error");
  }
  CHECK(random_theorem1);
  CHECK(m["coverage"].contains("ricci-soliton"));
  CHECK(cmd_report_matrix(c).output == res.output);

  c.n_max = 9;
  CHECK(cmd_report_matrix(c).exit_code == kExitUsage);
}

TEST_CASE("model listing") {
  const CommandResult r = cmd_list_models();
  CHECK(r.exit_code == kExitPass);
  CHECK(r.output.find("flat-contact") != std::string::npos);
}
