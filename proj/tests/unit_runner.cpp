#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <string>

#include "doctest.h"
#include "json.hpp"
#include "polywander/report.hpp"
#include "polywander/runner.hpp"

using namespace polywander;
using nlohmann::json;

namespace {

json strip_timestamp(const std::string& report) {
  json doc = json::parse(report);
  doc.erase("timestamp");
  return doc;
}

}  // namespace

TEST_CASE("empty config resolves to the documented defaults") {
  RunConfig cfg = config_from_json("{}");
  CHECK(cfg.base.kind == SpaceKind::bergman);
  CHECK(cfg.base.n == 2);
  CHECK(cfg.base.caps == MultiIndex{10, 10});
  CHECK(cfg.base.alpha == std::vector<int>{0, 1});
  CHECK(cfg.base.seed == 42);
  CHECK(cfg.trials == 100000);
  CHECK(cfg.selectors == std::vector<std::string>{"all"});
}

TEST_CASE("config parsing is strict about field names and values") {
  CHECK_THROWS_AS(config_from_json("not json"), ConfigError);
  CHECK_THROWS_AS(config_from_json("[1,2]"), ConfigError);
  CHECK_THROWS_AS(config_from_json(R"({"spaces":"hardy"})"), ConfigError);
  CHECK_THROWS_AS(config_from_json(R"({"suites":["nope"]})"), ConfigError);
  CHECK_THROWS_AS(config_from_json(R"({"n":0})"), ConfigError);
  CHECK_THROWS_AS(config_from_json(R"({"n":3,"d":[4,4]})"), ConfigError);
  CHECK_THROWS_AS(config_from_json(R"({"alpha":[3]})"), ConfigError);
  CHECK_THROWS_AS(config_from_json(R"({"alpha":[1,1]})"), ConfigError);
  CHECK_THROWS_AS(config_from_json(R"({"recipe":"exotic"})"), ConfigError);
  CHECK_THROWS_AS(config_from_json(R"({"tolerances":{"slack":1}})"), ConfigError);
  CHECK_THROWS_AS(config_from_json(R"({"formats":["yaml"]})"), ConfigError);
  CHECK_THROWS_AS(config_from_json(R"({"margin":0})"), ConfigError);
  CHECK_THROWS_AS(config_from_json(R"({"trials":0})"), ConfigError);
  CHECK_THROWS_AS(config_from_json(R"({"n":"two"})"), ConfigError);
}

TEST_CASE("n and d reconcile in both directions") {
  CHECK(config_from_json(R"({"n":3})").base.caps == MultiIndex{10, 10, 10});
  RunConfig byd = config_from_json(R"({"d":[6,7]})");
  CHECK(byd.base.n == 2);
  CHECK(byd.base.caps == MultiIndex{6, 7});
  // Default alpha covers every variable, one-based externally.
  CHECK(config_from_json(R"({"n":3})").base.alpha == std::vector<int>{0, 1, 2});
}

TEST_CASE("alpha arrives one-based and is stored zero-based") {
  RunConfig cfg = config_from_json(R"({"n":3,"alpha":[1,3]})");
  CHECK(cfg.base.alpha == std::vector<int>{0, 2});
}

TEST_CASE("coefficients accept numbers and re-im pairs") {
  RunConfig cfg = config_from_json(R"({"theta":[0,[0.5,-1],1]})");
  REQUIRE(cfg.theta.size() == 3);
  CHECK(cfg.theta[1] == Complex(0.5, -1.0));
  CHECK_THROWS_AS(config_from_json(R"({"theta":[[1,2,3]]})"), ConfigError);
}

TEST_CASE("selector expansion deduplicates and rejects unknowns") {
  RunConfig cfg = config_from_json(R"({"suites":["beurling-1d","all","beurling-1d"]})");
  CHECK_NOTHROW(resolved_config_json(cfg));
  json echo = json::parse(resolved_config_json(cfg));
  CHECK(echo["suites"].size() == known_selectors().size());
}

TEST_CASE("the config echo excludes delivery options") {
  RunConfig cfg = config_from_json(R"({"out":"/tmp/somewhere","suites":["scalar-inequality"]})");
  json echo = json::parse(resolved_config_json(cfg));
  CHECK_FALSE(echo.contains("out"));
  CHECK(echo.contains("tolerances"));
  CHECK(echo["suites"] == json::array({"scalar-inequality"}));
  CHECK(echo["generators"].size() == 2);  // defaults resolved for the echo
}

TEST_CASE("execution produces matching reports and summaries") {
  RunConfig cfg = config_from_json(
      R"({"suites":["scalar-inequality","beurling-1d"],"trials":2000,"d":[8,8]})");
  RunOutcome out = execute(cfg);
  CHECK(out.pass);
  REQUIRE(out.summary.size() == 2);
  CHECK(out.summary[0].rfind("[PASS] scalar-inequality", 0) == 0);
  CHECK(out.summary[1].rfind("[PASS] beurling-1d", 0) == 0);

  json doc = json::parse(out.report_json);
  CHECK(doc["overall_pass"] == true);
  CHECK(doc["suites"].size() == 2);
  CHECK(doc["tool"]["name"] == "polywander");
  CHECK(doc["timestamp"].contains("generated_at"));
  CHECK(doc["timestamp"]["wall_seconds"].contains("total"));
  CHECK(doc["config"]["trials"] == 2000);

  // CSV: header plus one line per case.
  size_t lines = 0;
  for (char ch : out.report_csv) lines += ch == '\n';
  size_t cases = 0;
  for (const json& suite : doc["suites"]) cases += suite["cases"].size();
  CHECK(lines == cases + 1);
  CHECK(out.report_csv.rfind("suite,case,space,n,d,alpha,residual,angle,min_eig,pass\n", 0) == 0);
}

TEST_CASE("identical configs yield identical reports modulo the timestamp") {
  const std::string text =
      R"({"suites":["scalar-inequality","theorem-2-1","beurling-1d"],"trials":5000,"space":"bergman","d":[8,8]})";
  RunOutcome a = execute(config_from_json(text));
  RunOutcome b = execute(config_from_json(text));
  CHECK(strip_timestamp(a.report_json).dump(2) == strip_timestamp(b.report_json).dump(2));
  CHECK(a.report_csv == b.report_csv);
}

TEST_CASE("the beurling selector uses the configured theta") {
  RunConfig cfg = config_from_json(R"({"suites":["beurling-1d"],"theta":[0,1],"d":[9,9]})");
  RunOutcome out = execute(cfg);
  json doc = json::parse(out.report_json);
  const json& suite = doc["suites"][0];
  CHECK(suite["suite"] == "beurling-1d");
  CHECK(suite["caps"] == "9");
  bool found = false;
  for (const json& c : suite["cases"]) {
    if (c["name"] == "construction") {
      CHECK(c["metrics"]["dim_s"] == 9.0);  // [z] on cap 9
      found = true;
    }
  }
  CHECK(found);
}

TEST_CASE("a failing suite flips the outcome without throwing") {
  // Tolerance far below floating-point noise must fail verification.
  RunConfig cfg = config_from_json(
      R"({"suites":["theorem-2-1"],"space":"dirichlet","n":1,"d":[12],"tolerances":{"psd":1e-18}})");
  RunOutcome out = execute(cfg);
  CHECK_FALSE(out.pass);
  json doc = json::parse(out.report_json);
  CHECK(doc["overall_pass"] == false);
}
