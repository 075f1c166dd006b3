#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cstring>
#include <string>

#include "doctest.h"
#include "json.hpp"
#include "polywander.h"

using nlohmann::json;

namespace {

std::string stripped(const char* report) {
  json doc = json::parse(report);
  doc.erase("timestamp");
  return doc.dump(2);
}

}  // namespace

TEST_CASE("version string is semantic") {
  const std::string v = pw_version();
  CHECK(v.find('.') != std::string::npos);
}

TEST_CASE("null and default configs behave") {
  pw_run* run = nullptr;
  CHECK(pw_run_create(nullptr, &run) == PW_OK);
  REQUIRE(run != nullptr);
  CHECK(std::strlen(pw_run_error(run)) == 0);
  CHECK(pw_run_passed(run) == -1);  // not executed yet
  CHECK(pw_run_report_json(run) == nullptr);
  pw_run_destroy(run);
  CHECK(pw_run_create("{}", nullptr) == PW_ERR_ARGUMENT);
  pw_run_destroy(nullptr);  // must be a no-op
}

TEST_CASE("config errors keep the handle and the message") {
  pw_run* run = nullptr;
  CHECK(pw_run_create(R"({"suites":["bogus"]})", &run) == PW_ERR_CONFIG);
  REQUIRE(run != nullptr);
  CHECK(std::string(pw_run_error(run)).find("bogus") != std::string::npos);
  pw_run_destroy(run);

  CHECK(pw_run_create("{broken", &run) == PW_ERR_CONFIG);
  REQUIRE(run != nullptr);
  CHECK(std::strlen(pw_run_error(run)) > 0);
  pw_run_destroy(run);
}

TEST_CASE("a small run executes and reports through the C surface") {
  pw_run* run = nullptr;
  REQUIRE(pw_run_create(
              R"({"suites":["scalar-inequality","beurling-1d"],"trials":2000,"d":[8,8]})",
              &run) == PW_OK);
  CHECK(pw_run_execute(run) == PW_OK);
  CHECK(pw_run_passed(run) == 1);
  REQUIRE(pw_run_report_json(run) != nullptr);
  REQUIRE(pw_run_report_csv(run) != nullptr);
  CHECK(pw_run_summary_count(run) == 2);
  CHECK(std::string(pw_run_summary_line(run, 0)).rfind("[PASS]", 0) == 0);
  CHECK(pw_run_summary_line(run, 2) == nullptr);

  json doc = json::parse(pw_run_report_json(run));
  CHECK(doc["overall_pass"] == true);
  pw_run_destroy(run);
}

TEST_CASE("verification failures are distinct from errors") {
  pw_run* run = nullptr;
  REQUIRE(pw_run_create(
              R"({"suites":["theorem-2-1"],"space":"dirichlet","n":1,"d":[12],"tolerances":{"psd":1e-18}})",
              &run) == PW_OK);
  CHECK(pw_run_execute(run) == PW_FAIL_VERIFICATION);
  CHECK(pw_run_passed(run) == 0);
  CHECK(pw_run_report_json(run) != nullptr);  // report still available
  pw_run_destroy(run);
}

TEST_CASE("argument errors surface from execution") {
  pw_run* run = nullptr;
  // theta = 0 is rejected by the one-variable suite at execution time.
  REQUIRE(pw_run_create(R"({"suites":["beurling-1d"],"theta":[0]})", &run) == PW_OK);
  CHECK(pw_run_execute(run) == PW_ERR_ARGUMENT);
  CHECK(std::strlen(pw_run_error(run)) > 0);
  pw_run_destroy(run);
}

TEST_CASE("reports are byte-stable across runs modulo the timestamp") {
  const char* cfg = R"({"suites":["scalar-inequality","theorem-2-3"],"trials":3000,"d":[7,7]})";
  std::string first, second, csv_first, csv_second;
  for (int i = 0; i < 2; ++i) {
    pw_run* run = nullptr;
    REQUIRE(pw_run_create(cfg, &run) == PW_OK);
    REQUIRE(pw_run_execute(run) == PW_OK);
    (i == 0 ? first : second) = stripped(pw_run_report_json(run));
    (i == 0 ? csv_first : csv_second) = pw_run_report_csv(run);
    pw_run_destroy(run);
  }
  CHECK(first == second);
  CHECK(csv_first == csv_second);
}
