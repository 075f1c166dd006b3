#include "polywander.h"

#include <exception>
#include <ios>
#include <new>
#include <stdexcept>
#include <string>

#include "polywander/runner.hpp"
#include "polywander/version.hpp"

struct pw_run {
  polywander::RunConfig config;
  polywander::RunOutcome outcome;
  bool executed = false;
  std::string error;
};

namespace {

pw_status classify(const std::exception& e, pw_run* run) {
  if (run != nullptr) run->error = e.what();
  if (dynamic_cast<const polywander::ConfigError*>(&e) != nullptr) return PW_ERR_CONFIG;
  if (dynamic_cast<const std::invalid_argument*>(&e) != nullptr) return PW_ERR_ARGUMENT;
  if (dynamic_cast<const std::out_of_range*>(&e) != nullptr) return PW_ERR_ARGUMENT;
  if (dynamic_cast<const std::ios_base::failure*>(&e) != nullptr) return PW_ERR_IO;
  if (dynamic_cast<const std::bad_alloc*>(&e) != nullptr) return PW_ERR_INTERNAL;
  return PW_ERR_INTERNAL;
}

}  // namespace

extern "C" {

const char* pw_version(void) { return polywander::kToolVersion; }

pw_status pw_run_create(const char* config_json, pw_run** out_run) {
  if (out_run == nullptr) return PW_ERR_ARGUMENT;
  *out_run = nullptr;
  auto run = new (std::nothrow) pw_run;
  if (run == nullptr) return PW_ERR_INTERNAL;
  *out_run = run;
  try {
    const std::string text =
        (config_json == nullptr || *config_json == '\0') ? "{}" : config_json;
    run->config = polywander::config_from_json(text);
  } catch (const std::exception& e) {
    return classify(e, run);
  }
  return PW_OK;
}

pw_status pw_run_execute(pw_run* run) {
  if (run == nullptr) return PW_ERR_ARGUMENT;
  try {
    run->outcome = polywander::execute(run->config);
    run->executed = true;
    return run->outcome.pass ? PW_OK : PW_FAIL_VERIFICATION;
  } catch (const std::exception& e) {
    return classify(e, run);
  } catch (...) {
    run->error = "unknown failure";
    return PW_ERR_INTERNAL;
  }
}

const char* pw_run_report_json(const pw_run* run) {
  if (run == nullptr || !run->executed) return nullptr;
  return run->outcome.report_json.c_str();
}

const char* pw_run_report_csv(const pw_run* run) {
  if (run == nullptr || !run->executed) return nullptr;
  return run->outcome.report_csv.c_str();
}

int pw_run_passed(const pw_run* run) {
  if (run == nullptr || !run->executed) return -1;
  return run->outcome.pass ? 1 : 0;
}

size_t pw_run_summary_count(const pw_run* run) {
  if (run == nullptr || !run->executed) return 0;
  return run->outcome.summary.size();
}

const char* pw_run_summary_line(const pw_run* run, size_t index) {
  if (run == nullptr || !run->executed || index >= run->outcome.summary.size()) return nullptr;
  return run->outcome.summary[index].c_str();
}

const char* pw_run_error(const pw_run* run) {
  if (run == nullptr) return "";
  return run->error.c_str();
}

void pw_run_destroy(pw_run* run) { delete run; }

}  // extern "C"
