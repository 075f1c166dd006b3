#include "polywander/report.hpp"

#include <cmath>
#include <cstdio>

#include "json.hpp"
#include "polywander/version.hpp"

namespace polywander {

namespace {

using nlohmann::json;

std::string g17(double value) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", value);
  return buf;
}

json case_to_json(const CaseResult& c) {
  json metrics = json::object();
  for (const auto& [key, value] : c.metrics) metrics[key] = value;
  json out = {
      {"name", c.name}, {"digest", c.digest}, {"pass", c.pass}, {"metrics", std::move(metrics)}};
  if (!c.notes.empty()) out["notes"] = c.notes;
  return out;
}

json suite_to_json(const SuiteReport& rep) {
  json cases = json::array();
  for (const CaseResult& c : rep.cases) cases.push_back(case_to_json(c));
  return json{{"suite", rep.suite},      {"anchor", rep.anchor},
              {"space", rep.space},      {"n", rep.n},
              {"caps", rep.caps_label},  {"alpha", rep.alpha_label},
              {"pass", rep.pass},        {"cases", std::move(cases)}};
}

}  // namespace

std::string report_json(const std::string& config_echo, const std::vector<SuiteReport>& suites,
                        bool overall_pass, const RunTimings& timings) {
  json suites_json = json::array();
  for (const SuiteReport& rep : suites) suites_json.push_back(suite_to_json(rep));

  json wall = json::object();
  for (const auto& [key, seconds] : timings.wall_seconds) wall[key] = seconds;

  json doc = {
      {"config", json::parse(config_echo)},
      {"overall_pass", overall_pass},
      {"suites", std::move(suites_json)},
      {"timestamp", json{{"generated_at", timings.generated_at}, {"wall_seconds", std::move(wall)}}},
      {"tool", json{{"name", kToolName}, {"version", kToolVersion}}},
  };
  return doc.dump(2) + "\n";
}

std::string report_csv(const std::vector<SuiteReport>& suites) {
  std::string out = "suite,case,space,n,d,alpha,residual,angle,min_eig,pass\n";
  for (const SuiteReport& rep : suites) {
    for (const CaseResult& c : rep.cases) {
      out += rep.suite;
      out += ',';
      out += c.name;
      out += ',';
      out += rep.space;
      out += ',';
      out += rep.n > 0 ? std::to_string(rep.n) : "-";
      out += ',';
      out += rep.caps_label;
      out += ',';
      out += rep.alpha_label;
      out += ',';
      if (!std::isnan(c.residual)) out += g17(c.residual);
      out += ',';
      if (!std::isnan(c.angle)) out += g17(c.angle);
      out += ',';
      if (!std::isnan(c.min_eig)) out += g17(c.min_eig);
      out += ',';
      out += c.pass ? "true" : "false";
      out += '\n';
    }
  }
  return out;
}

}  // namespace polywander
