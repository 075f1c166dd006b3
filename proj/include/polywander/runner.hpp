#pragma once

#include <string>
#include <vector>

#include "polywander/suites.hpp"

namespace polywander {

/// Resolved run configuration. alpha inside base is zero-based; the JSON
/// layer speaks one-based variable labels.
struct RunConfig {
  std::vector<std::string> selectors = {"all"};
  CaseSpec base;
  long trials = 100000;
  std::vector<Complex> theta = {Complex(0.0, 0.0), Complex(0.0, 0.0), Complex(1.0, 0.0)};
  std::vector<std::string> formats = {"json", "csv"};
  std::string out_dir = ".";
};

/// Suite selectors in canonical execution order ("all" expands to these).
const std::vector<std::string>& known_selectors();

/// Strict parser: unknown keys are rejected by name, alpha is validated
/// against n, and defaults fill everything absent. Accepts an empty object.
RunConfig config_from_json(const std::string& text);

/// Canonical JSON echo of the verification-relevant fields (delivery
/// options like the output directory are left out so reports stay
/// byte-comparable across working directories).
std::string resolved_config_json(const RunConfig& config);

struct RunOutcome {
  bool pass = false;
  std::string report_json;
  std::string report_csv;
  std::vector<std::string> summary;  // one line per executed suite
};

RunOutcome execute(const RunConfig& config);

}  // namespace polywander
