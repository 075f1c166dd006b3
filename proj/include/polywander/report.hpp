#pragma once

#include <string>
#include <utility>
#include <vector>

#include "polywander/suites.hpp"

namespace polywander {

/// Volatile run metadata. Everything here lands under the single
/// "timestamp" key of the JSON report, so that two runs of the same config
/// differ in no other byte.
struct RunTimings {
  std::string generated_at;  // ISO-8601 UTC
  std::vector<std::pair<std::string, double>> wall_seconds;
};

/// Full JSON report: resolved config echo, per-suite case results, overall
/// verdict, tool identity, and the volatile timestamp block. config_echo
/// must itself be a JSON document.
std::string report_json(const std::string& config_echo, const std::vector<SuiteReport>& suites,
                        bool overall_pass, const RunTimings& timings);

/// Flat one-row-per-case CSV with a fixed header:
/// suite,case,space,n,d,alpha,residual,angle,min_eig,pass.
/// Doubles are printed with 17 significant digits; absent quantities stay
/// empty.
std::string report_csv(const std::vector<SuiteReport>& suites);

}  // namespace polywander
