#include "polywander/runner.hpp"

#include <algorithm>
#include <chrono>
#include <ctime>
#include <set>

#include "json.hpp"
#include "polywander/report.hpp"

namespace polywander {

namespace {

using nlohmann::json;

const std::vector<std::string> kSelectors = {
    "scalar-inequality", "theorem-2-1",  "theorem-2-3",
    "theorem-2-5",       "beurling-1d",  "negative-examples",
};

std::vector<std::string> expand_selectors(const std::vector<std::string>& requested) {
  if (requested.empty()) throw ConfigError("no suites selected");
  std::vector<std::string> plan;
  const auto add = [&plan](const std::string& name) {
    if (std::find(plan.begin(), plan.end(), name) == plan.end()) plan.push_back(name);
  };
  for (const std::string& sel : requested) {
    if (sel == "all") {
      for (const std::string& name : kSelectors) add(name);
    } else if (std::find(kSelectors.begin(), kSelectors.end(), sel) != kSelectors.end()) {
      add(sel);
    } else {
      throw ConfigError("unknown suite selector: " + sel);
    }
  }
  return plan;
}

Complex parse_coeff(const json& v, const char* what) {
  if (v.is_number()) return Complex(v.get<double>(), 0.0);
  if (v.is_array() && v.size() == 2 && v[0].is_number() && v[1].is_number()) {
    return Complex(v[0].get<double>(), v[1].get<double>());
  }
  throw ConfigError(std::string(what) + " entries must be numbers or [re, im] pairs");
}

json coeffs_to_json(const std::vector<Complex>& coeffs) {
  json out = json::array();
  for (const Complex& c : coeffs) out.push_back(json::array({c.real(), c.imag()}));
  return out;
}

std::string iso_utc_now() {
  const std::time_t t = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&t, &tm);
  char buf[32];
  std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

SuiteReport dispatch(const std::string& selector, const RunConfig& config) {
  if (selector == "scalar-inequality") {
    return scalar_inequality_suite(config.base.seed, config.trials);
  }
  if (selector == "theorem-2-1") return shift_wandering_suite(config.base);
  if (selector == "theorem-2-3") return doubly_commuting_wandering_suite(config.base);
  if (selector == "theorem-2-5") return modulus_commutation_suite(config.base);
  if (selector == "beurling-1d") {
    return beurling_suite(config.base.kind, config.theta, config.base.caps.at(0),
                          config.base.tol_residual, config.base.tol_angle);
  }
  if (selector == "negative-examples") {
    return negative_control_suite(config.base.tol_residual, config.base.tol_angle);
  }
  throw ConfigError("unknown suite selector: " + selector);
}

}  // namespace

const std::vector<std::string>& known_selectors() { return kSelectors; }

RunConfig config_from_json(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ConfigError(std::string("config is not valid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw ConfigError("config must be a JSON object");

  static const std::set<std::string> known = {
      "suites", "space",  "n",     "d",     "alpha",      "recipe", "generators", "margin",
      "seed",   "trials", "theta", "omega", "tolerances", "out",    "formats"};
  for (const auto& [key, value] : doc.items()) {
    (void)value;
    if (!known.count(key)) throw ConfigError("unknown config field: " + key);
  }

  RunConfig cfg;
  try {
    if (doc.contains("suites")) {
      cfg.selectors.clear();
      if (doc["suites"].is_string()) {
        cfg.selectors.push_back(doc["suites"].get<std::string>());
      } else {
        for (const json& s : doc["suites"]) cfg.selectors.push_back(s.get<std::string>());
      }
    }
    if (doc.contains("space")) cfg.base.kind = space_kind_from_string(doc["space"].get<std::string>());

    const bool has_n = doc.contains("n");
    const bool has_d = doc.contains("d");
    if (has_n) {
      cfg.base.n = doc["n"].get<int>();
      if (cfg.base.n <= 0) throw ConfigError("n must be positive");
    }
    if (has_d) {
      cfg.base.caps = doc["d"].get<MultiIndex>();
      if (cfg.base.caps.empty()) throw ConfigError("d must not be empty");
      if (!has_n) {
        cfg.base.n = static_cast<int>(cfg.base.caps.size());
      } else if (static_cast<int>(cfg.base.caps.size()) != cfg.base.n) {
        throw ConfigError("d lists " + std::to_string(cfg.base.caps.size()) +
                          " caps but n = " + std::to_string(cfg.base.n));
      }
    } else if (has_n) {
      cfg.base.caps.assign(static_cast<size_t>(cfg.base.n), 10);
    }

    if (doc.contains("alpha")) {
      cfg.base.alpha.clear();
      for (const json& a : doc["alpha"]) {
        const int v = a.get<int>();
        if (v < 1 || v > cfg.base.n) {
          throw ConfigError("alpha entry " + std::to_string(v) + " is outside 1.." +
                            std::to_string(cfg.base.n));
        }
        cfg.base.alpha.push_back(v - 1);
      }
      std::vector<int> sorted = cfg.base.alpha;
      std::sort(sorted.begin(), sorted.end());
      if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
        throw ConfigError("alpha entries must be distinct");
      }
      if (cfg.base.alpha.empty()) throw ConfigError("alpha must not be empty");
    } else {
      cfg.base.alpha.clear();
      for (int i = 0; i < cfg.base.n; ++i) cfg.base.alpha.push_back(i);
    }

    if (doc.contains("recipe")) cfg.base.recipe = recipe_from_string(doc["recipe"].get<std::string>());

    if (doc.contains("generators")) {
      cfg.base.generators.clear();
      for (const json& poly : doc["generators"]) {
        std::vector<Complex> coeffs;
        for (const json& c : poly) coeffs.push_back(parse_coeff(c, "generator"));
        cfg.base.generators.push_back(std::move(coeffs));
      }
    }

    if (doc.contains("margin")) {
      cfg.base.margin = doc["margin"].get<int>();
      if (cfg.base.margin < 1) throw ConfigError("margin must be at least 1");
    }
    if (doc.contains("seed")) cfg.base.seed = doc["seed"].get<std::uint64_t>();
    if (doc.contains("trials")) {
      cfg.trials = doc["trials"].get<long>();
      if (cfg.trials < 1) throw ConfigError("trials must be at least 1");
    }
    if (doc.contains("theta")) {
      cfg.theta.clear();
      for (const json& c : doc["theta"]) cfg.theta.push_back(parse_coeff(c, "theta"));
    }
    if (doc.contains("omega")) {
      cfg.base.custom_omega.clear();
      for (const json& row : doc["omega"]) {
        cfg.base.custom_omega.push_back(row.get<std::vector<double>>());
      }
    }

    if (doc.contains("tolerances")) {
      const json& tols = doc["tolerances"];
      if (!tols.is_object()) throw ConfigError("tolerances must be an object");
      for (const auto& [key, value] : tols.items()) {
        (void)value;
        if (key != "residual" && key != "angle" && key != "psd") {
          throw ConfigError("unknown tolerance field: " + key);
        }
      }
      if (tols.contains("residual")) cfg.base.tol_residual = tols["residual"].get<double>();
      if (tols.contains("angle")) cfg.base.tol_angle = tols["angle"].get<double>();
      if (tols.contains("psd")) cfg.base.tol_psd = tols["psd"].get<double>();
    }

    if (doc.contains("out")) cfg.out_dir = doc["out"].get<std::string>();
    if (doc.contains("formats")) {
      cfg.formats.clear();
      for (const json& f : doc["formats"]) {
        const std::string name = f.get<std::string>();
        if (name != "json" && name != "csv") throw ConfigError("unknown report format: " + name);
        cfg.formats.push_back(name);
      }
    }
  } catch (const json::exception& e) {
    throw ConfigError(std::string("config field has the wrong type: ") + e.what());
  }

  expand_selectors(cfg.selectors);  // reject unknown selectors up front
  return cfg;
}

std::string resolved_config_json(const RunConfig& config) {
  json doc;
  doc["suites"] = expand_selectors(config.selectors);
  doc["space"] = to_string(config.base.kind);
  doc["n"] = config.base.n;
  doc["d"] = config.base.caps;
  json alpha = json::array();
  for (int a : config.base.alpha) alpha.push_back(a + 1);
  doc["alpha"] = std::move(alpha);
  doc["recipe"] = to_string(config.base.recipe);
  json gens = json::array();
  for (const auto& g : resolve_generators(config.base)) gens.push_back(coeffs_to_json(g));
  doc["generators"] = std::move(gens);
  doc["margin"] = config.base.margin;
  doc["seed"] = config.base.seed;
  doc["trials"] = config.trials;
  doc["theta"] = coeffs_to_json(config.theta);
  doc["tolerances"] = json{{"residual", config.base.tol_residual},
                           {"angle", config.base.tol_angle},
                           {"psd", config.base.tol_psd}};
  if (!config.base.custom_omega.empty()) doc["omega"] = config.base.custom_omega;
  doc["formats"] = config.formats;
  return doc.dump(2);
}

RunOutcome execute(const RunConfig& config) {
  const std::vector<std::string> plan = expand_selectors(config.selectors);
  std::vector<SuiteReport> suites;
  RunTimings timings;

  const auto seconds_since = [](std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  };
  const auto t0 = std::chrono::steady_clock::now();
  for (const std::string& selector : plan) {
    const auto s0 = std::chrono::steady_clock::now();
    suites.push_back(dispatch(selector, config));
    timings.wall_seconds.emplace_back(selector, seconds_since(s0));
  }
  timings.wall_seconds.emplace_back("total", seconds_since(t0));
  timings.generated_at = iso_utc_now();

  RunOutcome out;
  out.pass = std::all_of(suites.begin(), suites.end(),
                         [](const SuiteReport& s) { return s.pass; });
  out.report_json = report_json(resolved_config_json(config), suites, out.pass, timings);
  out.report_csv = report_csv(suites);
  for (const SuiteReport& s : suites) {
    long ok = std::count_if(s.cases.begin(), s.cases.end(),
                            [](const CaseResult& c) { return c.pass; });
    out.summary.push_back(std::string(s.pass ? "[PASS] " : "[FAIL] ") + s.suite + " (" +
                          std::to_string(ok) + "/" + std::to_string(s.cases.size()) + " cases)");
  }
  return out;
}

}  // namespace polywander
