#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "polywander.h"

namespace {

using nlohmann::json;

// Exit taxonomy: 0 pass, 1 verification failure, 2 configuration error,
// 3 I/O error.
constexpr int kExitPass = 0;
constexpr int kExitVerification = 1;
constexpr int kExitConfig = 2;
constexpr int kExitIo = 3;

int exit_for(pw_status status) {
  switch (status) {
    case PW_OK:
      return kExitPass;
    case PW_FAIL_VERIFICATION:
      return kExitVerification;
    case PW_ERR_CONFIG:
    case PW_ERR_ARGUMENT:
      return kExitConfig;
    case PW_ERR_IO:
    case PW_ERR_INTERNAL:
    default:
      return kExitIo;
  }
}

// Coefficient token: "re" or "re:im".
json parse_coeff_token(const std::string& token) {
  const auto colon = token.find(':');
  size_t used = 0;
  const double re = std::stod(token.substr(0, colon), &used);
  double im = 0.0;
  if (colon != std::string::npos) {
    im = std::stod(token.substr(colon + 1), &used);
  }
  return json::array({re, im});
}

json parse_poly(const std::string& text) {
  json poly = json::array();
  std::stringstream ss(text);
  std::string token;
  while (std::getline(ss, token, ',')) poly.push_back(parse_coeff_token(token));
  if (poly.empty()) throw std::invalid_argument("empty coefficient list");
  return poly;
}

json parse_generators(const std::string& text) {
  json gens = json::array();
  std::stringstream ss(text);
  std::string poly;
  while (std::getline(ss, poly, ';')) gens.push_back(parse_poly(poly));
  return gens;
}

void print_case_details(const std::string& report, bool failures_only) {
  json doc = json::parse(report, nullptr, false);
  if (doc.is_discarded()) return;
  for (const json& suite : doc["suites"]) {
    for (const json& c : suite["cases"]) {
      const bool pass = c["pass"].get<bool>();
      const std::string notes = c.contains("notes") ? c["notes"].get<std::string>() : "";
      if (!pass) {
        std::cout << "  [FAIL] " << suite["suite"].get<std::string>() << "/"
                  << c["name"].get<std::string>() << (notes.empty() ? "" : ": " + notes) << "\n";
      } else if (!notes.empty() && !failures_only) {
        std::cout << "  " << suite["suite"].get<std::string>() << "/"
                  << c["name"].get<std::string>() << ": " << notes << "\n";
      }
    }
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"polywander: wandering-subspace verification over truncated polydisc spaces"};

  std::string config_path;
  std::vector<std::string> suites;
  std::string space;
  int n = -1;
  std::vector<int> caps;
  std::vector<int> alpha;
  std::string recipe;
  std::string generators_text;
  std::string theta_text;
  int margin = -1;
  std::uint64_t seed = 0;
  bool seed_set = false;
  long trials = -1;
  double tol_residual = -1.0, tol_angle = -1.0, tol_psd = -1.0;
  std::string out_dir;
  std::vector<std::string> formats;
  bool quiet = false;
  bool show_version = false;

  app.add_option("--config", config_path, "JSON config file; flags override its fields");
  app.add_option("--suite", suites, "suite selector (repeatable); 'all' runs everything");
  app.add_option("--space", space, "hardy | bergman | dirichlet | custom");
  app.add_option("--n", n, "number of variables");
  app.add_option("--d", caps, "per-variable caps, comma separated")->delimiter(',');
  app.add_option("--alpha", alpha, "one-based variable subset, comma separated")->delimiter(',');
  app.add_option("--recipe", recipe, "full-space | tensor | vanishing-ideal");
  app.add_option("--generators", generators_text,
                 "per-variable polynomials 'c0,c1;c0,c1,c2' with c = re or re:im");
  app.add_option("--theta", theta_text, "one-variable polynomial for beurling-1d");
  app.add_option("--margin", margin, "interior margin (>= 1)");
  app.add_option("--seed", seed, "RNG seed")->each([&seed_set](const std::string&) { seed_set = true; });
  app.add_option("--trials", trials, "random trials for scalar-inequality");
  app.add_option("--tol-residual", tol_residual, "residual tolerance");
  app.add_option("--tol-angle", tol_angle, "angle tolerance (radians)");
  app.add_option("--tol-psd", tol_psd, "eigenvalue slack tolerance");
  app.add_option("--out", out_dir, "output directory (default $POLYWANDER_OUT or '.')");
  app.add_option("--format", formats, "report formats: json, csv (repeatable)");
  app.add_flag("--quiet", quiet, "suppress per-suite summary output");
  app.add_flag("--version", show_version, "print the library version and exit");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitConfig;
  }

  if (show_version) {
    std::cout << pw_version() << "\n";
    return kExitPass;
  }

  json config = json::object();
  if (!config_path.empty()) {
    std::ifstream in(config_path);
    if (!in) {
      std::cerr << "error: cannot read config file: " << config_path << "\n";
      return kExitIo;
    }
    std::stringstream buffer;
    buffer << in.rdbuf();
    config = json::parse(buffer.str(), nullptr, false);
    if (config.is_discarded()) {
      std::cerr << "error: config file is not valid JSON: " << config_path << "\n";
      return kExitConfig;
    }
  }

  try {
    if (!suites.empty()) config["suites"] = suites;
    if (!space.empty()) config["space"] = space;
    if (n >= 0) config["n"] = n;
    if (!caps.empty()) config["d"] = caps;
    if (!alpha.empty()) config["alpha"] = alpha;
    if (!recipe.empty()) config["recipe"] = recipe;
    if (!generators_text.empty()) config["generators"] = parse_generators(generators_text);
    if (!theta_text.empty()) config["theta"] = parse_poly(theta_text);
    if (margin >= 0) config["margin"] = margin;
    if (seed_set) config["seed"] = seed;
    if (trials >= 0) config["trials"] = trials;
    json tols = config.contains("tolerances") ? config["tolerances"] : json::object();
    if (tol_residual >= 0) tols["residual"] = tol_residual;
    if (tol_angle >= 0) tols["angle"] = tol_angle;
    if (tol_psd >= 0) tols["psd"] = tol_psd;
    if (!tols.empty()) config["tolerances"] = tols;
    if (!formats.empty()) config["formats"] = formats;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitConfig;
  }

  // Delivery options resolve here; the library never touches the filesystem.
  std::string resolved_out = out_dir;
  if (resolved_out.empty() && config.contains("out")) {
    resolved_out = config["out"].get<std::string>();
  }
  if (resolved_out.empty()) {
    const char* env = std::getenv("POLYWANDER_OUT");
    resolved_out = env != nullptr && *env != '\0' ? env : ".";
  }
  std::vector<std::string> resolved_formats = formats;
  if (resolved_formats.empty() && config.contains("formats")) {
    resolved_formats = config["formats"].get<std::vector<std::string>>();
  }
  if (resolved_formats.empty()) resolved_formats = {"json", "csv"};

  pw_run* run = nullptr;
  pw_status status = pw_run_create(config.dump().c_str(), &run);
  if (status != PW_OK) {
    std::cerr << "error: " << (run != nullptr ? pw_run_error(run) : "allocation failed") << "\n";
    pw_run_destroy(run);
    return exit_for(status);
  }

  status = pw_run_execute(run);
  if (status != PW_OK && status != PW_FAIL_VERIFICATION) {
    std::cerr << "error: " << pw_run_error(run) << "\n";
    pw_run_destroy(run);
    return exit_for(status);
  }

  const std::string report_json_text = pw_run_report_json(run);
  const std::string report_csv_text = pw_run_report_csv(run);

  std::error_code ec;
  std::filesystem::create_directories(resolved_out, ec);
  if (ec) {
    std::cerr << "error: cannot create output directory: " << resolved_out << "\n";
    pw_run_destroy(run);
    return kExitIo;
  }
  for (const std::string& format : resolved_formats) {
    const std::string path = resolved_out + "/report." + format;
    std::ofstream out(path, std::ios::binary);
    out << (format == "json" ? report_json_text : report_csv_text);
    out.flush();
    if (!out) {
      std::cerr << "error: cannot write " << path << "\n";
      pw_run_destroy(run);
      return kExitIo;
    }
    if (!quiet) std::cout << "wrote " << path << "\n";
  }

  if (!quiet) {
    for (size_t i = 0; i < pw_run_summary_count(run); ++i) {
      std::cout << pw_run_summary_line(run, i) << "\n";
    }
    print_case_details(report_json_text, false);
  }
  const int passed = pw_run_passed(run);
  if (!quiet) std::cout << "overall: " << (passed == 1 ? "PASS" : "FAIL") << "\n";
  pw_run_destroy(run);
  return passed == 1 ? kExitPass : kExitVerification;
}
