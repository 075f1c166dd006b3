#pragma once

#include <cmath>
#include <random>
#include <stdexcept>
#include <string>

#include "polywander/suites.hpp"

namespace test_util {

inline const polywander::CaseResult& find_case(const polywander::SuiteReport& rep,
                                               const std::string& name) {
  for (const auto& c : rep.cases) {
    if (c.name == name) return c;
  }
  throw std::runtime_error("suite " + rep.suite + " has no case named " + name);
}

inline double metric(const polywander::CaseResult& c, const std::string& key) {
  for (const auto& [k, v] : c.metrics) {
    if (k == key) return v;
  }
  throw std::runtime_error("case " + c.name + " has no metric named " + key);
}

/// Deterministic uniform [0,1) stream for test data.
class Uniform {
public:
  explicit Uniform(std::uint64_t seed) : rng_(seed) {}
  double operator()() { return static_cast<double>(rng_() >> 11) * 0x1.0p-53; }
  polywander::Complex complex_in_disc(double scale) {
    const double r = scale * std::sqrt((*this)());
    const double phi = 2.0 * 3.141592653589793238462643 * (*this)();
    return {r * std::cos(phi), r * std::sin(phi)};
  }

private:
  std::mt19937_64 rng_;
};

}  // namespace test_util
