#pragma once

#include <complex>
#include <stdexcept>
#include <vector>

namespace polywander {

using Complex = std::complex<double>;

/// Exponent tuple (k_1, ..., k_n) of a monomial z^k. Entries are
/// non-negative; the length fixes the number of variables.
using MultiIndex = std::vector<int>;

/// Two objects live on incompatible grids or have mismatched sizes.
class ShapeError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// A requested computation is inconsistent with the truncation parameters
/// (empty interior, depth beyond the exact range, unusable weights).
class ConfigError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

}  // namespace polywander
