#pragma once

#include <vector>

#include "polywander/operator.hpp"

namespace polywander {

/// Outcome of certifying a Hermitian quadratic form on the interior.
struct FormReport {
  double min_eigenvalue = 0.0;
  double max_eigenvalue = 0.0;
  bool psd = false;  // min_eigenvalue >= -tolerance
  int margin = 0;
  double tolerance = 0.0;
  Eigen::Index interior_dim = 0;
};

/// Certifies Shimorin's inequality ||Tx + y||^2 <= 2(||x||^2 + ||Ty||^2)
/// for x, y ranging over the interior, via the minimum eigenvalue of the
/// Hermitian block form
///   [ 2I - T*T   -T*      ]
///   [ -T          2T*T - I ]
/// compressed to the interior. The blocks are compressions of the
/// full-grid products, so the form evaluates the exact left-hand sides for
/// interior arguments (margin >= 1 keeps Tx and Ty truncation-exact).
FormReport check_shimorin(const OperatorMatrix& T, int margin = 1, double tol = 1e-12);

/// Certifies operator concavity 2T*T - T*^2 T^2 - I >= 0 on the interior
/// (margin >= 2 keeps T^2 truncation-exact there). Reports the full interior
/// eigenvalue range; the Dirichlet shift satisfies the identity with
/// equality, the Bergman shift fails it.
FormReport check_concave(const OperatorMatrix& T, int margin = 2, double tol = 1e-12);

struct PairResidual {
  int i = 0, j = 0;  // zero-based variable indices
  double residual = 0.0;
};

struct CommutationReport {
  double max_residual = 0.0;
  double tolerance = 0.0;
  bool pass = false;
  std::vector<PairResidual> pairs;
};

/// max over i < j of || (T_i T_j* - T_j* T_i) restricted to the interior ||.
/// Requires at least two variables.
CommutationReport check_doubly_commuting(const ShiftTuple& tuple, double tol = 1e-12);

/// || (T_i (T_j* T_j) - (T_j* T_j) T_i) restricted to the interior ||.
double commutes_with_modulus(const OperatorMatrix& Ti, const OperatorMatrix& Tj, int margin = 1);

/// Numerical ranks of T^m for m = 1..max_power (singular values above
/// dim * eps * largest). first_zero_power is the smallest m with rank 0,
/// or -1 when none vanishes; a vanishing power witnesses nilpotency of the
/// compressed shifts, the finite stand-in for having no unitary part.
struct AnalyticityReport {
  std::vector<Eigen::Index> ranks;
  int first_zero_power = -1;
};

AnalyticityReport analyticity_proxy(const OperatorMatrix& T, int max_power);

}  // namespace polywander
