#pragma once

#include <cstdint>
#include <limits>
#include <string>
#include <utility>
#include <vector>

#include "polywander/wandering.hpp"

namespace polywander {

/// How a verification case builds its invariant subspace.
enum class Recipe { full_space, tensor, vanishing_ideal };

std::string to_string(Recipe recipe);
Recipe recipe_from_string(const std::string& name);  // throws ConfigError

/// Inputs of one verification case. Variables in alpha are zero-based here;
/// the CLI layer translates from the one-based external convention.
struct CaseSpec {
  SpaceKind kind = SpaceKind::bergman;
  int n = 2;
  MultiIndex caps = {10, 10};
  std::vector<int> alpha = {0, 1};
  Recipe recipe = Recipe::tensor;
  /// Ascending per-variable coefficient lists for the tensor recipe.
  /// Empty means the built-in defaults (z - 1/2, z^2, then 1).
  std::vector<std::vector<Complex>> generators;
  int margin = 1;
  double tol_residual = 1e-10;
  double tol_angle = 1e-8;
  double tol_psd = 1e-12;
  std::uint64_t seed = 42;
  /// Per-variable weight tables, required when kind == custom.
  std::vector<std::vector<double>> custom_omega;
};

struct CaseResult {
  std::string name;
  std::string digest;  // FNV-1a fingerprint of the case inputs
  std::vector<std::pair<std::string, double>> metrics;
  bool pass = false;
  std::string notes;
  // Flat slots for the CSV view; NaN when a case has no such quantity.
  double residual = std::numeric_limits<double>::quiet_NaN();
  double angle = std::numeric_limits<double>::quiet_NaN();
  double min_eig = std::numeric_limits<double>::quiet_NaN();
};

struct SuiteReport {
  std::string suite;   // selector name, stable CLI contract
  std::string anchor;  // descriptive label of what the suite certifies
  // Report labels; "-" where a field does not apply (the scalar suite).
  std::string space = "-";
  int n = 0;
  std::string caps_label = "-";   // e.g. "10x10"
  std::string alpha_label = "-";  // one-based, e.g. "1+2"
  std::vector<CaseResult> cases;
  bool pass = false;  // every case passed
};

SpaceModel make_model(const CaseSpec& spec);

/// Generators a tensor-recipe case actually uses: the spec's own list, or
/// the built-in defaults when it is empty (z - 1/2, then z^2, then 1).
std::vector<std::vector<Complex>> resolve_generators(const CaseSpec& spec);

/// Tensor product of one-variable invariant closures [g_i] under the
/// compressed shifts, spanned on the product grid. One generator per
/// variable; a zero polynomial is rejected. The restriction of the shift
/// tuple to the result is doubly commuting by construction.
Subspace gen_tensor_invariant_subspace(const SpaceModel& model,
                                       const std::vector<std::vector<Complex>>& generators);

/// Invariant closure of {z_1, ..., z_n}: everything vanishing at the
/// origin. Needs n >= 2; in one variable this is the span of z and has the
/// wandering property, so it is useless as a negative control.
Subspace gen_vanishing_ideal_subspace(const SpaceModel& model);

/// Coefficient inequality |z+w|^2/(k+1) <= 2(|z|^2/k + |w|^2/(k+2)) for
/// k >= 1, sampled over seeded random complex pairs scaled to |z| <= 10 and
/// k in 1..100, plus the equality family (k+2)z = kw and one fixed exact
/// equality point.
SuiteReport scalar_inequality_suite(std::uint64_t seed, long trials);

/// Per-variable hypotheses and conclusions on the full space: the
/// norm-inequality certificate for each coordinate shift (block form for
/// hardy/bergman, concavity identity for hardy/dirichlet, either for
/// custom), the wandering property of F ominus z_i F, and for bergman the
/// concavity counterexample witnessed by the constant function.
SuiteReport shift_wandering_suite(const CaseSpec& spec);

/// Doubly commuting invariant subspace S: construction invariance, the
/// commutation certificate, the wandering property of
/// W_alpha = intersect_i (S ominus z_i S) with the two construction routes
/// cross-checked, and for |alpha| >= 2 the inductive closure identity
/// [W_alpha] under z_i = W_{alpha minus i}.
SuiteReport doubly_commuting_wandering_suite(const CaseSpec& spec);

/// Converse-direction probe: the wandering and closure identities together
/// with commutation of each restricted shift against the moduli of the
/// others, plus the per-variable Wold split. On the vanishing-ideal recipe
/// the failures are recorded rather than masked.
SuiteReport modulus_commutation_suite(const CaseSpec& spec);

/// One-variable invariant subspace S = [theta]: dimension of S, wandering
/// property of W = S ominus zS, the rank-one identity W = span{z^val theta}
/// (asserted for hardy, recorded otherwise), and the Wold split with empty
/// residual part.
SuiteReport beurling_suite(SpaceKind kind, const std::vector<Complex>& theta, int cap,
                           double tol_residual = 1e-10, double tol_angle = 1e-8);

/// Negative control on the vanishing ideal in hardy F_(8,8): expects the
/// doubly-commuting residual to blow past 0.1 and the inductive closure
/// identity to fail, records the joint closure deficit and the (intact)
/// wandering property.
SuiteReport negative_control_suite(double tol_residual = 1e-10, double tol_angle = 1e-8);

}  // namespace polywander
