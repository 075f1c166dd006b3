#pragma once

#include <vector>

#include "polywander/checks.hpp"
#include "polywander/subspace.hpp"

namespace polywander {

/// Compression R_i = P_S C_i |_S of each tuple operator to a subspace,
/// expressed in the subspace basis. The compressed shifts map an invariant
/// subspace into itself only up to truncation overflow at the caps, so the
/// per-variable invariance defect ||(I - P_S) C_i P_S|| is recorded rather
/// than assumed zero.
class ShiftRestriction {
public:
  ShiftRestriction(Subspace domain, const ShiftTuple& tuple);

  const Subspace& domain() const { return domain_; }
  int count() const { return static_cast<int>(ops_.size()); }
  const Eigen::MatrixXcd& op(int var) const;
  double invariance_defect(int var) const;
  int margin() const { return margin_; }

  /// Subspace-coordinate injection of S cap interior into S; compressing a
  /// subspace-coordinate operator with it restricts it to the part of S
  /// where the compressed shifts act exactly.
  const Eigen::MatrixXcd& interior_injection() const { return interior_injection_; }

private:
  Subspace domain_;
  std::vector<Eigen::MatrixXcd> ops_;
  std::vector<double> defects_;
  Eigen::MatrixXcd interior_injection_;
  int margin_;
};

CommutationReport check_doubly_commuting(const ShiftRestriction& r, double tol = 1e-10);
double commutes_with_modulus(const ShiftRestriction& r, int i, int j);

/// Smallest subspace containing the seed and invariant under the compressed
/// shifts C_i, i in alpha (zero-based). Applies the shifts to the current
/// span until the dimension stabilizes.
Subspace invariant_closure(const Subspace& seed, const std::vector<int>& alpha,
                           const ShiftTuple& tuple);

struct WanderingSubspace {
  Subspace space;
  /// Largest principal angle between the two construction routes:
  /// intersect_i (S ominus C_i S) versus S cap intersect_i ker(R_i*). The
  /// routes agree exactly in exact arithmetic; the angle measures numerical
  /// drift. Set to pi/2 when the routes disagree about the dimension.
  double route_agreement_angle;
};

/// W_alpha = intersect over i in alpha of (S ominus C_i S), cross-checked
/// against the kernel route.
WanderingSubspace wandering_subspace(const Subspace& s, const ShiftTuple& tuple,
                                     const std::vector<int>& alpha);

struct WanderingReport {
  double containment_sine = 0.0;      // ||(I - P_S) B_W||
  double orthogonality_residual = 0.0;
  int depth = 0;
  double closure_angle = 0.0;
  Eigen::Index closure_interior_dim = 0;
  Eigen::Index s_interior_dim = 0;
  bool orthogonality_pass = false;
  bool closure_pass = false;
  bool pass = false;
};

/// Wandering property of W for the tuple restricted to S:
///  (a) W is orthogonal to T^l W for every multi-exponent l supported on
///      alpha with 0 < |l| <= depth. Each power is evaluated only on the
///      part of W where it is truncation-exact (W cap the sub-grid with
///      caps d - l), so the residual measures genuine non-orthogonality.
///  (b) The invariant closure of W under the alpha shifts reproduces S
///      after both sides are projected onto the interior.
/// An explicit depth above min_i d_i cannot keep any vector exact and is
/// rejected as a configuration error.
WanderingReport check_wandering(const Subspace& s, const ShiftTuple& tuple,
                                const std::vector<int>& alpha, const Subspace& w, int depth,
                                double tol_residual = 1e-10, double tol_angle = kAngleTol);

/// Depth that keeps every shift application of degree-bounded data exact:
/// min_i d_i - generator_degree - 1, clamped to at least 1.
int default_depth(const ShiftTuple& tuple, int generator_degree);

struct WoldReport {
  Subspace unilateral;  // closure of S ominus C_var S under C_var
  Subspace residual;    // intersection of the ranges C_var^m S
  double split_orthogonality = 0.0;
  Eigen::Index s_interior_dim = 0;
  Eigen::Index sum_interior_dim = 0;
  bool dims_match = false;
  /// Compressed shifts are nilpotent, so the residual part is {0} by
  /// construction at any truncation; an empty residual is a truncation
  /// artifact, not evidence about the untruncated operator.
  bool nilpotent_truncation = false;
};

WoldReport wold(const Subspace& s, const ShiftTuple& tuple, int var);

struct ReducingReport {
  double invariance = 0.0;    // ||(I - P_W) T_j P_W|| on the interior
  double coinvariance = 0.0;  // ||(I - P_W) T_j* P_W|| on the interior
};

ReducingReport reducing_check(const Subspace& w, const ShiftTuple& tuple, int j);

/// Validated copy of alpha: non-empty, entries unique and within [0, n).
std::vector<int> validate_alpha(const std::vector<int>& alpha, int n);

}  // namespace polywander
