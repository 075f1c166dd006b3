#pragma once

#include <Eigen/Core>
#include <vector>

#include "polywander/operator.hpp"

namespace polywander {

/// Singular values below kRankTol * largest are treated as zero when
/// orthonormalizing spans.
inline constexpr double kRankTol = 1e-10;

/// Default geometric tolerance: sines of principal angles below kAngleTol
/// count as zero when intersecting, and subspace equality means the largest
/// principal angle stays below it.
inline constexpr double kAngleTol = 1e-8;

/// Closed subspace of a truncated space, stored as an orthonormal basis in
/// isometric coordinates (columns of an N x dim matrix). The zero subspace
/// has a basis with no columns.
class Subspace {
public:
  Subspace(TruncationGrid grid, Eigen::MatrixXcd orthonormal_basis);

  static Subspace zero(TruncationGrid grid);
  static Subspace full(TruncationGrid grid);
  static Subspace monomial_span(TruncationGrid grid, const std::vector<MultiIndex>& monomials);

  const TruncationGrid& grid() const { return grid_; }
  Eigen::Index dim() const { return basis_.cols(); }
  const Eigen::MatrixXcd& basis() const { return basis_; }

  /// Orthogonal projector B B*.
  Eigen::MatrixXcd projector() const { return basis_ * basis_.adjoint(); }

private:
  TruncationGrid grid_;
  Eigen::MatrixXcd basis_;
};

/// Orthonormal basis of the span of the given columns (isometric coords).
/// All-zero input yields the zero subspace; rank decisions use rank_tol
/// relative to the largest singular value.
Subspace from_generators(const TruncationGrid& grid, const Eigen::MatrixXcd& columns,
                         double rank_tol = kRankTol);

/// Orthogonal complement within the ambient grid.
Subspace complement(const Subspace& s);

/// A cap B, computed from the nullspace of the stacked projector deficits
/// [I - AA*; I - BB*]. A direction at angles (a, b) from the two spaces has
/// stacked singular value sqrt(sin^2 a + sin^2 b), so tol resolves small
/// angles at full precision.
Subspace intersect(const Subspace& a, const Subspace& b, double tol = kAngleTol);

/// S cap A-perp. The intended use has A inside S, but the strict
/// intersection semantics is kept for general arguments.
Subspace ominus(const Subspace& s, const Subspace& a, double tol = kAngleTol);

/// Principal angles between equal-grid subspaces, non-increasing,
/// min(dim a, dim b) entries. Cosines come from the singular values of
/// A*B; each angle is then refined through its sine so that values near 0
/// keep full precision (atan2 of the projected residual against the cosine).
std::vector<double> principal_angles(const Subspace& a, const Subspace& b);

/// Largest principal angle; 0 when both are zero-dimensional.
double largest_principal_angle(const Subspace& a, const Subspace& b);

/// Equal dimension and largest principal angle at most tol.
bool subspace_equal(const Subspace& a, const Subspace& b, double tol = kAngleTol);

/// Span of the image of the basis under the operator.
Subspace apply(const OperatorMatrix& op, const Subspace& s, double rank_tol = kRankTol);

/// Orthogonal projection onto the interior sub-grid (coefficients at
/// exponents above caps - margin are zeroed), re-orthonormalized on the
/// same ambient grid.
Subspace interior_projection(const Subspace& s, int margin);

}  // namespace polywander
