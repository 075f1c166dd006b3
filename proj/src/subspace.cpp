#include "polywander/subspace.hpp"

#include <Eigen/SVD>
#include <algorithm>
#include <cmath>

namespace polywander {

namespace {

using Eigen::MatrixXcd;

void require_same_grid(const Subspace& a, const Subspace& b) {
  if (a.grid() != b.grid()) throw ShapeError("subspaces live on different grids");
}

}  // namespace

Subspace::Subspace(TruncationGrid grid, Eigen::MatrixXcd basis)
    : grid_(std::move(grid)), basis_(std::move(basis)) {
  if (basis_.rows() != grid_.size()) {
    throw ShapeError("subspace basis does not match the grid size");
  }
}

Subspace Subspace::zero(TruncationGrid grid) {
  const Eigen::Index n = grid.size();
  return Subspace(std::move(grid), MatrixXcd::Zero(n, 0));
}

Subspace Subspace::full(TruncationGrid grid) {
  const Eigen::Index n = grid.size();
  return Subspace(std::move(grid), MatrixXcd::Identity(n, n));
}

Subspace Subspace::monomial_span(TruncationGrid grid, const std::vector<MultiIndex>& monomials) {
  MatrixXcd basis = MatrixXcd::Zero(grid.size(), static_cast<Eigen::Index>(monomials.size()));
  for (size_t j = 0; j < monomials.size(); ++j) {
    basis(grid.position(monomials[j]), static_cast<Eigen::Index>(j)) = 1.0;
  }
  return Subspace(std::move(grid), std::move(basis));
}

Subspace from_generators(const TruncationGrid& grid, const MatrixXcd& columns, double rank_tol) {
  if (columns.cols() == 0) return Subspace::zero(grid);
  if (columns.rows() != grid.size()) {
    throw ShapeError("generator columns do not match the grid size");
  }
  Eigen::JacobiSVD<MatrixXcd> svd(columns, Eigen::ComputeThinU);
  const auto& s = svd.singularValues();
  if (s.size() == 0 || s(0) <= 1e-300) return Subspace::zero(grid);
  Eigen::Index rank = 0;
  for (Eigen::Index i = 0; i < s.size(); ++i) {
    if (s(i) > rank_tol * s(0)) ++rank;
  }
  return Subspace(grid, svd.matrixU().leftCols(rank));
}

Subspace complement(const Subspace& s) {
  if (s.dim() == 0) return Subspace::full(s.grid());
  if (s.dim() == s.grid().size()) return Subspace::zero(s.grid());
  Eigen::JacobiSVD<MatrixXcd> svd(s.basis(), Eigen::ComputeFullU);
  return Subspace(s.grid(), svd.matrixU().rightCols(s.grid().size() - s.dim()));
}

Subspace intersect(const Subspace& a, const Subspace& b, double tol) {
  require_same_grid(a, b);
  if (a.dim() == 0 || b.dim() == 0) return Subspace::zero(a.grid());
  const Eigen::Index n = a.grid().size();
  MatrixXcd stacked(2 * n, n);
  stacked.topRows(n) = MatrixXcd::Identity(n, n) - a.projector();
  stacked.bottomRows(n) = MatrixXcd::Identity(n, n) - b.projector();
  Eigen::JacobiSVD<MatrixXcd> svd(stacked, Eigen::ComputeFullV);
  const auto& s = svd.singularValues();
  // Singular values ascend from the tail; common directions sit at ~0.
  Eigen::Index keep = 0;
  for (Eigen::Index i = s.size() - 1; i >= 0; --i) {
    if (s(i) <= tol) ++keep;
    else break;
  }
  if (keep == 0) return Subspace::zero(a.grid());
  return Subspace(a.grid(), svd.matrixV().rightCols(keep));
}

Subspace ominus(const Subspace& s, const Subspace& a, double tol) {
  require_same_grid(s, a);
  return intersect(s, complement(a), tol);
}

std::vector<double> principal_angles(const Subspace& a, const Subspace& b) {
  require_same_grid(a, b);
  const Eigen::Index m = std::min(a.dim(), b.dim());
  if (m == 0) return {};
  Eigen::JacobiSVD<MatrixXcd> svd(a.basis().adjoint() * b.basis(), Eigen::ComputeFullV);
  const auto& c = svd.singularValues();
  std::vector<double> angles;
  angles.reserve(m);
  for (Eigen::Index j = 0; j < m; ++j) {
    const Vec dir = b.basis() * svd.matrixV().col(j);
    const double sine = (dir - a.basis() * (a.basis().adjoint() * dir)).norm();
    angles.push_back(std::atan2(sine, std::min(c(j), 1.0)));
  }
  std::sort(angles.begin(), angles.end(), std::greater<double>());
  return angles;
}

double largest_principal_angle(const Subspace& a, const Subspace& b) {
  const auto angles = principal_angles(a, b);
  return angles.empty() ? 0.0 : angles.front();
}

bool subspace_equal(const Subspace& a, const Subspace& b, double tol) {
  require_same_grid(a, b);
  if (a.dim() != b.dim()) return false;
  return largest_principal_angle(a, b) <= tol;
}

Subspace apply(const OperatorMatrix& op, const Subspace& s, double rank_tol) {
  if (op.domain() != s.grid()) throw ShapeError("subspace does not match the operator domain");
  const MatrixXcd image = op.matrix() * s.basis();
  // The basis is orthonormal, so the operator's own norm is the natural
  // scale of the image. When the operator annihilates the subspace the
  // product is pure floating-point residue, and the relative rank cut in
  // from_generators would promote that residue to a unit basis vector.
  if (image.norm() <= rank_tol * std::max(op.matrix().norm(), 1e-300)) {
    return Subspace::zero(op.codomain());
  }
  return from_generators(op.codomain(), image, rank_tol);
}

Subspace interior_projection(const Subspace& s, int margin) {
  const auto sel = interior_positions(s.grid(), margin);
  MatrixXcd projected = MatrixXcd::Zero(s.grid().size(), s.dim());
  for (Eigen::Index p : sel) projected.row(p) = s.basis().row(p);
  // Absolute cut: the projected columns of an orthonormal basis have norms
  // in [0, 1], and columns supported entirely outside the interior must not
  // survive a relative threshold against the largest one.
  if (projected.cols() == 0) return Subspace::zero(s.grid());
  Eigen::JacobiSVD<MatrixXcd> svd(projected, Eigen::ComputeThinU);
  const auto& sv = svd.singularValues();
  Eigen::Index rank = 0;
  for (Eigen::Index i = 0; i < sv.size(); ++i) {
    if (sv(i) > kAngleTol) ++rank;
  }
  return Subspace(s.grid(), svd.matrixU().leftCols(rank));
}

}  // namespace polywander
