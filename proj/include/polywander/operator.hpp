#pragma once

#include <Eigen/Core>
#include <vector>

#include "polywander/space.hpp"

namespace polywander {

/// Dense linear map between two grids, stored in isometric coordinates, so
/// the matrix adjoint is the adjoint with respect to the weighted inner
/// products.
class OperatorMatrix {
public:
  OperatorMatrix(TruncationGrid domain, TruncationGrid codomain, Eigen::MatrixXcd matrix);

  static OperatorMatrix identity(const TruncationGrid& grid);

  const TruncationGrid& domain() const { return domain_; }
  const TruncationGrid& codomain() const { return codomain_; }
  const Eigen::MatrixXcd& matrix() const { return matrix_; }

  OperatorMatrix adjoint() const;

  /// Composition this . rhs; the grids must line up.
  OperatorMatrix operator*(const OperatorMatrix& rhs) const;

  /// T^p for a square operator, p >= 0.
  OperatorMatrix pow(int p) const;

  /// Apply to an isometric-coordinate vector.
  Vec apply(const Vec& iso) const;

private:
  TruncationGrid domain_;
  TruncationGrid codomain_;
  Eigen::MatrixXcd matrix_;
};

/// Multiplication by z_var into the grown grid. Entry (k + e_var, k) equals
/// sqrt(w(k + e_var) / w(k)); no information is lost.
OperatorMatrix shift_exact(const SpaceModel& model, int var);

/// Multiplication by z_var compressed back onto the same grid: exponents
/// that would exceed the cap are dropped.
OperatorMatrix shift_compressed(const SpaceModel& model, int var);

/// Largest singular value.
double operator_norm(const Eigen::MatrixXcd& m);
double operator_norm(const OperatorMatrix& op);

/// The tuple (C_1, ..., C_n) of compressed coordinate shifts of a model,
/// with the exactness margin used by the interior-compressed checks.
class ShiftTuple {
public:
  static ShiftTuple coordinate_shifts(SpaceModel model, int margin = 1);

  const SpaceModel& model() const { return model_; }
  int count() const { return static_cast<int>(ops_.size()); }
  const OperatorMatrix& op(int var) const;
  int margin() const { return margin_; }

private:
  ShiftTuple(SpaceModel model, std::vector<OperatorMatrix> ops, int margin);

  SpaceModel model_;
  std::vector<OperatorMatrix> ops_;
  int margin_;
};

}  // namespace polywander
