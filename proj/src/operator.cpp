#include "polywander/operator.hpp"

#include <Eigen/SVD>
#include <cmath>

namespace polywander {

OperatorMatrix::OperatorMatrix(TruncationGrid domain, TruncationGrid codomain,
                               Eigen::MatrixXcd matrix)
    : domain_(std::move(domain)), codomain_(std::move(codomain)), matrix_(std::move(matrix)) {
  if (matrix_.rows() != codomain_.size() || matrix_.cols() != domain_.size()) {
    throw ShapeError("operator matrix shape does not match its grids");
  }
}

OperatorMatrix OperatorMatrix::identity(const TruncationGrid& grid) {
  return OperatorMatrix(grid, grid, Eigen::MatrixXcd::Identity(grid.size(), grid.size()));
}

OperatorMatrix OperatorMatrix::adjoint() const {
  return OperatorMatrix(codomain_, domain_, matrix_.adjoint());
}

OperatorMatrix OperatorMatrix::operator*(const OperatorMatrix& rhs) const {
  if (domain_ != rhs.codomain_) {
    throw ShapeError("operator composition requires matching grids");
  }
  return OperatorMatrix(rhs.domain_, codomain_, matrix_ * rhs.matrix_);
}

OperatorMatrix OperatorMatrix::pow(int p) const {
  if (domain_ != codomain_) throw ShapeError("powers require a square operator");
  if (p < 0) throw ShapeError("negative operator powers are not defined");
  OperatorMatrix acc = identity(domain_);
  for (int i = 0; i < p; ++i) acc = *this * acc;
  return acc;
}

Vec OperatorMatrix::apply(const Vec& iso) const {
  if (iso.size() != domain_.size()) throw ShapeError("vector does not match the operator domain");
  return matrix_ * iso;
}

OperatorMatrix shift_exact(const SpaceModel& model, int var) {
  const TruncationGrid& dom = model.grid();
  if (var < 0 || var >= dom.dimension()) throw std::out_of_range("variable index out of range");
  TruncationGrid cod = dom.grown(var);
  SpaceModel cod_model = model.on_grid(cod);

  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(cod.size(), dom.size());
  const auto& order = dom.indices();
  for (Eigen::Index p = 0; p < dom.size(); ++p) {
    MultiIndex up = order[p];
    ++up[var];
    const Eigen::Index q = cod.position(up);
    m(q, p) = std::sqrt(cod_model.monomial_weight_at(q) / model.monomial_weight_at(p));
  }
  return OperatorMatrix(dom, cod, std::move(m));
}

OperatorMatrix shift_compressed(const SpaceModel& model, int var) {
  const TruncationGrid& grid = model.grid();
  if (var < 0 || var >= grid.dimension()) throw std::out_of_range("variable index out of range");

  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(grid.size(), grid.size());
  const auto& order = grid.indices();
  for (Eigen::Index p = 0; p < grid.size(); ++p) {
    if (order[p][var] == grid.caps()[var]) continue;  // overflow is dropped
    MultiIndex up = order[p];
    ++up[var];
    const Eigen::Index q = grid.position(up);
    m(q, p) = std::sqrt(model.monomial_weight_at(q) / model.monomial_weight_at(p));
  }
  return OperatorMatrix(grid, grid, std::move(m));
}

double operator_norm(const Eigen::MatrixXcd& m) {
  if (m.rows() == 0 || m.cols() == 0) return 0.0;
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(m);
  return svd.singularValues()(0);
}

double operator_norm(const OperatorMatrix& op) { return operator_norm(op.matrix()); }

ShiftTuple::ShiftTuple(SpaceModel model, std::vector<OperatorMatrix> ops, int margin)
    : model_(std::move(model)), ops_(std::move(ops)), margin_(margin) {}

ShiftTuple ShiftTuple::coordinate_shifts(SpaceModel model, int margin) {
  if (margin < 1) throw ConfigError("the exactness margin must be at least 1");
  interior_positions(model.grid(), margin);  // reject an empty interior up front
  std::vector<OperatorMatrix> ops;
  ops.reserve(model.grid().dimension());
  for (int i = 0; i < model.grid().dimension(); ++i) {
    ops.push_back(shift_compressed(model, i));
  }
  return ShiftTuple(std::move(model), std::move(ops), margin);
}

const OperatorMatrix& ShiftTuple::op(int var) const {
  if (var < 0 || var >= count()) throw std::out_of_range("variable index out of range");
  return ops_[var];
}

}  // namespace polywander
