#include "polywander/checks.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

namespace polywander {

namespace {

using Eigen::MatrixXcd;

MatrixXcd compress(const MatrixXcd& m, const std::vector<Eigen::Index>& sel) {
  MatrixXcd out(sel.size(), sel.size());
  for (size_t c = 0; c < sel.size(); ++c) {
    for (size_t r = 0; r < sel.size(); ++r) out(r, c) = m(sel[r], sel[c]);
  }
  return out;
}

void require_square(const OperatorMatrix& T) {
  if (T.domain() != T.codomain()) {
    throw ShapeError("interior checks require an operator on a single grid");
  }
}

std::pair<double, double> eigen_range(const MatrixXcd& hermitian) {
  if (hermitian.rows() == 0) return {0.0, 0.0};
  Eigen::SelfAdjointEigenSolver<MatrixXcd> es((hermitian + hermitian.adjoint()) / 2.0);
  const auto& ev = es.eigenvalues();
  return {ev.minCoeff(), ev.maxCoeff()};
}

}  // namespace

FormReport check_shimorin(const OperatorMatrix& T, int margin, double tol) {
  require_square(T);
  if (margin < 1) throw ConfigError("check_shimorin requires margin >= 1");
  const auto sel = interior_positions(T.domain(), margin);
  const Eigen::Index n = T.domain().size();
  const MatrixXcd& A = T.matrix();
  const MatrixXcd TT = A.adjoint() * A;
  const MatrixXcd I = MatrixXcd::Identity(n, n);

  const Eigen::Index m = static_cast<Eigen::Index>(sel.size());
  MatrixXcd block(2 * m, 2 * m);
  block.topLeftCorner(m, m) = compress(2.0 * I - TT, sel);
  block.topRightCorner(m, m) = compress(-A.adjoint(), sel);
  block.bottomLeftCorner(m, m) = compress(-A, sel);
  block.bottomRightCorner(m, m) = compress(2.0 * TT - I, sel);

  FormReport rep;
  std::tie(rep.min_eigenvalue, rep.max_eigenvalue) = eigen_range(block);
  rep.margin = margin;
  rep.tolerance = tol;
  rep.interior_dim = m;
  rep.psd = rep.min_eigenvalue >= -tol;
  return rep;
}

FormReport check_concave(const OperatorMatrix& T, int margin, double tol) {
  require_square(T);
  if (margin < 2) throw ConfigError("check_concave requires margin >= 2");
  const auto sel = interior_positions(T.domain(), margin);
  const Eigen::Index n = T.domain().size();
  const MatrixXcd& A = T.matrix();
  const MatrixXcd A2 = A * A;
  const MatrixXcd form =
      2.0 * (A.adjoint() * A) - A2.adjoint() * A2 - MatrixXcd::Identity(n, n);

  FormReport rep;
  std::tie(rep.min_eigenvalue, rep.max_eigenvalue) = eigen_range(compress(form, sel));
  rep.margin = margin;
  rep.tolerance = tol;
  rep.interior_dim = static_cast<Eigen::Index>(sel.size());
  rep.psd = rep.min_eigenvalue >= -tol;
  return rep;
}

CommutationReport check_doubly_commuting(const ShiftTuple& tuple, double tol) {
  if (tuple.count() < 2) {
    throw std::invalid_argument("double commutativity needs at least two variables");
  }
  const auto sel = interior_positions(tuple.model().grid(), tuple.margin());
  CommutationReport rep;
  rep.tolerance = tol;
  for (int i = 0; i < tuple.count(); ++i) {
    for (int j = i + 1; j < tuple.count(); ++j) {
      const MatrixXcd& Ti = tuple.op(i).matrix();
      const MatrixXcd& Tj = tuple.op(j).matrix();
      const MatrixXcd d = Ti * Tj.adjoint() - Tj.adjoint() * Ti;
      const double r = operator_norm(compress(d, sel));
      rep.pairs.push_back({i, j, r});
      rep.max_residual = std::max(rep.max_residual, r);
    }
  }
  rep.pass = rep.max_residual <= tol;
  return rep;
}

double commutes_with_modulus(const OperatorMatrix& Ti, const OperatorMatrix& Tj, int margin) {
  require_square(Ti);
  require_square(Tj);
  if (Ti.domain() != Tj.domain()) throw ShapeError("operators must share a grid");
  const auto sel = interior_positions(Ti.domain(), margin);
  const MatrixXcd mod = Tj.matrix().adjoint() * Tj.matrix();
  const MatrixXcd d = Ti.matrix() * mod - mod * Ti.matrix();
  return operator_norm(compress(d, sel));
}

AnalyticityReport analyticity_proxy(const OperatorMatrix& T, int max_power) {
  require_square(T);
  if (max_power < 1) throw std::invalid_argument("max_power must be at least 1");
  AnalyticityReport rep;
  MatrixXcd acc = T.matrix();
  for (int p = 1; p <= max_power; ++p) {
    if (p > 1) acc = T.matrix() * acc;
    Eigen::JacobiSVD<MatrixXcd> svd(acc);
    const auto& s = svd.singularValues();
    const double cut = s.size() ? s(0) * acc.rows() * 1e-15 : 0.0;
    Eigen::Index rank = 0;
    for (Eigen::Index t = 0; t < s.size(); ++t) {
      if (s(t) > cut && s(t) > 1e-300) ++rank;
    }
    rep.ranks.push_back(rank);
    if (rank == 0 && rep.first_zero_power < 0) rep.first_zero_power = p;
  }
  return rep;
}

}  // namespace polywander
