#include "polywander/wandering.hpp"

#include <Eigen/SVD>
#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

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

void require_tuple_grid(const Subspace& s, const ShiftTuple& tuple) {
  if (s.grid() != tuple.model().grid()) {
    throw ShapeError("subspace grid does not match the tuple grid");
  }
}

}  // namespace

std::vector<int> validate_alpha(const std::vector<int>& alpha, int n) {
  if (alpha.empty()) throw ConfigError("alpha must select at least one variable");
  std::vector<int> out = alpha;
  std::sort(out.begin(), out.end());
  for (size_t i = 0; i < out.size(); ++i) {
    if (out[i] < 0 || out[i] >= n) {
      throw ConfigError("alpha selects variable " + std::to_string(out[i]) +
                        " outside the tuple of " + std::to_string(n));
    }
    if (i > 0 && out[i] == out[i - 1]) {
      throw ConfigError("alpha entries must be distinct");
    }
  }
  return out;
}

ShiftRestriction::ShiftRestriction(Subspace domain, const ShiftTuple& tuple)
    : domain_(std::move(domain)), margin_(tuple.margin()) {
  require_tuple_grid(domain_, tuple);
  const MatrixXcd& b = domain_.basis();
  ops_.reserve(tuple.count());
  defects_.reserve(tuple.count());
  for (int i = 0; i < tuple.count(); ++i) {
    MatrixXcd cb = tuple.op(i).matrix() * b;
    MatrixXcd r = b.adjoint() * cb;
    defects_.push_back(operator_norm(MatrixXcd(cb - b * r)));
    ops_.push_back(std::move(r));
  }
  const TruncationGrid& g = domain_.grid();
  const auto sel = interior_positions(g, margin_);
  std::vector<MultiIndex> monomials;
  monomials.reserve(sel.size());
  for (Eigen::Index p : sel) monomials.push_back(g.indices()[p]);
  Subspace inside = intersect(domain_, Subspace::monomial_span(g, monomials));
  interior_injection_ = b.adjoint() * inside.basis();
}

const MatrixXcd& ShiftRestriction::op(int var) const {
  if (var < 0 || var >= count()) throw std::out_of_range("restriction variable index");
  return ops_[static_cast<size_t>(var)];
}

double ShiftRestriction::invariance_defect(int var) const {
  if (var < 0 || var >= count()) throw std::out_of_range("restriction variable index");
  return defects_[static_cast<size_t>(var)];
}

CommutationReport check_doubly_commuting(const ShiftRestriction& r, double tol) {
  if (r.count() < 2) {
    throw std::invalid_argument("doubly-commuting check needs at least two variables");
  }
  CommutationReport rep;
  rep.tolerance = tol;
  const MatrixXcd& w = r.interior_injection();
  for (int i = 0; i < r.count(); ++i) {
    for (int j = i + 1; j < r.count(); ++j) {
      const MatrixXcd& ri = r.op(i);
      const MatrixXcd& rj = r.op(j);
      MatrixXcd d = ri * rj.adjoint() - rj.adjoint() * ri;
      double res = operator_norm(MatrixXcd(w.adjoint() * d * w));
      rep.pairs.push_back({i, j, res});
      rep.max_residual = std::max(rep.max_residual, res);
    }
  }
  rep.pass = rep.max_residual <= tol;
  return rep;
}

double commutes_with_modulus(const ShiftRestriction& r, int i, int j) {
  const MatrixXcd& ri = r.op(i);
  const MatrixXcd& rj = r.op(j);
  const MatrixXcd& w = r.interior_injection();
  MatrixXcd mod = rj.adjoint() * rj;
  MatrixXcd d = ri * mod - mod * ri;
  return operator_norm(MatrixXcd(w.adjoint() * d * w));
}

Subspace invariant_closure(const Subspace& seed, const std::vector<int>& alpha_in,
                           const ShiftTuple& tuple) {
  require_tuple_grid(seed, tuple);
  const std::vector<int> alpha = validate_alpha(alpha_in, tuple.count());
  const Eigen::Index n = seed.grid().size();
  Subspace span = from_generators(seed.grid(), seed.basis());
  // Adding the shift images cannot shrink the span, so an unchanged
  // dimension means the span is already invariant.
  while (true) {
    const Eigen::Index k = span.dim();
    MatrixXcd cols(n, k * static_cast<Eigen::Index>(1 + alpha.size()));
    cols.leftCols(k) = span.basis();
    for (size_t a = 0; a < alpha.size(); ++a) {
      cols.middleCols(k * static_cast<Eigen::Index>(a + 1), k) =
          tuple.op(alpha[a]).matrix() * span.basis();
    }
    Subspace next = from_generators(seed.grid(), cols);
    if (next.dim() == k) return next;
    span = std::move(next);
  }
}

WanderingSubspace wandering_subspace(const Subspace& s, const ShiftTuple& tuple,
                                     const std::vector<int>& alpha_in) {
  require_tuple_grid(s, tuple);
  const std::vector<int> alpha = validate_alpha(alpha_in, tuple.count());

  Subspace route1 = ominus(s, apply(tuple.op(alpha[0]), s));
  for (size_t a = 1; a < alpha.size(); ++a) {
    route1 = intersect(route1, ominus(s, apply(tuple.op(alpha[a]), s)));
  }

  Subspace route2 = Subspace::zero(s.grid());
  const Eigen::Index k = s.dim();
  if (k > 0) {
    const MatrixXcd& b = s.basis();
    MatrixXcd stacked(static_cast<Eigen::Index>(alpha.size()) * k, k);
    for (size_t a = 0; a < alpha.size(); ++a) {
      MatrixXcd r = b.adjoint() * (tuple.op(alpha[a]).matrix() * b);
      stacked.middleRows(static_cast<Eigen::Index>(a) * k, k) = r.adjoint();
    }
    Eigen::JacobiSVD<MatrixXcd> svd(stacked, Eigen::ComputeFullV);
    const auto& sv = svd.singularValues();
    Eigen::Index rank = 0;
    for (Eigen::Index i = 0; i < sv.size(); ++i) {
      if (sv(i) > kAngleTol) ++rank;
    }
    if (rank < k) route2 = Subspace(s.grid(), b * svd.matrixV().rightCols(k - rank));
  }

  double agreement = route1.dim() == route2.dim()
                         ? largest_principal_angle(route1, route2)
                         : std::acos(0.0);
  return {std::move(route1), agreement};
}

WanderingReport check_wandering(const Subspace& s, const ShiftTuple& tuple,
                                const std::vector<int>& alpha_in, const Subspace& w, int depth,
                                double tol_residual, double tol_angle) {
  require_tuple_grid(s, tuple);
  require_tuple_grid(w, tuple);
  const std::vector<int> alpha = validate_alpha(alpha_in, tuple.count());
  const TruncationGrid& grid = s.grid();
  if (depth < 1) throw ConfigError("orthogonality depth must be at least 1");
  int max_depth = grid.caps()[alpha[0]];
  for (int i : alpha) max_depth = std::min(max_depth, grid.caps()[i]);
  if (depth > max_depth) {
    throw ConfigError("orthogonality depth " + std::to_string(depth) +
                      " exceeds the smallest cap " + std::to_string(max_depth) +
                      " over the selected variables");
  }

  WanderingReport rep;
  rep.depth = depth;
  rep.containment_sine =
      w.dim() == 0 ? 0.0
                   : operator_norm(MatrixXcd(w.basis() - s.basis() * (s.basis().adjoint() * w.basis())));

  // Orthogonality of W against T^l W, evaluated on W_l = W cap F_{d-l} so
  // that every matrix power is truncation-exact on its argument.
  std::vector<int> l(alpha.size(), 0);
  while (true) {
    // Odometer over exponents supported on alpha with |l| <= depth.
    size_t p = 0;
    while (p < l.size()) {
      ++l[p];
      int total = 0;
      for (int li : l) total += li;
      if (total <= depth) break;
      l[p] = 0;
      ++p;
    }
    if (p == l.size()) break;

    std::vector<Eigen::Index> outside;
    const auto& indices = grid.indices();
    for (Eigen::Index t = 0; t < grid.size(); ++t) {
      for (size_t a = 0; a < alpha.size(); ++a) {
        if (indices[t][alpha[a]] + l[a] > grid.caps()[alpha[a]]) {
          outside.push_back(t);
          break;
        }
      }
    }
    MatrixXcd exact = w.basis();
    if (!outside.empty() && w.dim() > 0) {
      MatrixXcd rows(static_cast<Eigen::Index>(outside.size()), w.dim());
      for (size_t r = 0; r < outside.size(); ++r) rows.row(r) = w.basis().row(outside[r]);
      Eigen::JacobiSVD<MatrixXcd> svd(rows, Eigen::ComputeFullV);
      const auto& sv = svd.singularValues();
      Eigen::Index rank = 0;
      for (Eigen::Index i = 0; i < sv.size(); ++i) {
        if (sv(i) > kRankTol) ++rank;
      }
      exact = w.basis() * svd.matrixV().rightCols(w.dim() - rank);
    }
    if (exact.cols() == 0) continue;
    MatrixXcd image = exact;
    for (size_t a = 0; a < alpha.size(); ++a) {
      for (int step = 0; step < l[a]; ++step) image = tuple.op(alpha[a]).matrix() * image;
    }
    rep.orthogonality_residual =
        std::max(rep.orthogonality_residual, operator_norm(MatrixXcd(w.basis().adjoint() * image)));
  }
  rep.orthogonality_pass = rep.orthogonality_residual <= tol_residual;

  Subspace closure = invariant_closure(w, alpha, tuple);
  Subspace closure_int = interior_projection(closure, tuple.margin());
  Subspace s_int = interior_projection(s, tuple.margin());
  rep.closure_interior_dim = closure_int.dim();
  rep.s_interior_dim = s_int.dim();
  if (rep.closure_interior_dim == rep.s_interior_dim) {
    rep.closure_angle = largest_principal_angle(closure_int, s_int);
    rep.closure_pass = rep.closure_angle <= tol_angle;
  } else {
    rep.closure_angle = std::acos(0.0);
    rep.closure_pass = false;
  }

  rep.pass = rep.containment_sine <= tol_angle && rep.orthogonality_pass && rep.closure_pass;
  return rep;
}

int default_depth(const ShiftTuple& tuple, int generator_degree) {
  const MultiIndex& caps = tuple.model().grid().caps();
  int min_cap = *std::min_element(caps.begin(), caps.end());
  return std::max(1, min_cap - generator_degree - 1);
}

WoldReport wold(const Subspace& s, const ShiftTuple& tuple, int var) {
  require_tuple_grid(s, tuple);
  if (var < 0 || var >= tuple.count()) throw std::out_of_range("wold variable index");
  const OperatorMatrix& c = tuple.op(var);

  Subspace unilateral = invariant_closure(ominus(s, apply(c, s)), {var}, tuple);

  // The compressed shift raises the exponent of z_var by one, so its powers
  // past the cap vanish and the intersection stabilizes within cap+1 steps.
  Subspace residual = s;
  Subspace image = s;
  const int cap = s.grid().caps()[var];
  for (int m = 1; m <= cap + 1 && residual.dim() > 0; ++m) {
    image = apply(c, image);
    residual = intersect(residual, image);
  }

  double split = 0.0;
  if (unilateral.dim() > 0 && residual.dim() > 0) {
    split = operator_norm(MatrixXcd(unilateral.basis().adjoint() * residual.basis()));
  }
  const int margin = tuple.margin();
  const Eigen::Index s_int = interior_projection(s, margin).dim();
  const Eigen::Index sum_int =
      interior_projection(unilateral, margin).dim() + interior_projection(residual, margin).dim();
  const bool nilpotent = residual.dim() == 0;
  return WoldReport{std::move(unilateral), std::move(residual), split,
                    s_int,                 sum_int,             s_int == sum_int,
                    nilpotent};
}

ReducingReport reducing_check(const Subspace& w, const ShiftTuple& tuple, int j) {
  require_tuple_grid(w, tuple);
  if (j < 0 || j >= tuple.count()) throw std::out_of_range("reducing-check variable index");
  const Eigen::Index n = w.grid().size();
  const MatrixXcd p = w.projector();
  const MatrixXcd q = MatrixXcd::Identity(n, n) - p;
  const MatrixXcd& c = tuple.op(j).matrix();
  const auto sel = interior_positions(w.grid(), tuple.margin());
  ReducingReport rep;
  rep.invariance = operator_norm(compress(q * c * p, sel));
  rep.coinvariance = operator_norm(compress(q * c.adjoint() * p, sel));
  return rep;
}

}  // namespace polywander
