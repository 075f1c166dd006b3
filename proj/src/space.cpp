#include "polywander/space.hpp"

#include <cmath>

namespace polywander {

namespace {

std::vector<std::vector<double>> closed_form_omega(SpaceKind kind, const TruncationGrid& grid) {
  std::vector<std::vector<double>> omega(grid.dimension());
  for (int i = 0; i < grid.dimension(); ++i) {
    omega[i].resize(grid.caps()[i] + 1);
    for (int m = 0; m <= grid.caps()[i]; ++m) {
      switch (kind) {
        case SpaceKind::hardy: omega[i][m] = 1.0; break;
        case SpaceKind::bergman: omega[i][m] = 1.0 / (m + 1); break;
        case SpaceKind::dirichlet: omega[i][m] = m + 1.0; break;
        case SpaceKind::custom: break;  // unreachable
      }
    }
  }
  return omega;
}

}  // namespace

std::string to_string(SpaceKind kind) {
  switch (kind) {
    case SpaceKind::hardy: return "hardy";
    case SpaceKind::bergman: return "bergman";
    case SpaceKind::dirichlet: return "dirichlet";
    case SpaceKind::custom: return "custom";
  }
  return "unknown";
}

SpaceKind space_kind_from_string(const std::string& name) {
  if (name == "hardy") return SpaceKind::hardy;
  if (name == "bergman") return SpaceKind::bergman;
  if (name == "dirichlet") return SpaceKind::dirichlet;
  if (name == "custom") return SpaceKind::custom;
  throw ConfigError("unknown space kind '" + name + "'");
}

SpaceModel::SpaceModel(SpaceKind kind, TruncationGrid grid, std::vector<std::vector<double>> omega)
    : kind_(kind), grid_(std::move(grid)), omega_(std::move(omega)) {
  if (static_cast<int>(omega_.size()) != grid_.dimension()) {
    throw ShapeError("one weight sequence per variable is required");
  }
  for (int i = 0; i < grid_.dimension(); ++i) {
    if (static_cast<int>(omega_[i].size()) < grid_.caps()[i] + 1) {
      throw ConfigError("weight sequence for variable " + std::to_string(i + 1) +
                        " is shorter than its cap requires");
    }
    for (double w : omega_[i]) {
      if (!(w > 0.0) || !std::isfinite(w)) {
        throw ConfigError("weights must be positive and finite");
      }
    }
  }
  weights_.resize(grid_.size());
  sqrt_weights_.resize(grid_.size());
  const auto& order = grid_.indices();
  for (Eigen::Index p = 0; p < grid_.size(); ++p) {
    double w = 1.0;
    for (int i = 0; i < grid_.dimension(); ++i) w *= omega_[i][order[p][i]];
    weights_[p] = w;
    sqrt_weights_[p] = std::sqrt(w);
  }
}

SpaceModel SpaceModel::hardy(TruncationGrid grid) {
  auto omega = closed_form_omega(SpaceKind::hardy, grid);
  return SpaceModel(SpaceKind::hardy, std::move(grid), std::move(omega));
}

SpaceModel SpaceModel::bergman(TruncationGrid grid) {
  auto omega = closed_form_omega(SpaceKind::bergman, grid);
  return SpaceModel(SpaceKind::bergman, std::move(grid), std::move(omega));
}

SpaceModel SpaceModel::dirichlet(TruncationGrid grid) {
  auto omega = closed_form_omega(SpaceKind::dirichlet, grid);
  return SpaceModel(SpaceKind::dirichlet, std::move(grid), std::move(omega));
}

SpaceModel SpaceModel::custom(TruncationGrid grid, std::vector<std::vector<double>> omega) {
  return SpaceModel(SpaceKind::custom, std::move(grid), std::move(omega));
}

double SpaceModel::variable_weight(int var, int m) const {
  if (var < 0 || var >= grid_.dimension()) throw std::out_of_range("variable index out of range");
  if (m < 0) throw std::out_of_range("weight index must be non-negative");
  switch (kind_) {
    case SpaceKind::hardy: return 1.0;
    case SpaceKind::bergman: return 1.0 / (m + 1);
    case SpaceKind::dirichlet: return m + 1.0;
    case SpaceKind::custom: break;
  }
  if (m >= static_cast<int>(omega_[var].size())) {
    throw ConfigError("custom weight sequence does not reach index " + std::to_string(m));
  }
  return omega_[var][m];
}

double SpaceModel::monomial_weight(const MultiIndex& k) const {
  return weights_[grid_.position(k)];
}

Complex SpaceModel::inner_product(const Vec& f, const Vec& g) const {
  if (f.size() != grid_.size() || g.size() != grid_.size()) {
    throw ShapeError("inner product operands must match the grid size");
  }
  Complex acc = 0.0;
  for (Eigen::Index p = 0; p < grid_.size(); ++p) {
    acc += weights_[p] * f[p] * std::conj(g[p]);
  }
  return acc;
}

double SpaceModel::norm(const Vec& f) const {
  return std::sqrt(std::abs(inner_product(f, f)));
}

Vec SpaceModel::to_isometric(const Vec& coeff) const {
  if (coeff.size() != grid_.size()) throw ShapeError("vector does not match the grid size");
  return sqrt_weights_.cast<Complex>().cwiseProduct(coeff);
}

Vec SpaceModel::from_isometric(const Vec& iso) const {
  if (iso.size() != grid_.size()) throw ShapeError("vector does not match the grid size");
  return iso.cwiseQuotient(sqrt_weights_.cast<Complex>());
}

SpaceModel SpaceModel::on_grid(TruncationGrid grid) const {
  if (grid.dimension() != grid_.dimension()) {
    throw ShapeError("grid dimension change is not supported");
  }
  if (kind_ != SpaceKind::custom) {
    auto omega = closed_form_omega(kind_, grid);
    return SpaceModel(kind_, std::move(grid), std::move(omega));
  }
  for (int i = 0; i < grid.dimension(); ++i) {
    if (static_cast<int>(omega_[i].size()) < grid.caps()[i] + 1) {
      throw ConfigError("custom weights do not cover the requested grid");
    }
  }
  return SpaceModel(SpaceKind::custom, std::move(grid), omega_);
}

SpaceModel SpaceModel::one_variable_factor(int var) const {
  if (var < 0 || var >= grid_.dimension()) throw std::out_of_range("variable index out of range");
  TruncationGrid g({grid_.caps()[var]});
  if (kind_ != SpaceKind::custom) {
    auto omega = closed_form_omega(kind_, g);
    return SpaceModel(kind_, std::move(g), std::move(omega));
  }
  return SpaceModel(SpaceKind::custom, std::move(g), {omega_[var]});
}

}  // namespace polywander
