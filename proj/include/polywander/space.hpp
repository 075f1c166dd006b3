#pragma once

#include <Eigen/Core>
#include <string>
#include <vector>

#include "polywander/grid.hpp"
#include "polywander/types.hpp"

namespace polywander {

using Vec = Eigen::VectorXcd;

/// Weight family for the coefficient norm. Each space assigns the monomial
/// z^k the weight w(k) = prod_i omega_i(k_i):
///   hardy      omega(m) = 1
///   bergman    omega(m) = 1/(m+1)
///   dirichlet  omega(m) = m+1
///   custom     caller-supplied positive per-variable sequences
enum class SpaceKind { hardy, bergman, dirichlet, custom };

std::string to_string(SpaceKind kind);
SpaceKind space_kind_from_string(const std::string& name);  // throws ConfigError

/// Truncated weighted coefficient space over a grid. Vectors are indexed by
/// the grid enumeration. Two coordinate systems are used:
///   coefficient coords  entry = Taylor coefficient of z^k
///   isometric coords    entry scaled by sqrt(w(k)), so the weighted inner
///                       product becomes the Euclidean one
/// Operator matrices elsewhere in the library act on isometric coords.
class SpaceModel {
public:
  static SpaceModel hardy(TruncationGrid grid);
  static SpaceModel bergman(TruncationGrid grid);
  static SpaceModel dirichlet(TruncationGrid grid);

  /// omega[i][m] for m = 0..caps[i]; every entry must be positive.
  static SpaceModel custom(TruncationGrid grid, std::vector<std::vector<double>> omega);

  SpaceKind kind() const { return kind_; }
  const TruncationGrid& grid() const { return grid_; }

  /// omega_var(m). For the closed-form kinds any m >= 0 is valid; for custom
  /// weights m must be within the stored table.
  double variable_weight(int var, int m) const;

  /// w(k) = prod_i omega_i(k_i); throws std::out_of_range off the grid.
  double monomial_weight(const MultiIndex& k) const;
  double monomial_weight_at(Eigen::Index pos) const { return weights_[pos]; }

  /// <f, g> = sum_k w(k) f_k conj(g_k) on coefficient-coordinate vectors.
  Complex inner_product(const Vec& f, const Vec& g) const;
  double norm(const Vec& f) const;

  Vec to_isometric(const Vec& coeff) const;
  Vec from_isometric(const Vec& iso) const;

  const Eigen::VectorXd& sqrt_weights() const { return sqrt_weights_; }

  /// Same weight family on a different grid. Custom weights must cover the
  /// new caps (ConfigError otherwise).
  SpaceModel on_grid(TruncationGrid grid) const;

  /// One-variable model for a single factor, on the grid with cap
  /// caps[var]. Used to assemble tensor-product constructions.
  SpaceModel one_variable_factor(int var) const;

private:
  SpaceModel(SpaceKind kind, TruncationGrid grid, std::vector<std::vector<double>> omega);

  SpaceKind kind_;
  TruncationGrid grid_;
  std::vector<std::vector<double>> omega_;  // per variable, m = 0..caps[i]
  Eigen::VectorXd weights_;                 // w(k) in enumeration order
  Eigen::VectorXd sqrt_weights_;
};

}  // namespace polywander
