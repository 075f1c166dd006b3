#pragma once

#include <Eigen/Core>
#include <memory>
#include <string>

#include "polywander/types.hpp"

namespace polywander {

/// Finite exponent grid {k : 0 <= k_i <= d_i} with a fixed enumeration in
/// graded lexicographic order: ascending total degree, ties broken
/// lexicographically. Immutable; copies share the enumeration tables.
class TruncationGrid {
public:
  /// Caps d must be non-empty with every entry >= 0.
  explicit TruncationGrid(MultiIndex caps);

  int dimension() const { return static_cast<int>(data_->caps.size()); }
  const MultiIndex& caps() const { return data_->caps; }

  /// Number of grid points, prod_i (d_i + 1).
  Eigen::Index size() const { return static_cast<Eigen::Index>(data_->order.size()); }

  /// All multi-indices in enumeration order.
  const std::vector<MultiIndex>& indices() const { return data_->order; }

  /// Enumeration position of k; throws std::out_of_range when k is not on
  /// the grid (wrong length, negative entry, or entry above its cap).
  Eigen::Index position(const MultiIndex& k) const;

  bool contains(const MultiIndex& k) const;

  /// Grid with cap d_var raised by one (codomain of an exact shift).
  TruncationGrid grown(int var) const;

  /// Grid with every cap lowered by margin; throws ConfigError when any cap
  /// would drop below zero (the interior would be empty).
  TruncationGrid shrunk(int margin) const;

  /// Grids are interchangeable exactly when their caps agree; the
  /// enumeration is a pure function of the caps.
  bool operator==(const TruncationGrid& other) const { return caps() == other.caps(); }
  bool operator!=(const TruncationGrid& other) const { return !(*this == other); }

private:
  struct Data {
    MultiIndex caps;
    std::vector<MultiIndex> order;
    std::vector<Eigen::Index> flat_to_pos;  // mixed-radix flat index -> position
    std::vector<Eigen::Index> strides;
  };
  std::shared_ptr<const Data> data_;
};

/// Positions of the interior sub-grid {k : k_i <= d_i - margin}, in
/// enumeration order. Throws ConfigError when the interior is empty.
std::vector<Eigen::Index> interior_positions(const TruncationGrid& grid, int margin);

std::string to_string(const MultiIndex& k);

}  // namespace polywander
