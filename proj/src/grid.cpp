#include "polywander/grid.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace polywander {

namespace {

int total_degree(const MultiIndex& k) {
  return std::accumulate(k.begin(), k.end(), 0);
}

bool graded_lex_less(const MultiIndex& a, const MultiIndex& b) {
  const int da = total_degree(a), db = total_degree(b);
  if (da != db) return da < db;
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

}  // namespace

TruncationGrid::TruncationGrid(MultiIndex caps) {
  if (caps.empty()) throw ShapeError("grid caps must be non-empty");
  for (int c : caps) {
    if (c < 0) throw ShapeError("grid caps must be non-negative");
  }
  auto data = std::make_shared<Data>();
  data->caps = std::move(caps);
  const int n = static_cast<int>(data->caps.size());

  data->strides.assign(n, 1);
  Eigen::Index count = 1;
  for (int i = n - 1; i >= 0; --i) {
    data->strides[i] = count;
    count *= data->caps[i] + 1;
  }

  data->order.reserve(count);
  MultiIndex k(n, 0);
  for (Eigen::Index flat = 0; flat < count; ++flat) {
    data->order.push_back(k);
    for (int i = n - 1; i >= 0; --i) {
      if (++k[i] <= data->caps[i]) break;
      k[i] = 0;
    }
  }
  std::sort(data->order.begin(), data->order.end(), graded_lex_less);

  data->flat_to_pos.assign(count, 0);
  for (Eigen::Index pos = 0; pos < count; ++pos) {
    Eigen::Index flat = 0;
    for (int i = 0; i < n; ++i) flat += data->order[pos][i] * data->strides[i];
    data->flat_to_pos[flat] = pos;
  }
  data_ = std::move(data);
}

bool TruncationGrid::contains(const MultiIndex& k) const {
  if (static_cast<int>(k.size()) != dimension()) return false;
  for (int i = 0; i < dimension(); ++i) {
    if (k[i] < 0 || k[i] > data_->caps[i]) return false;
  }
  return true;
}

Eigen::Index TruncationGrid::position(const MultiIndex& k) const {
  if (!contains(k)) {
    throw std::out_of_range("multi-index " + to_string(k) + " is not on the grid");
  }
  Eigen::Index flat = 0;
  for (int i = 0; i < dimension(); ++i) flat += k[i] * data_->strides[i];
  return data_->flat_to_pos[flat];
}

TruncationGrid TruncationGrid::grown(int var) const {
  if (var < 0 || var >= dimension()) throw std::out_of_range("variable index out of range");
  MultiIndex caps = data_->caps;
  ++caps[var];
  return TruncationGrid(std::move(caps));
}

TruncationGrid TruncationGrid::shrunk(int margin) const {
  if (margin < 0) throw ShapeError("margin must be non-negative");
  MultiIndex caps = data_->caps;
  for (int& c : caps) {
    c -= margin;
    if (c < 0) {
      throw ConfigError("margin " + std::to_string(margin) +
                        " empties the grid with caps " + to_string(data_->caps));
    }
  }
  return TruncationGrid(std::move(caps));
}

std::vector<Eigen::Index> interior_positions(const TruncationGrid& grid, int margin) {
  if (margin < 0) throw ShapeError("margin must be non-negative");
  for (int c : grid.caps()) {
    if (c - margin < 0) {
      throw ConfigError("margin " + std::to_string(margin) +
                        " empties the interior of the grid with caps " + to_string(grid.caps()));
    }
  }
  std::vector<Eigen::Index> out;
  const auto& order = grid.indices();
  for (Eigen::Index p = 0; p < grid.size(); ++p) {
    bool inside = true;
    for (int i = 0; i < grid.dimension(); ++i) {
      if (order[p][i] > grid.caps()[i] - margin) {
        inside = false;
        break;
      }
    }
    if (inside) out.push_back(p);
  }
  return out;
}

std::string to_string(const MultiIndex& k) {
  std::ostringstream os;
  os << '(';
  for (size_t i = 0; i < k.size(); ++i) {
    if (i) os << ',';
    os << k[i];
  }
  os << ')';
  return os.str();
}

}  // namespace polywander
