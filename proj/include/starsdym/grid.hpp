#pragma once

// Uniform spacetime grids, fields sampled on them, and residual summaries.

#include <cstddef>
#include <vector>

#include "starsdym/fourier_field.hpp"

namespace starsdym {

struct UniformAxis {
  double start = 0.0;
  double step = 1.0;
  int count = 1;

  double at(int i) const { return start + step * i; }
  double stop() const { return at(count - 1); }

  /// Points lo, lo + h, ..., hi. (hi - lo)/h must be an integer to 1e-9; lo == hi gives one point.
  static UniformAxis from_range(double lo, double hi, double h);
};

/// Tensor-product grid. Points are stored with the last axis varying fastest.
class SpacetimeGrid {
 public:
  SpacetimeGrid() = default;
  explicit SpacetimeGrid(std::vector<UniformAxis> axes);

  std::size_t dimension() const { return axes_.size(); }
  const UniformAxis& axis(std::size_t d) const { return axes_[d]; }
  const std::vector<UniformAxis>& axes() const { return axes_; }
  std::size_t size() const { return size_; }

  std::size_t flat_index(const std::vector<int>& idx) const;
  std::vector<int> multi_index(std::size_t flat) const;
  std::vector<double> coordinates(std::size_t flat) const;
  /// Flat offset of a unit step along axis d.
  std::size_t stride(std::size_t d) const { return strides_[d]; }

  /// True when every axis index is at least `margin` away from both ends.
  bool is_interior(const std::vector<int>& idx, int margin = 1) const;

  /// The grid with `margin` points removed from both ends of every axis.
  SpacetimeGrid interior(int margin = 1) const;

  /// Largest step over the axes.
  double max_step() const;

 private:
  std::vector<UniformAxis> axes_;
  std::vector<std::size_t> strides_;
  std::size_t size_ = 0;
};

/// A torus-valued field over a spacetime grid at a fixed deformation parameter.
struct GriddedFourierField {
  SpacetimeGrid grid;
  std::vector<FourierField> values;
  double hbar = 0.0;

  const FourierField& at(std::size_t flat) const { return values[flat]; }
};

struct ResidualSummary {
  double sup_norm = 0.0;
  double l2_norm = 0.0;  // root mean square over the points
  double h = 0.0;
};

/// Pointwise residual magnitudes on the interior points of a grid.
struct ResidualField {
  SpacetimeGrid grid;
  std::vector<double> values;

  ResidualSummary summary() const;
};

struct OrderEstimate {
  double coarse_sup = 0.0;
  double fine_sup = 0.0;
  double order = 0.0;
};

/// Observed convergence order from two residuals of the same problem at steps
/// h and h/2 (or any ratio). Only coarse points that also lie on the fine grid
/// enter the sup norms, so both norms see the same spatial region.
OrderEstimate estimate_order(const ResidualField& coarse, const ResidualField& fine);

}  // namespace starsdym
