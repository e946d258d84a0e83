#include "starsdym/grid.hpp"

#include <algorithm>
#include <cmath>

#include "starsdym/errors.hpp"

namespace starsdym {

UniformAxis UniformAxis::from_range(double lo, double hi, double h) {
  if (!(h > 0.0)) throw ValidationError("grid step must be positive");
  if (hi == lo) return {lo, h, 1};
  if (!(hi > lo)) throw ValidationError("grid range must be nonempty");
  const double steps = (hi - lo) / h;
  const double rounded = std::round(steps);
  if (std::abs(steps - rounded) > 1e-9 * std::max(1.0, rounded)) {
    throw ValidationError("grid range is not a whole number of steps");
  }
  return {lo, h, static_cast<int>(rounded) + 1};
}

SpacetimeGrid::SpacetimeGrid(std::vector<UniformAxis> axes) : axes_(std::move(axes)) {
  strides_.assign(axes_.size(), 1);
  size_ = axes_.empty() ? 0 : 1;
  for (std::size_t d = axes_.size(); d-- > 0;) {
    if (axes_[d].count < 1 || !(axes_[d].step > 0.0)) {
      throw ValidationError("grid axes need a positive step and at least one point");
    }
    strides_[d] = size_;
    size_ *= static_cast<std::size_t>(axes_[d].count);
  }
}

std::size_t SpacetimeGrid::flat_index(const std::vector<int>& idx) const {
  std::size_t flat = 0;
  for (std::size_t d = 0; d < axes_.size(); ++d) flat += strides_[d] * static_cast<std::size_t>(idx[d]);
  return flat;
}

std::vector<int> SpacetimeGrid::multi_index(std::size_t flat) const {
  std::vector<int> idx(axes_.size());
  for (std::size_t d = 0; d < axes_.size(); ++d) {
    idx[d] = static_cast<int>(flat / strides_[d]);
    flat %= strides_[d];
  }
  return idx;
}

std::vector<double> SpacetimeGrid::coordinates(std::size_t flat) const {
  const auto idx = multi_index(flat);
  std::vector<double> x(axes_.size());
  for (std::size_t d = 0; d < axes_.size(); ++d) x[d] = axes_[d].at(idx[d]);
  return x;
}

bool SpacetimeGrid::is_interior(const std::vector<int>& idx, int margin) const {
  for (std::size_t d = 0; d < axes_.size(); ++d) {
    if (idx[d] < margin || idx[d] > axes_[d].count - 1 - margin) return false;
  }
  return true;
}

SpacetimeGrid SpacetimeGrid::interior(int margin) const {
  std::vector<UniformAxis> inner;
  inner.reserve(axes_.size());
  for (const auto& a : axes_) {
    if (a.count <= 2 * margin) throw ValidationError("grid too small for the finite-difference stencil");
    inner.push_back({a.at(margin), a.step, a.count - 2 * margin});
  }
  return SpacetimeGrid(std::move(inner));
}

double SpacetimeGrid::max_step() const {
  double h = 0.0;
  for (const auto& a : axes_) h = std::max(h, a.step);
  return h;
}

ResidualSummary ResidualField::summary() const {
  ResidualSummary s;
  s.h = grid.max_step();
  double sq = 0.0;
  for (double v : values) {
    s.sup_norm = std::max(s.sup_norm, std::abs(v));
    sq += v * v;
  }
  if (!values.empty()) s.l2_norm = std::sqrt(sq / static_cast<double>(values.size()));
  return s;
}

OrderEstimate estimate_order(const ResidualField& coarse, const ResidualField& fine) {
  if (coarse.grid.dimension() != fine.grid.dimension()) {
    throw ValidationError("estimate_order: grids have different dimensions");
  }
  OrderEstimate est;
  const std::size_t dim = coarse.grid.dimension();
  for (std::size_t k = 0; k < coarse.values.size(); ++k) {
    const auto x = coarse.grid.coordinates(k);
    std::vector<int> idx(dim);
    bool on_fine = true;
    for (std::size_t d = 0; d < dim && on_fine; ++d) {
      const auto& a = fine.grid.axis(d);
      const double t = (x[d] - a.start) / a.step;
      const double r = std::round(t);
      if (std::abs(t - r) > 1e-6 || r < 0 || r > a.count - 1) on_fine = false;
      idx[d] = static_cast<int>(r);
    }
    if (!on_fine) continue;
    est.coarse_sup = std::max(est.coarse_sup, std::abs(coarse.values[k]));
    est.fine_sup = std::max(est.fine_sup, std::abs(fine.values[fine.grid.flat_index(idx)]));
  }
  const double ratio = coarse.grid.max_step() / fine.grid.max_step();
  if (est.coarse_sup > 0.0 && est.fine_sup > 0.0) {
    est.order = std::log(est.coarse_sup / est.fine_sup) / std::log(ratio);
  }
  return est;
}

}  // namespace starsdym
