#pragma once

// Kahler backgrounds on C^4 restricted to real independent coordinates
// (w, z, w~, z~). The metric is g_{a b~} = d_a d_{b~} K.

#include <Eigen/Dense>

#include <array>
#include <functional>
#include <optional>

namespace starsdym {

/// (w, z, w~, z~)
using KahlerPoint = std::array<double, 4>;

/// Rows a in {w, z}, columns b~ in {w~, z~}.
using KahlerMetric = Eigen::Matrix2d;

class KahlerBackground {
 public:
  using Potential = std::function<double(const KahlerPoint&)>;
  using MetricFunction = std::function<KahlerMetric(const KahlerPoint&)>;
  using DeterminantFactor = std::function<double(double w, double z)>;

  /// K = w w~ + z z~, g = identity, G = 1.
  static KahlerBackground flat();

  /// G must satisfy det g = G(w, z) G~(w~, z~); it cannot be recovered pointwise.
  KahlerBackground(Potential potential, DeterminantFactor g_factor, double fd_step = 1e-4);

  /// Use closed-form metric components instead of finite differences of K.
  void register_metric(MetricFunction metric) { metric_ = std::move(metric); }

  double potential(const KahlerPoint& x) const { return potential_(x); }
  KahlerMetric metric(const KahlerPoint& x) const;
  double determinant_factor(double w, double z) const { return g_factor_(w, z); }

  /// g^{b~ a}: entry (b~, a) of the inverse of the metric matrix. Throws
  /// SingularityError, with the location, where det g vanishes.
  KahlerMetric inverse_metric(const KahlerPoint& x) const;

  /// epsilon^{wz} = +1
  static constexpr double epsilon(int a, int b) { return a == b ? 0.0 : (a < b ? 1.0 : -1.0); }

 private:
  Potential potential_;
  DeterminantFactor g_factor_;
  std::optional<MetricFunction> metric_;
  double fd_step_;
};

}  // namespace starsdym
