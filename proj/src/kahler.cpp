#include "starsdym/kahler.hpp"

#include <cmath>

#include <fmt/format.h>

#include "starsdym/errors.hpp"

namespace starsdym {

KahlerBackground KahlerBackground::flat() {
  KahlerBackground bg([](const KahlerPoint& x) { return x[0] * x[2] + x[1] * x[3]; },
                      [](double, double) { return 1.0; });
  bg.register_metric([](const KahlerPoint&) { return KahlerMetric::Identity(); });
  return bg;
}

KahlerBackground::KahlerBackground(Potential potential, DeterminantFactor g_factor, double fd_step)
    : potential_(std::move(potential)), g_factor_(std::move(g_factor)), fd_step_(fd_step) {
  if (!potential_ || !g_factor_) throw ValidationError("KahlerBackground: potential and G are required");
  if (!(fd_step_ > 0.0)) throw ValidationError("KahlerBackground: finite-difference step must be positive");
}

KahlerMetric KahlerBackground::metric(const KahlerPoint& x) const {
  if (metric_) return (*metric_)(x);
  KahlerMetric g;
  const double h = fd_step_;
  for (int a = 0; a < 2; ++a) {
    for (int b = 0; b < 2; ++b) {
      auto at = [&](double sa, double sb) {
        KahlerPoint y = x;
        y[a] += sa * h;
        y[2 + b] += sb * h;
        return potential_(y);
      };
      g(a, b) = (at(1, 1) - at(1, -1) - at(-1, 1) + at(-1, -1)) / (4.0 * h * h);
    }
  }
  return g;
}

KahlerMetric KahlerBackground::inverse_metric(const KahlerPoint& x) const {
  const KahlerMetric g = metric(x);
  const double det = g.determinant();
  if (!(std::abs(det) > 1e-12)) {
    throw SingularityError(fmt::format("Kahler metric is singular at (w, z, w~, z~) = ({}, {}, {}, {})",
                                       x[0], x[1], x[2], x[3]));
  }
  // (g^{-1})(b~, a) with rows indexed by b~.
  return g.inverse();
}

}  // namespace starsdym
