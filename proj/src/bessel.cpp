#include "starsdym/bessel.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include <algorithm>
#include <cmath>

#include "starsdym/errors.hpp"

namespace starsdym {

namespace {

using Kronrod = boost::math::quadrature::gauss_kronrod<double, 31>;

constexpr double kIntegralTolerance = 1e-13;

double integrate(const auto& f, double x) {
  if (x == 0.0) return 0.0;
  double err = 0.0;
  // Boost stops once the error estimate is below rel * L1; the integrands are
  // bounded by one, so L1 <= |x| and this gives an absolute tolerance.
  const double rel = kIntegralTolerance / std::abs(x);
  return Kronrod::integrate(f, 0.0, x, 15, rel, &err);
}

}  // namespace

std::vector<double> bessel_j_sequence(int n_max, double x) {
  if (n_max < 0) throw ValidationError("bessel_j_sequence: order must be non-negative");
  std::vector<double> j(static_cast<std::size_t>(n_max) + 1, 0.0);
  if (x == 0.0) {
    j[0] = 1.0;
    return j;
  }
  const double ax = std::abs(x);
  // Start well above both the requested order and the argument.
  int start = static_cast<int>(std::max<double>(n_max, ax)) + 20 +
              static_cast<int>(std::sqrt(40.0 * std::max<double>(n_max, ax)));
  if (start % 2 == 1) ++start;
  double next = 0.0;
  double cur = 1e-300;
  double norm = 0.0;
  for (int k = start; k >= 1; --k) {
    const double prev = 2.0 * k / ax * cur - next;
    next = cur;
    cur = prev;  // J_{k-1}
    if (k - 1 <= n_max) j[static_cast<std::size_t>(k - 1)] = cur;
    if ((k - 1) % 2 == 0 && k - 1 > 0) norm += 2.0 * cur;
    if (std::abs(cur) > 1e250) {  // rescale to avoid overflow
      for (auto& v : j) v *= 1e-250;
      next *= 1e-250;
      cur *= 1e-250;
      norm *= 1e-250;
    }
  }
  norm += cur;  // J_0
  for (auto& v : j) v /= norm;
  if (x < 0.0) {
    for (std::size_t n = 1; n < j.size(); n += 2) j[n] = -j[n];
  }
  return j;
}

double bessel_j(int n, double x) {
  if (n < 0) throw ValidationError("bessel_j: order must be non-negative");
  return bessel_j_sequence(n, x).back();
}

double bessel_j_integral(int n, double x) {
  if (n < 0) throw ValidationError("bessel_j_integral: order must be non-negative");
  if (x < 0.0) {
    // J_n(-t) = (-1)^n J_n(t)
    const double v = bessel_j_integral(n, -x);
    return n % 2 == 0 ? -v : v;
  }
  return integrate([n](double t) { return bessel_j(n, t); }, x);
}

double bessel_integral_bound(int n, double x) {
  const double ax = std::abs(x);
  // 2 (|x|/2)^{n+1} / (n+1)!
  return 2.0 * std::exp((n + 1) * std::log(std::max(ax, 1e-300) / 2.0) - std::lgamma(n + 2.0));
}

double sine_integral(double x) {
  if (x < 0.0) return -sine_integral(-x);
  return integrate([](double t) { return t == 0.0 ? 1.0 : std::sin(t) / t; }, x);
}

}  // namespace starsdym
