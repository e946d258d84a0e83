#include "starsdym/example_solution.hpp"

#include <boost/math/quadrature/gauss.hpp>

#include <cmath>
#include <numbers>

#include "starsdym/errors.hpp"

namespace starsdym {

namespace {

constexpr double kPi = std::numbers::pi;

using GaussLegendre16 = boost::math::quadrature::gauss<double, 16>;

/// Coefficients of cos p and sin p in the correction term at a = s cos q.
struct CorrectionParts {
  double cos_part;
  double sin_part;
};

CorrectionParts correction_parts(double s, double z, double q) {
  const double c = std::cos(q);
  const double a = s * c;
  if (std::abs(c) < kCosineSingularityBand) {
    const double cp = -GaussLegendre16::integrate([a](double t) { return std::sin(t * a); }, 0.0, z);
    const double sp = -GaussLegendre16::integrate([a](double t) { return std::cos(t * a); }, 0.0, z);
    return {cp, sp};
  }
  const double half = std::sin(0.5 * a * z);
  return {-2.0 * half * half / a, -std::sin(a * z) / a};
}

}  // namespace

double bracket_frequency(double hbar) {
  if (std::abs(hbar) < 1e-4) {
    const double h2 = hbar * hbar;
    return 1.0 - h2 / 24.0 + h2 * h2 / 1920.0;
  }
  return 2.0 / hbar * std::sin(0.5 * hbar);
}

double example_theta(double s, double w, double z, double p, double q) {
  const double base = 0.5 * kPi * std::cos(p + q) - w * std::sin(q);
  const double c = std::cos(q);
  const double a = s * c;
  double correction;
  if (std::abs(c) < kCosineSingularityBand) {
    correction = -GaussLegendre16::integrate([a, p](double t) { return std::sin(t * a + p); }, 0.0, z);
  } else {
    correction = -2.0 * std::sin(0.5 * a * z + p) * std::sin(0.5 * a * z) / a;
  }
  return base + correction;
}

ClosedFormSolution example_solution(double hbar) {
  if (!(hbar >= 0.0)) throw ValidationError("example_solution: hbar must be non-negative");
  const double s = bracket_frequency(hbar);
  ClosedFormSolution sol;
  sol.hbar = hbar;
  sol.frequency = s;
  sol.evaluator = [s](double w, double z, double p, double q) { return example_theta(s, w, z, p, q); };
  sol.classical_evaluator = [](double w, double z, double p, double q) { return example_theta(1.0, w, z, p, q); };
  return sol;
}

TorusSamples example_torus_samples(double hbar, double w, double z, int n) {
  const double s = bracket_frequency(hbar);
  TorusSamples out(n, n);
  const double d = 2.0 * kPi / n;
  std::vector<double> cos_p(n), sin_p(n);
  for (int i = 0; i < n; ++i) {
    cos_p[i] = std::cos(i * d);
    sin_p[i] = std::sin(i * d);
  }
  for (int j = 0; j < n; ++j) {
    const double q = j * d;
    const auto parts = correction_parts(s, z, q);
    const double sq = std::sin(q);
    for (int i = 0; i < n; ++i) {
      const double p = i * d;
      out.at(i, j) = 0.5 * kPi * std::cos(p + q) - w * sq + cos_p[i] * parts.cos_part + sin_p[i] * parts.sin_part;
    }
  }
  return out;
}

FourierField example_modes(double hbar, double w, double z, int torus, int band_limit) {
  return fft_project(example_torus_samples(hbar, w, z, torus), band_limit);
}

double example_series(double hbar, double w, double z, double p, double q, int terms) {
  const double x = bracket_frequency(hbar) * std::cos(q);
  double sum = 0.5 * kPi * std::cos(p + q) - w * std::sin(q) - std::sin(p) * z;
  double factorial = 1.0;  // (2m)!
  double zpow = 1.0;       // z^{2m}
  for (int m = 1; m <= terms; ++m) {
    factorial *= (2.0 * m - 1.0) * (2.0 * m);
    zpow *= z * z;
    const double sign = (m % 2 == 0) ? 1.0 : -1.0;
    sum += sign / factorial * std::pow(x, 2 * m - 1) * std::cos(p) * zpow;
    sum -= sign / (factorial * (2.0 * m + 1.0)) * std::pow(x, 2 * m) * std::sin(p) * zpow * z;
  }
  return sum;
}

}  // namespace starsdym
