#pragma once

// The explicit deformed solution of the symmetry-reduced master equation with
// Cauchy data Theta|_{z=0} = (pi/2) cos(p+q) - w sin q,  d_z Theta|_{z=0} = -sin p:
//
//   Theta = (pi/2) cos(p+q) - w sin q + [cos(z s cos q + p) - cos p] / (s cos q),
//   s = (2/hbar) sin(hbar/2)   (s = 1 at hbar = 0).

#include <functional>

#include "starsdym/torus_fft.hpp"

namespace starsdym {

/// (2/hbar) sin(hbar/2), by its Taylor series for |hbar| < 1e-4.
double bracket_frequency(double hbar);

/// Below this |cos q| the correction term is evaluated as
/// -int_0^z sin(zeta s cos q + p) d zeta by 16-point Gauss-Legendre.
inline constexpr double kCosineSingularityBand = 1e-6;

using SpacetimeTorusFunction = std::function<double(double w, double z, double p, double q)>;

struct ClosedFormSolution {
  double hbar = 0.0;
  double frequency = 1.0;
  SpacetimeTorusFunction evaluator;
  SpacetimeTorusFunction classical_evaluator;
};

/// hbar >= 0; hbar = 0 gives the classical solution.
ClosedFormSolution example_solution(double hbar);

/// Direct evaluation with frequency s.
double example_theta(double s, double w, double z, double p, double q);

/// Samples of Theta(w, z, ., .) on an n x n torus grid. Separates the p
/// dependence so each q column costs one branch evaluation.
TorusSamples example_torus_samples(double hbar, double w, double z, int n);

/// fft_project of example_torus_samples.
FourierField example_modes(double hbar, double w, double z, int torus, int band_limit);

/// Partial sums of the z power series with `terms` entries in each of the
/// even and odd sums.
double example_series(double hbar, double w, double z, double p, double q, int terms);

}  // namespace starsdym
