#pragma once

// Cauchy-Kowalewska series for the symmetry-reduced master equation
//   d_z^2 Theta = -d_w^2 Theta - {d_w Theta, d_z Theta}
// with Cauchy data on z = 0 that is polynomial in w.

#include <vector>

#include "starsdym/fourier_field.hpp"

namespace starsdym {

/// sum_j terms[j] w^j with torus-valued coefficients.
struct PolyField {
  std::vector<FourierField> terms;

  FourierField evaluate(double w) const;
  PolyField derivative_w() const;
  bool is_zero() const;
  int band_limit() const;
};

PolyField operator+(const PolyField& a, const PolyField& b);
PolyField operator*(complex s, const PolyField& a);

/// Bracket of polynomials, multiplied out in w. hbar = 0 selects the Poisson bracket.
PolyField poly_bracket(const PolyField& f, const PolyField& g, double hbar);

struct SeriesSolution {
  PolyField cauchy0;
  PolyField cauchy1;
  /// orders[k] = d_z^k Theta at z = 0, k = 0..K.
  std::vector<PolyField> orders;
  double hbar = 0.0;

  int truncation() const { return static_cast<int>(orders.size()) - 1; }

  /// sum_{k <= K} orders[k](w) z^k / k!
  FourierField evaluate(double w, double z) const;
};

/// Orders 2..K from
///   D_{k+2} = -d_w^2 D_k - sum_{j=0}^{k} C(k, j) {d_w D_j, D_{k-j+1}}.
/// Throws ValidationError for K < 2.
SeriesSolution kowalewska_series(const PolyField& cauchy0, const PolyField& cauchy1, double hbar, int K);

/// The example's Cauchy data: (pi/2) cos(p+q) - w sin q and -sin p.
PolyField example_cauchy0();
PolyField example_cauchy1();

}  // namespace starsdym
