#pragma once

// The su(N) chiral fields obtained by folding the example solution at
// hbar = 2 pi / N, their field equation, and their N -> infinity limit.

#include <string>
#include <utility>
#include <vector>

#include "starsdym/projection.hpp"

namespace starsdym {

/// Fourier modes of the example solution up to the band limit. The
/// coefficients are integrals int_0^{z s} J_l with s = (2/hbar) sin(hbar/2).
FourierField fourier_expansion_theta(double hbar, double w, double z, int band_limit);

/// Bound on the coefficient l2 norm of the modes dropped at this band limit.
double fourier_expansion_tail_bound(double hbar, double z, int band_limit);

/// One scalar coefficient of the parity formulas:
///   value(z) = sign / s * (zero_weight * I_0(X) + series_weight * sum_{r >= r0} alt^r I_{order(r)}(X))
/// with X = z s, s = (N/pi) sin(pi/N), order(r) = first_order + order_step * (r - r0).
struct BesselCoefficient {
  enum class Kind { a_odd, a_even, b_odd, b_even, a0, b0 };

  Kind kind = Kind::a_odd;
  int nu = 0;
  int n_dim = 2;
  int sign = 1;
  int first_order = 0;
  int order_step = 1;
  int first_term = 0;
  int alternation = 1;
  double zero_weight = 0.0;
  double series_weight = 1.0;
  double z_max = 2.0;
  /// Number of series terms kept; the dropped tail is below tail_bound for |z| <= z_max.
  int truncation = 0;
  double tail_bound = 0.0;

  double value(double z) const;
  std::string name() const;
};

/// A coefficient together with the su(N) matrix it multiplies.
struct ChiralTerm {
  BesselCoefficient coefficient;
  Matrix combination;
};

/// theta_N(w, z) = (pi/2) P - w W + sum_k c_k(z) M_k
struct ChiralFormula {
  int n_dim = 2;
  Matrix constant_part;  // P
  Matrix w_part;         // W
  std::vector<ChiralTerm> terms;

  Matrix evaluate(double w, double z) const;
  /// Only the z-dependent part; evaluate = at_z - w W.
  Matrix at_z(double z) const;
};

/// Parity formulas for N, with coefficient truncations certified on |z| <= z_max.
ChiralFormula chiral_formula(int n, double z_max = 2.0);

/// theta_N(w, z). Throws ValidationError for N < 2.
Matrix chiral_field(int n, double w, double z);

using ChiralField = AlgebraField;

/// theta_N on a (w, z) grid; coefficients are evaluated once per z.
ChiralField generate_chiral_field(int n, const SpacetimeGrid& grid);

/// (1/2i) cos(2z/pi) s1 + (w/(pi i)) s2 + (1/2i) sin(2z/pi) s3
Matrix pauli_closed_form(double w, double z);

/// Frobenius norm of d_w^2 theta + d_z^2 theta + [d_w theta, d_z theta] at interior points.
ResidualField residual_chiral(const ChiralField& field);

/// With A_w = -d_z theta, A_z = d_w theta: the residuals of
/// d_w A_z - d_z A_w + [A_w, A_z] and d_w A_w + d_z A_z (two points from the edge).
std::pair<ResidualField, ResidualField> chiral_system_check(const ChiralField& field);

/// Max over points of |X + X^dagger| and |tr X|.
struct SuNMembership {
  double anti_hermitian = 0.0;
  double trace = 0.0;
};
SuNMembership su_n_membership(const ChiralField& field);

struct ConvergenceRow {
  int n = 0;
  double distance = 0.0;
};

struct ConvergenceTable {
  std::vector<ConvergenceRow> rows;
  /// Least-squares slope of -log d against log N.
  double fitted_exponent = 0.0;
  bool strictly_decreasing = false;
};

/// d(N) = sup over the grid and the window modes of the coefficient distance
/// between the expansions at hbar = 2 pi / N and hbar = 1e-8.
ConvergenceTable convergence_study(const std::vector<int>& n_list, const SpacetimeGrid& grid, int band_limit);

struct BesselIdentityReport {
  double z_max = 0.0;
  int terms = 0;
  double truncation_bound = 0.0;
  /// 2 sum_{k>=1} (-1)^k J_{2k} + J_0 against cos
  double second_identity_deviation = 0.0;
  /// sum_{k>=1} (-1)^k J_{2k+1} against sin(x)/x (as printed)
  double first_printed_deviation = 0.0;
  /// 2 sum_{k>=0} (-1)^k J_{2k+1} against sin
  double first_standard_deviation = 0.0;
  /// The summation at x = 0 and the printed right-hand side there.
  double first_printed_lhs_at_zero = 0.0;
  double first_printed_rhs_at_zero = 1.0;
  /// theta_2 built from each closed-form variant against the Pauli closed form.
  double n2_with_printed = 0.0;
  double n2_with_standard = 0.0;
  /// chiral_field(2) from the Bessel series against the Pauli closed form.
  double n2_series = 0.0;
  std::string required_variant;  // "standard" or "printed"
};

/// Evaluates the identities on a 401-point grid over [0, z_max]. Throws
/// ValidationError if `terms` leaves a truncation bound above 1e-12.
BesselIdentityReport bessel_identity_check(double z_max, int terms);

}  // namespace starsdym
