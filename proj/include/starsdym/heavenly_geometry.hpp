#pragma once

// Heavenly metrics from classical solutions, the example's null tetrad, and a
// small exterior-calculus engine on the single chart (w, z, p, q).
//
// Conventions: a 1-form is its component vector; a 2-form F = (1/2) F_{mn} dx^m ^ dx^n
// is its antisymmetric component matrix, so (a ^ b)_{mn} = a_m b_n - a_n b_m.
// Tetrad rows are e^1..e^4 (stored 0-based), with ds^2 = 2 e^1 e^2 + 2 e^3 e^4.
// Connection forms obey de^a = -Gamma^a_b ^ e^b with Gamma^a_b = eta^{ac} Gamma_{cb},
// and curvature is Omega_ab = dGamma_ab + Gamma_ac ^ eta^{cd} Gamma_db.

#include <Eigen/Dense>

#include <array>
#include <cstdint>
#include <functional>
#include <vector>

#include "starsdym/example_solution.hpp"

namespace starsdym {

/// (w, z, p, q)
using Point4 = std::array<double, 4>;
using Matrix4 = Eigen::Matrix4d;
using OneForm = Eigen::Vector4d;
using TwoForm = Eigen::Matrix4d;

/// Tolerance for quantities that vanish up to central-difference truncation
/// error with step h. Curvature components are compared relative to max(1, |C1|).
inline constexpr double fd_tolerance(double h) { return 50.0 * h * h; }

/// Mixed second derivatives of a classical solution entering the metric.
struct HPSecondDerivatives {
  double wp = 0.0;
  double wq = 0.0;
  double zp = 0.0;
  double zq = 0.0;

  /// {theta_w, theta_z} = theta_wq theta_zp - theta_wp theta_zq
  double bracket() const { return wq * zp - wp * zq; }
};

/// Closed-form derivatives of the example's classical solution.
HPSecondDerivatives example_second_derivatives(const Point4& x);

/// Central-difference derivatives of any classical solution.
HPSecondDerivatives fd_second_derivatives(const SpacetimeTorusFunction& theta, const Point4& x, double h);

/// dw (theta_wp dp + theta_wq dq) + dz (theta_zp dp + theta_zq dq)
///   - [(theta_wp dp + theta_wq dq)^2 + (theta_zp dp + theta_zq dq)^2] / {theta_w, theta_z}
/// as a symmetric matrix. Throws SingularityError where the bracket vanishes.
Matrix4 hp_metric(const HPSecondDerivatives& d);
Matrix4 hp_metric(const SpacetimeTorusFunction& theta, const Point4& x, double h = 1e-4);

/// The example's heavenly metric. Throws SingularityError at cos q = 0 or cos(z cos q + p) = 0.
Matrix4 example_metric(const Point4& x);

struct TetradFrame {
  Matrix4 e;  // row a is e^{a+1}
  double phi = 1.0;
};

/// Null tetrad of the example metric, Phi = cos q / cos(z cos q + p).
TetradFrame example_tetrad(const Point4& x);

/// e1 e2^T + e2 e1^T + e3 e4^T + e4 e3^T
Matrix4 tetrad_metric(const Matrix4& e);

/// Frame metric eta with eta_12 = eta_34 = 1 (its own inverse).
const Matrix4& frame_metric();

using FrameFunction = std::function<Matrix4(const Point4&)>;

/// Gamma_ab as coordinate 1-forms; antisymmetric in (a, b).
struct ConnectionForms {
  std::array<std::array<OneForm, 4>, 4> gamma;

  ConnectionForms();
  /// 1-based access matching the tetrad labels.
  const OneForm& operator()(int a, int b) const { return gamma[a - 1][b - 1]; }
  void set(int a, int b, const OneForm& form);
};

struct CartanFirstResult {
  std::array<TwoForm, 4> de;  // de^1..de^4
  ConnectionForms connection;
  double extraction_residual = 0.0;  // max |de^a + Gamma^a_b ^ e^b| for the extracted connection
};

/// Exterior derivatives of the frame by central differences with step h and
/// the unique connection solving the first structure equations. Throws
/// NumericalError if the extraction system is singular.
CartanFirstResult cartan_first(const FrameFunction& frame, const Point4& x, double h);

/// max |de^a + Gamma^a_b ^ e^b| over a and components.
double structure_residual(const Matrix4& e, const std::array<TwoForm, 4>& de, const ConnectionForms& connection);

/// The example's connection: Gamma_12 = Gamma_34 = -sqrt2 tan q e^3,
/// Gamma_31 = -sqrt2 Phi (tan q e^1 + Phi tan(z cos q + p) e^3).
ConnectionForms example_connection(const Point4& x);

/// Components of a 1-form or 2-form in the frame.
OneForm frame_components(const Matrix4& e, const OneForm& form);
TwoForm frame_components(const Matrix4& e, const TwoForm& form);

/// Max frame-component magnitude of Gamma_41, (1/2)(-Gamma_12 + Gamma_34), Gamma_32.
double dotted_connection_check(const ConnectionForms& connection, const Matrix4& e);

struct CurvatureForms {
  std::array<std::array<TwoForm, 4>, 4> omega;
  const TwoForm& operator()(int a, int b) const { return omega[a - 1][b - 1]; }
};

/// Curvature from nested central differences: the connection is extracted
/// with step h at x +- h along each axis and differentiated with step h.
CurvatureForms curvature(const FrameFunction& frame, const Point4& x, double h);

struct WeylReport {
  double c1 = 0.0;  // 2 (Omega_31)_{31} in frame components
  /// Max frame component of Omega_42, (1/2)(Omega_12 + Omega_34) and of
  /// Omega_31 apart from its e^3 ^ e^1 part.
  double other_components = 0.0;
  /// Max frame component of the dotted connection at x.
  double dotted_norm = 0.0;
  /// Max frame component of Omega_41, (1/2)(-Omega_12 + Omega_34), Omega_32.
  double dotted_curvature = 0.0;
};

WeylReport weyl_report(const FrameFunction& frame, const Point4& x, double h);

/// 4 Phi [(1 + 2 sin^2 q)/cos^2 q + (1 + 2 sin^2 Z)/cos^2 Z Phi^2], Z = z cos q + p.
double weyl_c1(const Point4& x);

struct PpWaveComparison {
  Matrix4 pulled_back;
  Matrix4 example;
  double residual = 0.0;  // max entry of the difference
};

/// Pulls -dw du + dv dz - (du^2 + dv^2)/sqrt((1-u^2)(1-v^2)) back through
/// u = sin q, v = sin(z cos q + p). Throws SingularityError when u^2 or v^2
/// is within 1e-12 of 1.
PpWaveComparison pp_wave_check(const Point4& x);

/// True when |cos q| and |cos(z cos q + p)| both exceed margin.
bool is_admissible(const Point4& x, double margin = 1e-4);

/// Seeded points with w in [-1, 1], z in [-1/2, 1/2], p in [-1/2, 1/2],
/// q in [-1, 1]; there cos q and cos(z cos q + p) are both above 0.5.
std::vector<Point4> sample_admissible_points(int count, std::uint64_t seed);

}  // namespace starsdym
