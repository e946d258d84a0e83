#include "starsdym/heavenly_geometry.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include <fmt/format.h>

#include "starsdym/errors.hpp"
#include "starsdym/random.hpp"

namespace starsdym {

namespace {

constexpr int kW = 0, kZ = 1, kP = 2, kQ = 3;
constexpr double kSingularCosine = 1e-12;
const double kSqrt2 = std::numbers::sqrt2;

/// Index of the frame partner c with eta^{ac} = 1.
constexpr int partner(int a) { return a ^ 1; }

TwoForm wedge(const OneForm& a, const OneForm& b) { return a * b.transpose() - b * a.transpose(); }

Matrix4 sym(const OneForm& a, const OneForm& b) { return 0.5 * (a * b.transpose() + b * a.transpose()); }

OneForm basis_form(int mu) {
  OneForm f = OneForm::Zero();
  f(mu) = 1.0;
  return f;
}

Point4 shifted(const Point4& x, int mu, double delta) {
  Point4 y = x;
  y[static_cast<std::size_t>(mu)] += delta;
  return y;
}

double max_abs(const Matrix4& m) { return m.cwiseAbs().maxCoeff(); }

void require_regular(const Point4& x, const char* what) {
  const double cq = std::cos(x[kQ]);
  const double cz = std::cos(x[kZ] * cq + x[kP]);
  if (std::abs(cq) < kSingularCosine || std::abs(cz) < kSingularCosine) {
    throw SingularityError(fmt::format("{}: singular point (w, z, p, q) = ({}, {}, {}, {})", what, x[0], x[1], x[2],
                                       x[3]));
  }
}

/// Exterior derivative of each frame row by central differences.
std::array<TwoForm, 4> frame_derivatives(const FrameFunction& frame, const Point4& x, double h) {
  std::array<Matrix4, 4> partial;  // partial[mu](a, nu) = d_mu e^a_nu
  for (int mu = 0; mu < 4; ++mu) {
    partial[static_cast<std::size_t>(mu)] = (frame(shifted(x, mu, h)) - frame(shifted(x, mu, -h))) / (2.0 * h);
  }
  std::array<TwoForm, 4> de;
  for (int a = 0; a < 4; ++a) {
    TwoForm d = TwoForm::Zero();
    for (int mu = 0; mu < 4; ++mu) {
      for (int nu = 0; nu < 4; ++nu) {
        d(mu, nu) = partial[static_cast<std::size_t>(mu)](a, nu) - partial[static_cast<std::size_t>(nu)](a, mu);
      }
    }
    de[static_cast<std::size_t>(a)] = d;
  }
  return de;
}

/// Unknown slot for gamma_{c b e} with c < b.
int pair_slot(int c, int b) {
  static constexpr int table[4][4] = {{-1, 0, 1, 2}, {0, -1, 3, 4}, {1, 3, -1, 5}, {2, 4, 5, -1}};
  return table[c][b];
}

/// The connection from frame-component exterior derivatives, solving
///   (de^a)_{de} + eta^{ac} (gamma_{c e d} - gamma_{c d e}) = 0.
ConnectionForms solve_connection(const Matrix4& e, const std::array<TwoForm, 4>& de_frame) {
  Eigen::Matrix<double, 24, 24> system = Eigen::Matrix<double, 24, 24>::Zero();
  Eigen::Matrix<double, 24, 1> rhs;
  auto add_gamma = [&](int row, int c, int b, int comp, double coeff) {
    if (c == b) return;
    const double sign = c < b ? 1.0 : -1.0;
    const int slot = pair_slot(std::min(c, b), std::max(c, b));
    system(row, slot * 4 + comp) += sign * coeff;
  };
  int row = 0;
  for (int a = 0; a < 4; ++a) {
    const int c = partner(a);
    for (int d = 0; d < 4; ++d) {
      for (int f = d + 1; f < 4; ++f) {
        add_gamma(row, c, f, d, 1.0);
        add_gamma(row, c, d, f, -1.0);
        rhs(row) = -de_frame[static_cast<std::size_t>(a)](d, f);
        ++row;
      }
    }
  }
  Eigen::FullPivLU<Eigen::Matrix<double, 24, 24>> lu(system);
  if (lu.rank() != 24) throw NumericalError("cartan_first: connection extraction system is singular");
  const Eigen::Matrix<double, 24, 1> gamma = lu.solve(rhs);

  ConnectionForms conn;
  for (int c = 0; c < 4; ++c) {
    for (int b = c + 1; b < 4; ++b) {
      OneForm frame_comp;
      for (int comp = 0; comp < 4; ++comp) frame_comp(comp) = gamma(pair_slot(c, b) * 4 + comp);
      conn.set(c + 1, b + 1, e.transpose() * frame_comp);
    }
  }
  return conn;
}

}  // namespace

HPSecondDerivatives example_second_derivatives(const Point4& x) {
  const double q = x[kQ];
  const double zc = std::cos(x[kZ] * std::cos(q) + x[kP]);
  return {0.0, -std::cos(q), -zc, x[kZ] * std::sin(q) * zc};
}

HPSecondDerivatives fd_second_derivatives(const SpacetimeTorusFunction& theta, const Point4& x, double h) {
  auto mixed = [&](int a, int b) {
    auto at = [&](double sa, double sb) {
      const Point4 y = shifted(shifted(x, a, sa * h), b, sb * h);
      return theta(y[0], y[1], y[2], y[3]);
    };
    return (at(1, 1) - at(1, -1) - at(-1, 1) + at(-1, -1)) / (4.0 * h * h);
  };
  return {mixed(kW, kP), mixed(kW, kQ), mixed(kZ, kP), mixed(kZ, kQ)};
}

Matrix4 hp_metric(const HPSecondDerivatives& d) {
  const double b = d.bracket();
  if (std::abs(b) < kSingularCosine) {
    throw SingularityError(fmt::format("hp_metric: Poisson bracket denominator vanishes ({:.3g})", b));
  }
  const OneForm alpha = d.wp * basis_form(kP) + d.wq * basis_form(kQ);
  const OneForm beta = d.zp * basis_form(kP) + d.zq * basis_form(kQ);
  return sym(basis_form(kW), alpha) + sym(basis_form(kZ), beta) -
         (alpha * alpha.transpose() + beta * beta.transpose()) / b;
}

Matrix4 hp_metric(const SpacetimeTorusFunction& theta, const Point4& x, double h) {
  return hp_metric(fd_second_derivatives(theta, x, h));
}

Matrix4 example_metric(const Point4& x) {
  require_regular(x, "example_metric");
  const double q = x[kQ];
  const double cq = std::cos(q);
  const double cz = std::cos(x[kZ] * cq + x[kP]);
  const OneForm dq = basis_form(kQ);
  const OneForm big_x = x[kZ] * std::sin(q) * dq - basis_form(kP);
  return -cq * sym(basis_form(kW), dq) + cz * sym(big_x, basis_form(kZ)) -
         (cq * cq * dq * dq.transpose() + cz * cz * big_x * big_x.transpose()) / (cq * cz);
}

TetradFrame example_tetrad(const Point4& x) {
  require_regular(x, "example_tetrad");
  const double q = x[kQ];
  const double cq = std::cos(q);
  const double phi = cq / std::cos(x[kZ] * cq + x[kP]);
  const OneForm dq = basis_form(kQ);
  const OneForm big_x = x[kZ] * std::sin(q) * dq - basis_form(kP);
  TetradFrame f;
  f.phi = phi;
  f.e.row(0) = (cq * basis_form(kZ) - big_x).transpose() / (kSqrt2 * phi);
  f.e.row(1) = big_x.transpose() / kSqrt2;
  f.e.row(2) = -dq.transpose() / kSqrt2;
  f.e.row(3) = (cq * basis_form(kW) + phi * dq).transpose() / kSqrt2;
  return f;
}

Matrix4 tetrad_metric(const Matrix4& e) {
  const OneForm e1 = e.row(0).transpose(), e2 = e.row(1).transpose();
  const OneForm e3 = e.row(2).transpose(), e4 = e.row(3).transpose();
  return e1 * e2.transpose() + e2 * e1.transpose() + e3 * e4.transpose() + e4 * e3.transpose();
}

const Matrix4& frame_metric() {
  static const Matrix4 eta = [] {
    Matrix4 m = Matrix4::Zero();
    m(0, 1) = m(1, 0) = m(2, 3) = m(3, 2) = 1.0;
    return m;
  }();
  return eta;
}

ConnectionForms::ConnectionForms() {
  for (auto& row : gamma) row.fill(OneForm::Zero());
}

void ConnectionForms::set(int a, int b, const OneForm& form) {
  gamma[static_cast<std::size_t>(a - 1)][static_cast<std::size_t>(b - 1)] = form;
  gamma[static_cast<std::size_t>(b - 1)][static_cast<std::size_t>(a - 1)] = -form;
}

OneForm frame_components(const Matrix4& e, const OneForm& form) {
  return e.inverse().transpose() * form;
}

TwoForm frame_components(const Matrix4& e, const TwoForm& form) {
  const Matrix4 inv = e.inverse();
  return inv.transpose() * form * inv;
}

double structure_residual(const Matrix4& e, const std::array<TwoForm, 4>& de, const ConnectionForms& connection) {
  double worst = 0.0;
  for (int a = 0; a < 4; ++a) {
    TwoForm total = de[static_cast<std::size_t>(a)];
    const int c = partner(a);
    for (int b = 0; b < 4; ++b) {
      total += wedge(connection(c + 1, b + 1), e.row(b).transpose());
    }
    worst = std::max(worst, max_abs(total));
  }
  return worst;
}

CartanFirstResult cartan_first(const FrameFunction& frame, const Point4& x, double h) {
  if (!(h > 0.0)) throw ValidationError("cartan_first: step must be positive");
  const Matrix4 e = frame(x);
  CartanFirstResult out;
  out.de = frame_derivatives(frame, x, h);
  std::array<TwoForm, 4> de_frame;
  for (std::size_t a = 0; a < 4; ++a) de_frame[a] = frame_components(e, out.de[a]);
  out.connection = solve_connection(e, de_frame);
  out.extraction_residual = structure_residual(e, out.de, out.connection);
  return out;
}

ConnectionForms example_connection(const Point4& x) {
  const TetradFrame f = example_tetrad(x);
  const double tq = std::tan(x[kQ]);
  const double tz = std::tan(x[kZ] * std::cos(x[kQ]) + x[kP]);
  const OneForm e1 = f.e.row(0).transpose();
  const OneForm e3 = f.e.row(2).transpose();
  ConnectionForms conn;
  conn.set(1, 2, -kSqrt2 * tq * e3);
  conn.set(3, 4, -kSqrt2 * tq * e3);
  conn.set(3, 1, -kSqrt2 * f.phi * (tq * e1 + f.phi * tz * e3));
  return conn;
}

double dotted_connection_check(const ConnectionForms& connection, const Matrix4& e) {
  const OneForm combos[] = {connection(4, 1), 0.5 * (-connection(1, 2) + connection(3, 4)), connection(3, 2)};
  double worst = 0.0;
  for (const auto& c : combos) worst = std::max(worst, frame_components(e, c).cwiseAbs().maxCoeff());
  return worst;
}

CurvatureForms curvature(const FrameFunction& frame, const Point4& x, double h) {
  const ConnectionForms center = cartan_first(frame, x, h).connection;
  std::array<ConnectionForms, 4> plus, minus;
  for (int mu = 0; mu < 4; ++mu) {
    plus[static_cast<std::size_t>(mu)] = cartan_first(frame, shifted(x, mu, h), h).connection;
    minus[static_cast<std::size_t>(mu)] = cartan_first(frame, shifted(x, mu, -h), h).connection;
  }
  const Matrix4& eta = frame_metric();
  CurvatureForms out;
  for (int a = 1; a <= 4; ++a) {
    for (int b = 1; b <= 4; ++b) {
      TwoForm d = TwoForm::Zero();
      for (int mu = 0; mu < 4; ++mu) {
        const OneForm partial = (plus[static_cast<std::size_t>(mu)](a, b) - minus[static_cast<std::size_t>(mu)](a, b)) /
                                (2.0 * h);
        for (int nu = 0; nu < 4; ++nu) {
          d(mu, nu) += partial(nu);
          d(nu, mu) -= partial(nu);
        }
      }
      for (int c = 1; c <= 4; ++c) {
        for (int dd = 1; dd <= 4; ++dd) {
          const double g = eta(c - 1, dd - 1);
          if (g != 0.0) d += g * wedge(center(a, c), center(dd, b));
        }
      }
      out.omega[static_cast<std::size_t>(a - 1)][static_cast<std::size_t>(b - 1)] = d;
    }
  }
  return out;
}

WeylReport weyl_report(const FrameFunction& frame, const Point4& x, double h) {
  const Matrix4 e = frame(x);
  const CurvatureForms omega = curvature(frame, x, h);
  auto fc = [&](const TwoForm& f) { return frame_components(e, f); };
  WeylReport r;
  const TwoForm o31 = fc(omega(3, 1));
  r.c1 = 2.0 * o31(2, 0);
  TwoForm rest31 = o31;
  rest31(2, 0) = rest31(0, 2) = 0.0;
  r.other_components = std::max({max_abs(fc(omega(4, 2))), max_abs(fc(0.5 * (omega(1, 2) + omega(3, 4)))),
                                 max_abs(rest31)});
  r.dotted_curvature = std::max({max_abs(fc(omega(4, 1))), max_abs(fc(0.5 * (-omega(1, 2) + omega(3, 4)))),
                                 max_abs(fc(omega(3, 2)))});
  r.dotted_norm = dotted_connection_check(cartan_first(frame, x, h).connection, e);
  return r;
}

double weyl_c1(const Point4& x) {
  require_regular(x, "weyl_c1");
  const double q = x[kQ];
  const double big_z = x[kZ] * std::cos(q) + x[kP];
  const double phi = std::cos(q) / std::cos(big_z);
  const double sq = std::sin(q), cq = std::cos(q);
  const double sz = std::sin(big_z), cz = std::cos(big_z);
  return 4.0 * phi * ((1.0 + 2.0 * sq * sq) / (cq * cq) + (1.0 + 2.0 * sz * sz) / (cz * cz) * phi * phi);
}

PpWaveComparison pp_wave_check(const Point4& x) {
  const double q = x[kQ];
  const double z = x[kZ];
  const double big_z = z * std::cos(q) + x[kP];
  const double u = std::sin(q);
  const double v = std::sin(big_z);
  if (1.0 - u * u < kSingularCosine || 1.0 - v * v < kSingularCosine) {
    throw SingularityError(fmt::format("pp_wave_check: branch point at (w, z, p, q) = ({}, {}, {}, {})", x[0], x[1],
                                       x[2], x[3]));
  }
  // Metric in coordinates (w, z, u, v).
  Matrix4 h = Matrix4::Zero();
  h(0, 2) = h(2, 0) = -0.5;  // -dw du
  h(3, 1) = h(1, 3) = 0.5;   //  dv dz
  const double root = std::sqrt((1.0 - u * u) * (1.0 - v * v));
  h(2, 2) = -1.0 / root;
  h(3, 3) = -1.0 / root;
  // Jacobian d(w, z, u, v) / d(w, z, p, q).
  Matrix4 jac = Matrix4::Zero();
  jac(0, kW) = 1.0;
  jac(1, kZ) = 1.0;
  jac(2, kQ) = std::cos(q);
  jac(3, kZ) = std::cos(big_z) * std::cos(q);
  jac(3, kP) = std::cos(big_z);
  jac(3, kQ) = -std::cos(big_z) * z * std::sin(q);
  PpWaveComparison out;
  out.pulled_back = jac.transpose() * h * jac;
  out.example = example_metric(x);
  out.residual = max_abs(out.pulled_back - out.example);
  return out;
}

bool is_admissible(const Point4& x, double margin) {
  const double cq = std::cos(x[kQ]);
  return std::abs(cq) > margin && std::abs(std::cos(x[kZ] * cq + x[kP])) > margin;
}

std::vector<Point4> sample_admissible_points(int count, std::uint64_t seed) {
  PortableRng rng(seed);
  std::vector<Point4> points;
  while (static_cast<int>(points.size()) < count) {
    const double w = rng.uniform(-1.0, 1.0);
    const double z = rng.uniform(-0.5, 0.5);
    const double p = rng.uniform(-0.5, 0.5);
    const double q = rng.uniform(-1.0, 1.0);
    const Point4 x{w, z, p, q};
    if (is_admissible(x)) points.push_back(x);
  }
  return points;
}

}  // namespace starsdym
