#include "starsdym/chiral_sequence.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>

#include <fmt/format.h>

#include "starsdym/bessel.hpp"
#include "starsdym/errors.hpp"
#include "starsdym/example_solution.hpp"

namespace starsdym {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kTruncationTolerance = 1e-12;
const complex kHalfOverI{0.0, -0.5};

int power_of_minus_one(long e) { return e % 2 == 0 ? 1 : -1; }

double matrix_frequency(int n) { return n / kPi * std::sin(kPi / n); }

/// Sum of integral bounds from the given series position onwards.
double series_tail(const BesselCoefficient& c, int from, double x_max) {
  double tail = 0.0;
  for (int j = from; j < from + 200; ++j) {
    const int order = c.first_order + c.order_step * j;
    const double b = bessel_integral_bound(order, x_max);
    tail += b;
    if (b < 1e-300 || (j > from && b < 1e-30 * tail)) break;
  }
  return c.series_weight * tail / matrix_frequency(c.n_dim);
}

BesselCoefficient make_coefficient(BesselCoefficient::Kind kind, int n, int nu, int sign, int first_order,
                                   int order_step, int first_term, int alternation, double zero_weight,
                                   double series_weight, double z_max) {
  BesselCoefficient c;
  c.kind = kind;
  c.n_dim = n;
  c.nu = nu;
  c.sign = sign;
  c.first_order = first_order;
  c.order_step = order_step;
  c.first_term = first_term;
  c.alternation = alternation;
  c.zero_weight = zero_weight;
  c.series_weight = series_weight;
  c.z_max = z_max;
  const double x_max = z_max * matrix_frequency(n);
  int t = 1;
  while (series_tail(c, t, x_max) > kTruncationTolerance) ++t;
  c.truncation = t;
  c.tail_bound = series_tail(c, t, x_max);
  return c;
}

Matrix central_first(const std::vector<Matrix>& v, std::size_t k, std::size_t stride, double h) {
  return (v[k + stride] - v[k - stride]) / (2.0 * h);
}

Matrix central_second(const std::vector<Matrix>& v, std::size_t k, std::size_t stride, double h) {
  return (v[k + stride] - 2.0 * v[k] + v[k - stride]) / (h * h);
}

void require_chiral_grid(const ChiralField& field, int margin) {
  if (field.grid.dimension() != 2 || field.values.size() != field.grid.size()) {
    throw ValidationError("chiral field must live on a (w, z) grid");
  }
  for (std::size_t d = 0; d < 2; ++d) {
    if (field.grid.axis(d).count < 2 * margin + 1) {
      throw ValidationError("grid too small for the finite-difference stencil");
    }
  }
}

}  // namespace

FourierField fourier_expansion_theta(double hbar, double w, double z, int band_limit) {
  if (band_limit < 2) throw ValidationError("fourier_expansion_theta: band_limit must be at least 2");
  const double s = bracket_frequency(hbar);
  const double x = z * s;
  FourierField f(band_limit);
  f.add({1, 1}, kPi / 4.0);
  f.add({-1, -1}, kPi / 4.0);
  // -w sin q
  f.add({0, 1}, complex{0.0, 0.5 * w});
  f.add({0, -1}, complex{0.0, -0.5 * w});
  if (x == 0.0) return f;
  for (int l = 1; l <= band_limit; ++l) {
    const double integral = bessel_j_integral(l, x);
    if (l % 2 == 1) {
      const int m = (l + 1) / 2;
      const complex a = power_of_minus_one(m) / s * integral * 0.5;
      for (const ModeVector k : {ModeVector{1, l}, ModeVector{-1, -l}, ModeVector{-1, l}, ModeVector{1, -l}}) {
        f.add(k, a);
      }
    } else {
      const int m = l / 2;
      const complex a = kHalfOverI * (power_of_minus_one(m + 1) / s * integral);
      f.add({1, l}, a);
      f.add({-1, -l}, -a);
      f.add({-1, l}, -a);
      f.add({1, -l}, a);
    }
  }
  const complex a0 = kHalfOverI * (-bessel_j_integral(0, x) / s);
  f.add({1, 0}, a0);
  f.add({-1, 0}, -a0);
  return f;
}

double fourier_expansion_tail_bound(double hbar, double z, int band_limit) {
  const double s = bracket_frequency(hbar);
  double tail = 0.0;
  for (int l = band_limit + 1; l < band_limit + 200; ++l) {
    const double b = bessel_integral_bound(l, z * s) / s;
    tail += b * b;
    if (b < 1e-300) break;
  }
  return std::sqrt(tail);
}

double BesselCoefficient::value(double z) const {
  if (std::abs(z) > z_max * (1.0 + 1e-12)) {
    throw ValidationError(fmt::format("{}: z = {} outside the certified range |z| <= {}", name(), z, z_max));
  }
  const double s = matrix_frequency(n_dim);
  const double x = z * s;
  double total = zero_weight * bessel_j_integral(0, x);
  double series = 0.0;
  for (int j = 0; j < truncation; ++j) {
    const int r = first_term + j;
    const int sign_r = (alternation < 0 && r % 2 == 1) ? -1 : 1;
    series += sign_r * bessel_j_integral(first_order + order_step * j, x);
  }
  total += series_weight * series;
  return sign * total / s;
}

std::string BesselCoefficient::name() const {
  switch (kind) {
    case Kind::a_odd:
      return fmt::format("a_{}", 2 * nu - 1);
    case Kind::a_even:
      return fmt::format("a_{}", 2 * nu);
    case Kind::b_odd:
      return fmt::format("b_{}", 2 * nu - 1);
    case Kind::b_even:
      return fmt::format("b_{}", 2 * nu);
    case Kind::a0:
      return "a_0";
    case Kind::b0:
      break;
  }
  return "b_0";
}

Matrix ChiralFormula::at_z(double z) const {
  Matrix out = (kPi / 2.0) * constant_part;
  for (const auto& t : terms) out += t.coefficient.value(z) * t.combination;
  return out;
}

Matrix ChiralFormula::evaluate(double w, double z) const { return at_z(z) - w * w_part; }

ChiralFormula chiral_formula(int n, double z_max) {
  if (n < 2) throw ValidationError(fmt::format("chiral_formula: N must be at least 2, got {}", n));
  using Kind = BesselCoefficient::Kind;
  auto l = [n](int a, int b) { return basis_matrix(n, {a, b}).entries; };
  ChiralFormula f;
  f.n_dim = n;
  f.w_part = kHalfOverI * (l(0, 1) + l(0, n - 1));
  auto add = [&](BesselCoefficient c, Matrix m) { f.terms.push_back({std::move(c), std::move(m)}); };

  if (n % 2 == 0) {
    const int half = n / 2;
    const int alt = power_of_minus_one(half);
    f.constant_part = 0.5 * (l(1, 1) + l(n - 1, n - 1));
    for (int nu = 1; nu <= half; ++nu) {
      const int o = 2 * nu - 1;
      add(make_coefficient(Kind::a_odd, n, nu, power_of_minus_one(nu), o, n, 0, alt, 0.0, 1.0, z_max),
          0.5 * (l(1, o) + l(n - 1, n - o)) + 0.5 * (l(n - 1, o) + l(1, n - o)));
    }
    for (int nu = 1; nu <= half - 1; ++nu) {
      const int e = 2 * nu;
      add(make_coefficient(Kind::a_even, n, nu, power_of_minus_one(nu + 1), e, n, 0, alt, 0.0, 1.0, z_max),
          kHalfOverI * (l(1, e) + l(n - 1, n - e)) + kHalfOverI * (l(n - 1, e) + l(1, n - e)));
    }
    // The r = 0 term of the displayed sum duplicates the separate J_0 integral;
    // the folding of the expansion gives the series from r = 1.
    add(make_coefficient(Kind::a0, n, 0, -1, n, n, 1, alt, 1.0, 2.0, z_max), kHalfOverI * (l(1, 0) + l(n - 1, 0)));
  } else {
    const int half = (n - 1) / 2;
    const int parity = power_of_minus_one((n + 1) / 2);
    f.constant_part = 0.5 * (l(1, 1) - l(n - 1, n - 1));
    for (int nu = 1; nu <= half; ++nu) {
      const int o = 2 * nu - 1;
      const int e = 2 * nu;
      const int sg = power_of_minus_one(nu);
      add(make_coefficient(Kind::a_odd, n, nu, sg, o, 2 * n, 0, -1, 0.0, 1.0, z_max),
          0.5 * (l(1, o) - l(n - 1, n - o)) + 0.5 * (l(n - 1, o) + l(1, n - o)));
      add(make_coefficient(Kind::a_even, n, nu, sg * parity, e + n, 2 * n, 0, -1, 0.0, 1.0, z_max),
          0.5 * (l(1, e) + l(n - 1, n - e)) + 0.5 * (l(1, n - e) - l(n - 1, e)));
      add(make_coefficient(Kind::b_odd, n, nu, sg * parity, o + n, 2 * n, 0, -1, 0.0, 1.0, z_max),
          kHalfOverI * (l(1, o) + l(n - 1, n - o)) + kHalfOverI * (l(1, n - o) - l(n - 1, o)));
      add(make_coefficient(Kind::b_even, n, nu, -sg, e, 2 * n, 0, -1, 0.0, 1.0, z_max),
          kHalfOverI * (l(1, e) - l(n - 1, n - e)) + kHalfOverI * (l(n - 1, e) + l(1, n - e)));
    }
    add(make_coefficient(Kind::a0, n, 0, parity, n, 2 * n, 0, -1, 0.0, 1.0, z_max), l(1, 0) - l(n - 1, 0));
    // sigma = 0 requires l != 0: the series starts at k = 1.
    add(make_coefficient(Kind::b0, n, 0, -1, 2 * n, 2 * n, 1, -1, 1.0, 2.0, z_max),
        kHalfOverI * (l(1, 0) + l(n - 1, 0)));
  }
  return f;
}

Matrix chiral_field(int n, double w, double z) {
  return chiral_formula(n, std::max(2.0, std::abs(z))).evaluate(w, z);
}

ChiralField generate_chiral_field(int n, const SpacetimeGrid& grid) {
  if (grid.dimension() != 2) throw ValidationError("generate_chiral_field: expected a (w, z) grid");
  const auto& wa = grid.axis(0);
  const auto& za = grid.axis(1);
  const double z_max = std::max({2.0, std::abs(za.start), std::abs(za.stop())});
  const ChiralFormula formula = chiral_formula(n, z_max);
  std::vector<Matrix> per_z;
  per_z.reserve(static_cast<std::size_t>(za.count));
  for (int j = 0; j < za.count; ++j) per_z.push_back(formula.at_z(za.at(j)));
  ChiralField out{grid, n, {}};
  out.values.reserve(grid.size());
  for (int i = 0; i < wa.count; ++i) {
    for (int j = 0; j < za.count; ++j) {
      out.values.push_back(per_z[static_cast<std::size_t>(j)] - wa.at(i) * formula.w_part);
    }
  }
  return out;
}

Matrix pauli_closed_form(double w, double z) {
  Matrix s1(2, 2), s2(2, 2), s3(2, 2);
  s1 << 0, 1, 1, 0;
  s2 << 0, complex{0, -1}, complex{0, 1}, 0;
  s3 << 1, 0, 0, -1;
  const double x = 2.0 * z / kPi;
  return kHalfOverI * std::cos(x) * s1 + complex{0.0, -w / kPi} * s2 + kHalfOverI * std::sin(x) * s3;
}

ResidualField residual_chiral(const ChiralField& field) {
  require_chiral_grid(field, 1);
  const auto& g = field.grid;
  const double hw = g.axis(0).step, hz = g.axis(1).step;
  const std::size_t sw = g.stride(0), sz = g.stride(1);
  ResidualField out{g.interior(1), {}};
  out.values.reserve(out.grid.size());
  for (std::size_t k = 0; k < out.grid.size(); ++k) {
    auto idx = out.grid.multi_index(k);
    for (auto& i : idx) ++i;
    const std::size_t c = g.flat_index(idx);
    const Matrix dw = central_first(field.values, c, sw, hw);
    const Matrix dz = central_first(field.values, c, sz, hz);
    const Matrix r = central_second(field.values, c, sw, hw) + central_second(field.values, c, sz, hz) + dw * dz -
                     dz * dw;
    out.values.push_back(r.norm());
  }
  return out;
}

std::pair<ResidualField, ResidualField> chiral_system_check(const ChiralField& field) {
  require_chiral_grid(field, 2);
  const auto& g = field.grid;
  const double hw = g.axis(0).step, hz = g.axis(1).step;
  const std::size_t sw = g.stride(0), sz = g.stride(1);
  const Matrix zero = Matrix::Zero(field.n_dim, field.n_dim);
  std::vector<Matrix> a_w(g.size(), zero), a_z(g.size(), zero);
  for (std::size_t k = 0; k < g.size(); ++k) {
    if (!g.is_interior(g.multi_index(k), 1)) continue;
    a_w[k] = -central_first(field.values, k, sz, hz);
    a_z[k] = central_first(field.values, k, sw, hw);
  }
  std::pair<ResidualField, ResidualField> out{{g.interior(2), {}}, {g.interior(2), {}}};
  for (std::size_t k = 0; k < out.first.grid.size(); ++k) {
    auto idx = out.first.grid.multi_index(k);
    for (auto& i : idx) i += 2;
    const std::size_t c = g.flat_index(idx);
    const Matrix first = central_first(a_z, c, sw, hw) - central_first(a_w, c, sz, hz) + a_w[c] * a_z[c] -
                         a_z[c] * a_w[c];
    const Matrix second = central_first(a_w, c, sw, hw) + central_first(a_z, c, sz, hz);
    out.first.values.push_back(first.norm());
    out.second.values.push_back(second.norm());
  }
  return out;
}

SuNMembership su_n_membership(const ChiralField& field) {
  SuNMembership m;
  for (const auto& x : field.values) {
    m.anti_hermitian = std::max(m.anti_hermitian, (x + Matrix(x.adjoint())).cwiseAbs().maxCoeff());
    m.trace = std::max(m.trace, std::abs(x.trace()));
  }
  return m;
}

ConvergenceTable convergence_study(const std::vector<int>& n_list, const SpacetimeGrid& grid, int band_limit) {
  if (grid.dimension() != 2) throw ValidationError("convergence_study: expected a (w, z) grid");
  for (std::size_t i = 0; i < n_list.size(); ++i) {
    if (n_list[i] < 2) throw ValidationError("convergence_study: N must be at least 2");
    if (i > 0 && n_list[i] <= n_list[i - 1]) throw ValidationError("convergence_study: N list must increase");
  }
  constexpr double kClassicalHbar = 1e-8;
  std::map<std::size_t, FourierField> reference;
  for (std::size_t k = 0; k < grid.size(); ++k) {
    const auto x = grid.coordinates(k);
    reference.emplace(k, fourier_expansion_theta(kClassicalHbar, x[0], x[1], band_limit));
  }
  ConvergenceTable table;
  for (int n : n_list) {
    double d = 0.0;
    for (std::size_t k = 0; k < grid.size(); ++k) {
      const auto x = grid.coordinates(k);
      const FourierField f = fourier_expansion_theta(matrix_hbar(n), x[0], x[1], band_limit);
      const FourierField& ref = reference.at(k);
      for (const auto& mu : fundamental_window(n)) d = std::max(d, std::abs(f.coeff(mu) - ref.coeff(mu)));
    }
    table.rows.push_back({n, d});
  }
  table.strictly_decreasing = true;
  for (std::size_t i = 1; i < table.rows.size(); ++i) {
    if (!(table.rows[i].distance < table.rows[i - 1].distance)) table.strictly_decreasing = false;
  }
  if (table.rows.size() >= 2) {
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    const double m = static_cast<double>(table.rows.size());
    for (const auto& r : table.rows) {
      const double lx = std::log(static_cast<double>(r.n));
      const double ly = std::log(r.distance);
      sx += lx;
      sy += ly;
      sxx += lx * lx;
      sxy += lx * ly;
    }
    table.fitted_exponent = -(m * sxy - sx * sy) / (m * sxx - sx * sx);
  }
  return table;
}

BesselIdentityReport bessel_identity_check(double z_max, int terms) {
  if (!(z_max > 0.0)) throw ValidationError("bessel_identity_check: z_max must be positive");
  if (terms < 1) throw ValidationError("bessel_identity_check: terms must be positive");
  BesselIdentityReport rep;
  rep.z_max = z_max;
  rep.terms = terms;
  // First omitted orders are 2 terms + 2 and 2 terms + 3; |J_n| <= (x/2)^n / n!.
  auto j_bound = [z_max](int order) { return std::exp(order * std::log(z_max / 2.0) - std::lgamma(order + 1.0)); };
  rep.truncation_bound = 2.0 * (j_bound(2 * terms + 2) + j_bound(2 * terms + 3));
  if (rep.truncation_bound > 1e-12) {
    throw ValidationError(fmt::format("bessel_identity_check: {} terms leave a truncation bound of {:.3g} on [0, {}]",
                                      terms, rep.truncation_bound, z_max));
  }
  constexpr int kPoints = 401;
  for (int i = 0; i < kPoints; ++i) {
    const double x = z_max * i / (kPoints - 1);
    const auto j = bessel_j_sequence(2 * terms + 1, x);
    double even = j[0];
    double odd_printed = 0.0;
    double odd_standard = 0.0;
    for (int k = 0; k <= terms; ++k) {
      const double sg = k % 2 == 0 ? 1.0 : -1.0;
      if (k >= 1) {
        even += 2.0 * sg * j[static_cast<std::size_t>(2 * k)];
        odd_printed += sg * j[static_cast<std::size_t>(2 * k + 1)];
      }
      if (2 * k + 1 <= 2 * terms + 1) odd_standard += 2.0 * sg * j[static_cast<std::size_t>(2 * k + 1)];
    }
    const double sinc = x == 0.0 ? 1.0 : std::sin(x) / x;
    rep.second_identity_deviation = std::max(rep.second_identity_deviation, std::abs(even - std::cos(x)));
    rep.first_printed_deviation = std::max(rep.first_printed_deviation, std::abs(odd_printed - sinc));
    rep.first_standard_deviation = std::max(rep.first_standard_deviation, std::abs(odd_standard - std::sin(x)));
    if (i == 0) {
      rep.first_printed_lhs_at_zero = odd_printed;
      rep.first_printed_rhs_at_zero = sinc;
    }
  }

  // N = 2: theta = (pi/2 + 2 a_1) L_(1,1) - (w/i) L_(0,1) + (a_0/i) L_(1,0), with
  // a_1 = -(1/s) int_0^X sum_{r>=0} (-1)^r J_{2r+1} and a_0 = -(1/s) sin X.
  const ChiralFormula two = chiral_formula(2, 1.0);
  const double s = matrix_frequency(2);
  const Matrix l11 = basis_matrix(2, {1, 1}).entries;
  const Matrix l01 = basis_matrix(2, {0, 1}).entries;
  const Matrix l10 = basis_matrix(2, {1, 0}).entries;
  const complex inv_i{0.0, -1.0};
  auto build = [&](double w, double a1, double a0) {
    return Matrix((kPi / 2.0 + 2.0 * a1) * l11 - w * inv_i * l01 + a0 * inv_i * l10);
  };
  constexpr int kSide = 21;
  for (int iw = 0; iw < kSide; ++iw) {
    for (int iz = 0; iz < kSide; ++iz) {
      const double w = -1.0 + 2.0 * iw / (kSide - 1);
      const double z = -1.0 + 2.0 * iz / (kSide - 1);
      const double x = z * s;
      const Matrix pauli = pauli_closed_form(w, z);
      const double a0 = -std::sin(x) / s;
      const double a1_standard = -(1.0 - std::cos(x)) / (2.0 * s);
      const double a1_printed = -(1.0 - bessel_j(0, x) + sine_integral(x)) / s;
      rep.n2_with_standard =
          std::max(rep.n2_with_standard, (build(w, a1_standard, a0) - pauli).cwiseAbs().maxCoeff());
      rep.n2_with_printed = std::max(rep.n2_with_printed, (build(w, a1_printed, a0) - pauli).cwiseAbs().maxCoeff());
      rep.n2_series = std::max(rep.n2_series, (two.evaluate(w, z) - pauli).cwiseAbs().maxCoeff());
    }
  }
  rep.required_variant = rep.n2_with_standard <= rep.n2_with_printed ? "standard" : "printed";
  return rep;
}

}  // namespace starsdym
