// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <boost/math/special_functions/bessel.hpp>
#include <fmt/core.h>

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "starsdym/chiral_sequence.hpp"
#include "starsdym/example_solution.hpp"
#include "starsdym/heavenly_geometry.hpp"
#include "starsdym/kowalewska.hpp"
#include "starsdym/me_solver.hpp"
#include "starsdym/projection.hpp"
#include "starsdym/random.hpp"
#include "starsdym/sine_basis.hpp"

using namespace starsdym;
namespace fs = std::filesystem;

namespace {

constexpr double kPi = std::numbers::pi;
const complex kI{0.0, 1.0};
constexpr double kOrderTolerance = 0.3;

struct Outcome {
  bool passed = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (!ok) passed = false;
    if (!detail.empty()) detail += "; ";
    detail += ok ? what : "[failed] " + what;
  }
};

double max_entry(const Matrix& m) { return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff(); }

int parity(long k) { return k % 2 == 0 ? 1 : -1; }

bool order_ok(double order) { return std::abs(order - 2.0) <= kOrderTolerance; }

FourierField random_real_field(PortableRng& rng, int band_limit) {
  FourierField f(band_limit);
  for (int m1 = -band_limit; m1 <= band_limit; ++m1) {
    for (int m2 = -band_limit; m2 <= band_limit; ++m2) {
      const ModeVector m{m1, m2};
      if (m < -m) continue;
      const complex c{rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0)};
      if (m == -m) {
        f.set(m, c.real());
      } else {
        f.set(m, c);
        f.set(-m, std::conj(c));
      }
    }
  }
  return (1.0 / l2_norm(f)) * f;
}

FourierField random_complex_field(PortableRng& rng, int band_limit) {
  FourierField f(band_limit);
  for (int m1 = -band_limit; m1 <= band_limit; ++m1) {
    for (int m2 = -band_limit; m2 <= band_limit; ++m2) {
      f.set({m1, m2}, complex{rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0)});
    }
  }
  return (1.0 / l2_norm(f)) * f;
}

double max_coefficient(const FourierField& f) {
  double d = 0.0;
  for (const auto& [m, c] : f.coefficients()) d = std::max(d, std::abs(c));
  return d;
}

// ---- 1: sine basis --------------------------------------------------------

Matrix reference_power(const Matrix& u, int k) {
  Matrix out = Matrix::Identity(u.rows(), u.cols());
  const Matrix base = k >= 0 ? u : Matrix(u.inverse());
  for (int j = 0; j < std::abs(k); ++j) out = out * base;
  return out;
}

// L_m = (iN/2pi) exp(i pi m1 m2 / N) S^m1 T^m2 from entrywise clock and shift.
class ReferenceBasis {
 public:
  explicit ReferenceBasis(int n) : n_(n), s_(Matrix::Zero(n, n)), t_(Matrix::Zero(n, n)) {
    for (int k = 0; k < n; ++k) s_(k, k) = std::polar(1.0, kPi / n + 2 * kPi * k / n);
    for (int k = 0; k + 1 < n; ++k) t_(k, k + 1) = 1.0;
    t_(n - 1, 0) = -1.0;
  }

  Matrix operator()(ModeVector m) const {
    return (kI * double(n_) / (2 * kPi)) * std::polar(1.0, kPi * m.m1 * m.m2 / n_) * reference_power(s_, m.m1) *
           reference_power(t_, m.m2);
  }

 private:
  int n_;
  Matrix s_;
  Matrix t_;
};

Outcome criterion_sine_basis() {
  Outcome out;
  std::vector<int> printed_det_failures;
  double worst[8] = {};  // construction, periodicity, trace, kernel, product, adjoint, det printed, structure
  double worst_det_corrected = 0.0;
  bool library_agrees = true;
  for (int n = 2; n <= 8; ++n) {
    const ReferenceBasis L(n);
    const complex c = kI * double(n) / (2 * kPi);
    std::vector<ModeVector> window;
    for (int a = 0; a < n; ++a) {
      for (int b = 0; b < n; ++b) {
        if (a != 0 || b != 0) window.push_back({a, b});
      }
    }
    double det_printed = 0.0;
    for (const auto& mu : window) {
      const Matrix lm = L(mu);
      worst[0] = std::max(worst[0], max_entry(basis_matrix(n, mu).entries - lm));
      for (int r1 = -2; r1 <= 2; ++r1) {
        for (int r2 = -2; r2 <= 2; ++r2) {
          const int sign = parity((mu.m1 + 1L) * r2 + (mu.m2 + 1L) * r1 + long(n) * r1 * r2);
          worst[1] = std::max(worst[1], max_entry(L({mu.m1 + n * r1, mu.m2 + n * r2}) - double(sign) * lm));
        }
      }
      worst[2] = std::max(worst[2], std::abs(lm.trace()));
      const Matrix minus = L(-mu);
      worst[5] = std::max(worst[5], max_entry(lm.adjoint() + minus));
      worst[5] = std::max(worst[5], max_entry(lm.adjoint() - std::pow(n / (2 * kPi), 2) * Matrix(lm.inverse())));
      const complex det = lm.determinant();
      const complex norm = std::pow(c, n);
      const complex printed = double(parity(long(n) * (mu.m1 + mu.m2 + mu.m1 * mu.m2))) * norm;
      const complex corrected = double(parity(long(mu.m1) * mu.m2 + long(n) * (mu.m1 + mu.m2))) * norm;
      det_printed = std::max(det_printed, std::abs(det - printed) / std::abs(printed));
      worst_det_corrected = std::max(worst_det_corrected, std::abs(det - corrected) / std::abs(corrected));
      for (const auto& nu : window) {
        const Matrix ln = L(nu);
        const ModeVector sum{mu.m1 + nu.m1, mu.m2 + nu.m2};
        // omega^{(n x m)/2} with omega = exp(2 pi i / N)
        const complex phase = std::polar(1.0, kPi * double(cross(nu, mu)) / n);
        const Matrix lsum = L(sum);
        worst[4] = std::max(worst[4], max_entry(lm * ln - c * phase * lsum));
        const double sc = n / kPi * std::sin(kPi / n * double(cross(mu, nu)));
        worst[7] = std::max(worst[7], max_entry(lm * ln - ln * lm - sc * lsum));
      }
    }
    for (int r1 = -2; r1 <= 2; ++r1) {
      for (int r2 = -2; r2 <= 2; ++r2) {
        const complex expected = double(parity(r1 + r2 + long(n) * r1 * r2)) * kI * double(n * n) / (2 * kPi);
        worst[3] = std::max(worst[3], std::abs(L({n * r1, n * r2}).trace() - expected));
      }
    }
    worst[6] = std::max(worst[6], det_printed);
    if (det_printed > 1e-10) printed_det_failures.push_back(n);
    const auto report = verify_basis_properties(n);
    library_agrees = library_agrees && report.structure_constants.passed && report.determinant_corrected.passed &&
                     report.properties.size() == 6 && report.properties[5].passed == (det_printed <= 1e-10);
  }
  const char* names[] = {"construction", "periodicity", "traceless", "kernel trace", "product rule", "adjoint/inverse"};
  for (int k = 0; k < 6; ++k) out.require(worst[k] <= 1e-11, fmt::format("{} {:.2e}", names[k], worst[k]));
  std::string failing;
  for (int n : printed_det_failures) failing += (failing.empty() ? "" : ",") + std::to_string(n);
  out.require(worst[6] <= 1e-10, fmt::format("determinant (printed sign) rel {:.2e}{}", worst[6],
                                             failing.empty() ? "" : " fails at N=" + failing));
  out.detail += fmt::format("; corrected sign (-1)^(m1 m2 + N(m1+m2)) rel {:.2e}", worst_det_corrected);
  out.require(worst[7] <= 1e-11, fmt::format("sine structure constants {:.2e}", worst[7]));
  out.require(library_agrees, "library report agrees");
  return out;
}

// ---- 2: homomorphism ------------------------------------------------------

Outcome criterion_homomorphism() {
  Outcome out;
  PortableRng rng(2024);
  double worst = 0.0;
  int pairs = 0;
  for (int n = 2; n <= 7; ++n) {
    for (int trial = 0; trial < 100; ++trial) {
      const auto f = random_real_field(rng, 4);
      const auto g = random_real_field(rng, 4);
      const Matrix a = chi_project(f, n).matrix, b = chi_project(g, n).matrix;
      const Matrix image = chi_project(moyal_bracket(f, g, 2 * kPi / n), n).matrix;
      worst = std::max(worst, max_entry(image - (a * b - b * a)));
      ++pairs;
    }
  }
  out.require(worst <= 1e-10, fmt::format("{} pairs, max entry {:.2e}", pairs, worst));
  return out;
}

// ---- 3: star algebra ------------------------------------------------------

Outcome criterion_star_algebra() {
  Outcome out;
  PortableRng rng(3);
  double assoc = 0.0;
  for (int trial = 0; trial < 20; ++trial) {
    const auto f = random_complex_field(rng, 5), g = random_complex_field(rng, 5), h = random_complex_field(rng, 5);
    const double hbar = rng.uniform(0.1, 3.0);
    assoc = std::max(assoc, max_abs_difference(star_product(star_product(f, g, hbar), h, hbar),
                                               star_product(f, star_product(g, h, hbar), hbar)));
  }
  out.require(assoc <= 1e-12, fmt::format("associativity {:.2e}", assoc));

  double antisym = 0.0, commutator = 0.0, jacobi = 0.0;
  for (int trial = 0; trial < 100; ++trial) {
    const auto f = random_complex_field(rng, 5), g = random_complex_field(rng, 5), h = random_complex_field(rng, 5);
    const double hbar = rng.uniform(0.1, 3.0);
    const auto fg = moyal_bracket(f, g, hbar);
    antisym = std::max(antisym, max_abs_difference(fg, -1.0 * moyal_bracket(g, f, hbar)));
    if (trial < 10) {
      const auto star_commutator =
          complex{0.0, -1.0 / hbar} * (star_product(f, g, hbar) - star_product(g, f, hbar));
      commutator = std::max(commutator, max_abs_difference(fg, star_commutator));
    }
    const auto sum = moyal_bracket(f, moyal_bracket(g, h, hbar), hbar) +
                     moyal_bracket(g, moyal_bracket(h, f, hbar), hbar) + moyal_bracket(h, fg, hbar);
    jacobi = std::max(jacobi, max_coefficient(sum));
  }
  out.require(antisym == 0.0, fmt::format("antisymmetry {:.1e}", antisym));
  out.require(commutator <= 1e-12, fmt::format("bracket vs star commutator {:.2e}", commutator));
  out.require(jacobi <= 1e-12, fmt::format("Jacobi over 100 triples {:.2e}", jacobi));

  const auto f = random_real_field(rng, 4), g = random_real_field(rng, 4);
  const auto classical = poisson_bracket(f, g);
  const double e1 = max_abs_difference(moyal_bracket(f, g, 0.01), classical);
  const double e2 = max_abs_difference(moyal_bracket(f, g, 0.005), classical);
  const double order = std::log2(e1 / e2);
  out.require(order_ok(order), fmt::format("Moyal -> Poisson order {:.4f}", order));
  return out;
}

// ---- 4: master equation ---------------------------------------------------

SpacetimeGrid square(double h) {
  return SpacetimeGrid({UniformAxis::from_range(-1, 1, h), UniformAxis::from_range(-1, 1, h)});
}

// Expected order k coefficients of -s^{k-1} cos^{k-1} q cos(p + (k-2) pi/2),
// expanded by the binomial theorem.
FourierField displayed_order(double s, int k) {
  const int j = k - 1;
  const double phi = (k - 2) * kPi / 2;
  FourierField out;
  double binom = 1.0;
  for (int a = 0; a <= j; ++a) {
    const double weight = -std::pow(s, j) * std::pow(0.5, j) * binom * 0.5;
    out.add({1, j - 2 * a}, weight * std::polar(1.0, phi));
    out.add({-1, j - 2 * a}, weight * std::polar(1.0, -phi));
    binom = binom * (j - a) / (a + 1);
  }
  return out;
}

double closed_form_theta(double s, double w, double z, double p, double q) {
  const double a = s * std::cos(q);
  return 0.5 * kPi * std::cos(p + q) - w * std::sin(q) + (std::cos(p + a * z) - std::cos(p)) / a;
}

Outcome criterion_master_equation() {
  Outcome out;
  std::vector<double> hbars;
  for (int n = 2; n <= 8; ++n) hbars.push_back(2 * kPi / n);
  hbars.push_back(1e-3);
  for (double hbar : hbars) {
    const auto coarse = residual_moyal_hp(sample_example_solution(square(1.0 / 8), hbar, 64, 24));
    const auto fine = residual_moyal_hp(sample_example_solution(square(1.0 / 16), hbar, 64, 24));
    const double order = estimate_order(coarse, fine).order;
    out.require(order_ok(order), fmt::format("hbar={:.4f} order {:.3f}", hbar, order));
  }

  double recursion = 0.0;
  for (double hbar : {2 * kPi / 5, 0.3, 0.0}) {
    const double s = hbar == 0.0 ? 1.0 : 2.0 / hbar * std::sin(0.5 * hbar);
    const auto series = kowalewska_series(example_cauchy0(), example_cauchy1(), hbar, 6);
    for (int k = 2; k <= 6; ++k) {
      const auto& terms = series.orders[k].terms;
      for (std::size_t j = 0; j < std::max<std::size_t>(terms.size(), 1); ++j) {
        const FourierField got = j < terms.size() ? terms[j] : FourierField{};
        recursion = std::max(recursion, max_abs_difference(got, j == 0 ? displayed_order(s, k) : FourierField{}));
      }
    }
  }
  out.require(recursion <= 1e-12, fmt::format("orders 2..6 coefficientwise {:.2e}", recursion));

  const double hbar = 2 * kPi / 5;
  const double s = 2.0 / hbar * std::sin(0.5 * hbar);
  const auto series = kowalewska_series(example_cauchy0(), example_cauchy1(), hbar, 12);
  double truncation = 0.0;
  for (double w : {-0.7, 0.0, 0.5}) {
    const auto field = series.evaluate(w, 0.4);
    for (int a = 0; a < 16; ++a) {
      for (int b = 0; b < 16; ++b) {
        const double p = 2 * kPi * a / 16, q = 2 * kPi * (b + 0.3) / 16;
        truncation = std::max(truncation, std::abs(eval_on_torus(field, p, q) - closed_form_theta(s, w, 0.4, p, q)));
      }
    }
  }
  out.require(truncation <= 1e-8, fmt::format("K=12 at z=0.4 {:.2e}", truncation));
  return out;
}

// ---- 5: geometry ----------------------------------------------------------

Matrix4 line_element(const Point4& x) {
  const double z = x[1], p = x[2], q = x[3];
  const double c = std::cos(q), cz = std::cos(z * c + p);
  OneForm a = OneForm::Zero(), dq = OneForm::Zero(), dw = OneForm::Zero(), dz = OneForm::Zero();
  a[3] = z * std::sin(q);
  a[2] = -1.0;
  dq[3] = 1.0;
  dw[0] = 1.0;
  dz[1] = 1.0;
  auto sym = [](const OneForm& u, const OneForm& v) { return Matrix4(0.5 * (u * v.transpose() + v * u.transpose())); };
  return -c * sym(dw, dq) + cz * sym(a, dz) - (1.0 / (c * cz)) * (c * c * sym(dq, dq) + cz * cz * sym(a, a));
}

Outcome criterion_geometry() {
  Outcome out;
  constexpr double h = 1e-3;
  const double fd_tol = fd_tolerance(h);
  const FrameFunction frame = [](const Point4& x) { return example_tetrad(x).e; };
  double tetrad = 0.0, dotted = 0.0, c1 = 0.0, other = 0.0;
  for (const auto& x : sample_admissible_points(20, 11)) {
    tetrad = std::max(tetrad, (tetrad_metric(example_tetrad(x).e) - line_element(x)).cwiseAbs().maxCoeff());
    const auto report = weyl_report(frame, x, h);
    const double closed = weyl_c1(x);
    dotted = std::max(dotted, report.dotted_norm);
    c1 = std::max(c1, std::abs(report.c1 - closed) / std::abs(closed));
    other = std::max(other, std::max(report.other_components, report.dotted_curvature) / std::max(1.0, std::abs(closed)));
  }
  out.require(tetrad <= 1e-10, fmt::format("tetrad {:.2e}", tetrad));
  out.require(dotted <= fd_tol, fmt::format("dotted connection {:.2e} (fd tol {:.1e})", dotted, fd_tol));
  out.require(c1 <= 1e-4, fmt::format("C1 relative {:.2e}", c1));
  out.require(std::abs(weyl_c1({0.3, 0.2, 0.1, 0.4}) - 10.3352711024613) <= 1e-11, "C1 symbolic anchor");
  out.require(other <= fd_tol, fmt::format("other curvature components {:.2e}", other));
  double pp = 0.0;
  for (const auto& x : sample_admissible_points(50, 12)) pp = std::max(pp, pp_wave_check(x).residual);
  out.require(pp <= 1e-10, fmt::format("pp-wave at 50 points {:.2e}", pp));
  return out;
}

// ---- 6: chiral sequence ---------------------------------------------------

Outcome criterion_chiral() {
  Outcome out;
  Matrix s1(2, 2), s2(2, 2), s3(2, 2);
  s1 << 0, 1, 1, 0;
  s2 << 0, -kI, kI, 0;
  s3 << 1, 0, 0, -1;
  double pauli = 0.0;
  for (int a = 0; a <= 64; ++a) {
    for (int b = 0; b <= 64; ++b) {
      const double w = -1.0 + a / 32.0, z = -1.0 + b / 32.0;
      const Matrix expected = (1.0 / (2.0 * kI)) * std::cos(2 * z / kPi) * s1 + (w / (kPi * kI)) * s2 +
                              (1.0 / (2.0 * kI)) * std::sin(2 * z / kPi) * s3;
      pauli = std::max(pauli, max_entry(chiral_field(2, w, z) - expected));
    }
  }
  out.require(pauli <= 1e-9, fmt::format("Pauli 65x65 {:.2e}", pauli));

  for (int n = 2; n <= 6; ++n) {
    const auto coarse = generate_chiral_field(n, square(1.0 / 16));
    const auto membership = su_n_membership(coarse);
    const double order = estimate_order(residual_chiral(coarse), residual_chiral(generate_chiral_field(n, square(1.0 / 32)))).order;
    out.require(std::max(membership.anti_hermitian, membership.trace) <= 1e-11 && order_ok(order),
                fmt::format("N={} su(N) {:.1e} order {:.3f}", n, std::max(membership.anti_hermitian, membership.trace),
                            order));
  }

  double fold = 0.0;
  for (int n : {3, 4, 5}) {
    for (const auto& [w, z] : std::vector<std::pair<double, double>>{{0.4, 0.6}, {-0.8, -1.3}, {0.1, 1.9}, {1.0, -0.2}}) {
      const Matrix folded = chi_project(fourier_expansion_theta(2 * kPi / n, w, z, 60), n).matrix;
      fold = std::max(fold, max_entry(chiral_field(n, w, z) - folded));
    }
  }
  out.require(fold <= 1e-7, fmt::format("fold-project N=3,4,5 {:.2e}", fold));
  return out;
}

// ---- 7: convergence -------------------------------------------------------

Outcome criterion_convergence() {
  Outcome out;
  const SpacetimeGrid grid({UniformAxis::from_range(1, 1, 1), UniformAxis::from_range(-1, 1, 0.25)});
  const std::vector<int> ns{2, 4, 8, 16, 32};
  const auto table = convergence_study(ns, grid, 40);
  // Least-squares slope of -log d against log N.
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  std::string ds;
  bool decreasing = true;
  for (std::size_t k = 0; k < table.rows.size(); ++k) {
    const double x = std::log(double(table.rows[k].n)), y = -std::log(table.rows[k].distance);
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
    if (k > 0 && !(table.rows[k].distance < table.rows[k - 1].distance)) decreasing = false;
    ds += fmt::format("{}{:.3e}", k ? "," : "", table.rows[k].distance);
  }
  const double m = double(table.rows.size());
  const double slope = (m * sxy - sx * sy) / (m * sxx - sx * sx);
  out.require(table.rows.size() == ns.size() && decreasing && table.strictly_decreasing,
              fmt::format("d(N) = [{}] decreasing", ds));
  out.require(std::abs(slope - 2.0) <= kOrderTolerance && std::abs(table.fitted_exponent - slope) <= 1e-9,
              fmt::format("exponent {:.4f}", slope));
  return out;
}

// ---- 8: Bessel identities -------------------------------------------------

Outcome criterion_bessel() {
  Outcome out;
  double second = 0.0, standard = 0.0, printed = 0.0;
  for (int k = 0; k <= 400; ++k) {
    const double x = 4.0 * k / 400;
    double even = boost::math::cyl_bessel_j(0, x), odd_standard = 0.0, odd_printed = 0.0;
    for (int j = 0; j < 30; ++j) {
      const double sign = j % 2 == 0 ? 1.0 : -1.0;
      if (j >= 1) even += 2.0 * sign * boost::math::cyl_bessel_j(2 * j, x);
      odd_standard += 2.0 * sign * boost::math::cyl_bessel_j(2 * j + 1, x);
      if (j >= 1) odd_printed += sign * boost::math::cyl_bessel_j(2 * j + 1, x);
    }
    second = std::max(second, std::abs(even - std::cos(x)));
    standard = std::max(standard, std::abs(odd_standard - std::sin(x)));
    printed = std::max(printed, std::abs(odd_printed - (x == 0.0 ? 1.0 : std::sin(x) / x)));
  }
  const auto report = bessel_identity_check(4.0, 30);
  out.require(second <= 1e-12 && report.second_identity_deviation <= 1e-12,
              fmt::format("second identity {:.2e} (library {:.2e})", second, report.second_identity_deviation));
  out.require(report.required_variant == "standard" && report.n2_with_standard <= 1e-12 &&
                  report.n2_with_printed > report.n2_with_standard,
              fmt::format("N=2 arbiter picks '{}' (standard {:.2e}, printed {:.2e})", report.required_variant,
                          report.n2_with_standard, report.n2_with_printed));
  out.require(standard <= 1e-12 && printed >= 0.5,
              fmt::format("first identity: standard form {:.2e}, printed form off by {:.3f} (at 0: {} vs {})", standard,
                          printed, report.first_printed_lhs_at_zero, report.first_printed_rhs_at_zero));
  return out;
}

// ---- 9: determinism -------------------------------------------------------

std::string slurp(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Outcome criterion_determinism() {
  Outcome out;
  const fs::path dir = fs::temp_directory_path() / "starsdym_acceptance";
  fs::remove_all(dir);
  fs::create_directories(dir);
  const std::vector<std::pair<std::string, std::string>> runs{
      {"basis", "basis --n 3"},
      {"star", "star --f '[[1,2,0.5,0],[-1,0,0,1]]' --g '[[0,1,1,0],[2,-1,0.25,0.5]]' --op moyal --hbar 0.7"},
      {"solve", "solve"},
      {"verify-me", "verify-me --h 0.125 --format json"},
      {"verify-chiral", "verify-chiral --n 3 --h 0.125"},
      {"curvature", "curvature --points 5"},
      {"converge", "converge --n-list 2,4,8"},
      {"bessel-check", "bessel-check"},
  };
  for (const auto& [name, args] : runs) {
    std::string first, second;
    bool ran = true;
    for (int rep = 0; rep < 2; ++rep) {
      const fs::path file = dir / (name + std::to_string(rep));
      const std::string cmd = fmt::format("'{}' {} --out '{}' > /dev/null 2>&1", STARSDYM_CLI, args, file.string());
      const int status = std::system(cmd.c_str());
      ran = ran && status != -1 && fs::exists(file) && fs::file_size(file) > 0;
      (rep == 0 ? first : second) = ran ? slurp(file) : std::string{};
    }
    out.require(ran && first == second, fmt::format("{} {} bytes", name, first.size()));
  }
  fs::remove_all(dir);
  return out;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"sine basis", criterion_sine_basis},
      {"chi_N homomorphism", criterion_homomorphism},
      {"star algebra", criterion_star_algebra},
      {"master equation", criterion_master_equation},
      {"heavenly geometry", criterion_geometry},
      {"chiral sequence", criterion_chiral},
      {"convergence to the classical limit", criterion_convergence},
      {"Bessel identities", criterion_bessel},
      {"determinism", criterion_determinism},
  };
  int failures = 0;
  for (std::size_t k = 0; k < criteria.size(); ++k) {
    Outcome outcome;
    try {
      outcome = criteria[k].second();
    } catch (const std::exception& e) {
      outcome.passed = false;
      outcome.detail = std::string("exception: ") + e.what();
    }
    if (!outcome.passed) ++failures;
    fmt::print("{} criterion {}: {}: {}\n", outcome.passed ? "PASS" : "FAIL", k + 1, criteria[k].first, outcome.detail);
    std::fflush(stdout);
  }
  fmt::print("{} of {} criteria passed\n", criteria.size() - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
