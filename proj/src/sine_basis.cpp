#include "starsdym/sine_basis.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <numbers>

#include <fmt/format.h>

#include "starsdym/errors.hpp"

namespace starsdym {

namespace {

constexpr double kPi = std::numbers::pi;

void require_dimension(int n) {
  if (n < 2) throw ValidationError(fmt::format("matrix dimension must be at least 2, got {}", n));
}

complex normalization(int n) { return {0.0, n / (2.0 * kPi)}; }

int floor_div(int a, int b) {
  int q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

int parity_sign(long e) { return (e % 2 == 0) ? 1 : -1; }

double max_entry(const Matrix& m) { return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff(); }

}  // namespace

Matrix clock_matrix(int n) {
  require_dimension(n);
  Matrix s = Matrix::Zero(n, n);
  for (int j = 0; j < n; ++j) s(j, j) = std::polar(1.0, kPi * (2.0 * j + 1.0) / n);
  return s;
}

Matrix shift_matrix(int n) {
  require_dimension(n);
  Matrix t = Matrix::Zero(n, n);
  for (int i = 0; i + 1 < n; ++i) t(i, i + 1) = 1.0;
  t(n - 1, 0) = -1.0;
  return t;
}

Matrix unitary_power(const Matrix& u, int k) {
  const Matrix base = k < 0 ? Matrix(u.adjoint()) : u;
  Matrix out = Matrix::Identity(u.rows(), u.cols());
  for (int i = 0; i < std::abs(k); ++i) out = out * base;
  return out;
}

BasisMatrix basis_matrix(int n, ModeVector m) {
  require_dimension(n);
  const complex phase = std::polar(1.0, kPi * static_cast<double>(m.m1) * m.m2 / n);
  Matrix entries = normalization(n) * phase * unitary_power(clock_matrix(n), m.m1) *
                   unitary_power(shift_matrix(n), m.m2);
  return {n, m, std::move(entries)};
}

int periodicity_sign(int n, ModeVector mu, ModeVector r) {
  const long e = static_cast<long>(mu.m1 + 1) * r.m2 + static_cast<long>(mu.m2 + 1) * r.m1 +
                 static_cast<long>(n) * r.m1 * r.m2;
  return parity_sign(e);
}

WindowReduction reduce_to_window(int n, ModeVector m) {
  require_dimension(n);
  WindowReduction red;
  red.shift = {floor_div(m.m1, n), floor_div(m.m2, n)};
  red.mu = {m.m1 - n * red.shift.m1, m.m2 - n * red.shift.m2};
  red.sign = periodicity_sign(n, red.mu, red.shift);
  return red;
}

std::vector<ModeVector> fundamental_window(int n) {
  require_dimension(n);
  std::vector<ModeVector> w;
  w.reserve(static_cast<std::size_t>(n) * n - 1);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      if (a != 0 || b != 0) w.push_back({a, b});
    }
  }
  return w;
}

const std::vector<Matrix>& window_basis(int n) {
  static std::mutex mutex;
  static std::map<int, std::vector<Matrix>> cache;
  std::lock_guard lock(mutex);
  auto it = cache.find(n);
  if (it == cache.end()) {
    std::vector<Matrix> mats;
    for (const auto& mu : fundamental_window(n)) mats.push_back(basis_matrix(n, mu).entries);
    it = cache.emplace(n, std::move(mats)).first;
  }
  return it->second;
}

bool BasisPropertyReport::all_properties_passed() const {
  for (const auto& p : properties) {
    if (!p.passed) return false;
  }
  return structure_constants.passed;
}

double structure_constant_deviation(int n) {
  const auto window = fundamental_window(n);
  const auto& basis = window_basis(n);
  double dev = 0.0;
  for (std::size_t a = 0; a < window.size(); ++a) {
    for (std::size_t b = 0; b < window.size(); ++b) {
      const Matrix comm = basis[a] * basis[b] - basis[b] * basis[a];
      const ModeVector sum = window[a] + window[b];
      const auto red = reduce_to_window(n, sum);
      Matrix expected = Matrix::Zero(n, n);
      if (!red.in_kernel()) {
        const double c = (n / kPi) * std::sin(kPi / n * static_cast<double>(cross(window[a], window[b])));
        expected = c * static_cast<double>(red.sign) * basis_matrix(n, red.mu).entries;
      }
      dev = std::max(dev, max_entry(comm - expected));
    }
  }
  return dev;
}

BasisPropertyReport verify_basis_properties(int n, double entry_tol, double det_rel_tol) {
  require_dimension(n);
  const auto window = fundamental_window(n);
  const auto& basis = window_basis(n);
  const complex c = normalization(n);
  std::vector<ModeVector> shifts;
  for (int r1 = -2; r1 <= 2; ++r1) {
    for (int r2 = -2; r2 <= 2; ++r2) shifts.push_back({r1, r2});
  }

  double periodicity = 0.0;
  double traceless = 0.0;
  for (std::size_t a = 0; a < window.size(); ++a) {
    traceless = std::max(traceless, std::abs(basis[a].trace()));
    for (const auto& r : shifts) {
      const Matrix shifted = basis_matrix(n, window[a] + n * r).entries;
      periodicity = std::max(
          periodicity, max_entry(shifted - static_cast<double>(periodicity_sign(n, window[a], r)) * basis[a]));
      traceless = std::max(traceless, std::abs(shifted.trace()));
    }
  }

  double kernel_trace = 0.0;
  for (const auto& r : shifts) {
    const complex tr = basis_matrix(n, n * r).entries.trace();
    const long e = static_cast<long>(r.m1) + r.m2 + static_cast<long>(n) * r.m1 * r.m2;
    const complex expected = static_cast<double>(parity_sign(e)) * complex{0.0, n * n / (2.0 * kPi)};
    kernel_trace = std::max(kernel_trace, std::abs(tr - expected));
  }

  double product = 0.0;
  for (std::size_t a = 0; a < window.size(); ++a) {
    for (std::size_t b = 0; b < window.size(); ++b) {
      for (const ModeVector& r : {ModeVector{0, 0}, ModeVector{1, -1}, ModeVector{-2, 1}}) {
        const ModeVector m = window[a] + n * r;
        const ModeVector k = window[b];
        const Matrix lhs = basis_matrix(n, m).entries * basis[b];
        const complex phase = std::polar(1.0, kPi * static_cast<double>(cross(k, m)) / n);
        const Matrix rhs = c * phase * basis_matrix(n, m + k).entries;
        product = std::max(product, max_entry(lhs - rhs));
      }
    }
  }

  double adjoint = 0.0;
  double det_printed = 0.0;
  double det_corrected = 0.0;
  const double inv_scale = std::pow(n / (2.0 * kPi), 2);
  const complex det_norm = std::pow(c, n);
  for (std::size_t a = 0; a < window.size(); ++a) {
    const Matrix& l = basis[a];
    const Matrix neg = basis_matrix(n, -window[a]).entries;
    const Matrix inv = l.inverse();
    adjoint = std::max(adjoint, max_entry(Matrix(l.adjoint()) + neg));
    adjoint = std::max(adjoint, max_entry(-neg - inv_scale * inv));

    const complex det = l.determinant();
    const long m1 = window[a].m1;
    const long m2 = window[a].m2;
    const complex printed = static_cast<double>(parity_sign(n * (m1 + m2 + m1 * m2))) * det_norm;
    const complex corrected = static_cast<double>(parity_sign(m1 * m2 + n * (m1 + m2))) * det_norm;
    det_printed = std::max(det_printed, std::abs(det - printed) / std::abs(printed));
    det_corrected = std::max(det_corrected, std::abs(det - corrected) / std::abs(corrected));
  }

  BasisPropertyReport report;
  report.n = n;
  auto entry = [entry_tol](std::string name, double dev) {
    return PropertyCheck{std::move(name), dev <= entry_tol, dev};
  };
  report.properties = {
      entry("periodicity", periodicity),
      entry("traceless", traceless),
      entry("trace_of_kernel", kernel_trace),
      entry("product_rule", product),
      entry("adjoint_inverse", adjoint),
      PropertyCheck{"determinant", det_printed <= det_rel_tol, det_printed},
  };
  report.determinant_corrected = {"determinant_corrected", det_corrected <= det_rel_tol, det_corrected};
  report.structure_constants = entry("structure_constants", structure_constant_deviation(n));
  return report;
}

std::string SuNLabel::to_string() const {
  switch (kind) {
    case Kind::cosine:
      return fmt::format("cos({},{};{},{};{:+d})", index.m1, index.m2, partner.m1, partner.m2, partner_sign);
    case Kind::sine:
      return fmt::format("sin({},{};{},{};{:+d})", index.m1, index.m2, partner.m1, partner.m2, partner_sign);
    case Kind::single:
      break;
  }
  return fmt::format("single({},{};{:+d})", index.m1, index.m2, partner_sign);
}

int stacked_rank(const std::vector<Matrix>& matrices, double threshold) {
  if (matrices.empty()) return 0;
  const auto entries = matrices.front().size();
  Eigen::MatrixXd stack(2 * entries, static_cast<Eigen::Index>(matrices.size()));
  for (std::size_t k = 0; k < matrices.size(); ++k) {
    const auto col = static_cast<Eigen::Index>(k);
    for (Eigen::Index i = 0; i < entries; ++i) {
      stack(i, col) = matrices[k](i).real();
      stack(entries + i, col) = matrices[k](i).imag();
    }
  }
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(stack);
  int rank = 0;
  for (Eigen::Index i = 0; i < svd.singularValues().size(); ++i) {
    if (svd.singularValues()(i) > threshold) ++rank;
  }
  return rank;
}

std::vector<SuNBasisElement> su_n_basis(int n) {
  require_dimension(n);
  const complex half_over_i{0.0, -0.5};
  std::vector<SuNBasisElement> out;
  for (const auto& mu : fundamental_window(n)) {
    const auto red = reduce_to_window(n, -mu);
    const Matrix l = basis_matrix(n, mu).entries;
    const double s = red.sign;
    if (red.mu == mu) {
      SuNLabel label{SuNLabel::Kind::single, mu, mu, red.sign};
      out.push_back({n, label, red.sign > 0 ? l : Matrix(l * complex{0.0, -1.0})});
    } else if (mu < red.mu) {
      const Matrix lp = basis_matrix(n, red.mu).entries;
      out.push_back({n, {SuNLabel::Kind::cosine, mu, red.mu, red.sign}, 0.5 * (l + s * lp)});
      out.push_back({n, {SuNLabel::Kind::sine, mu, red.mu, red.sign}, half_over_i * (l - s * lp)});
    }
  }
  std::vector<Matrix> mats;
  for (const auto& e : out) {
    if (max_entry(e.entries + Matrix(e.entries.adjoint())) > 1e-13) {
      throw NumericalError(fmt::format("su(N) element {} is not anti-hermitian", e.label.to_string()));
    }
    mats.push_back(e.entries);
  }
  const int expected = n * n - 1;
  if (static_cast<int>(out.size()) != expected || stacked_rank(mats) != expected) {
    throw NumericalError("su(N) basis construction is rank deficient");
  }
  return out;
}

}  // namespace starsdym
