#pragma once

// Band-limited functions on the 2-torus, stored as sparse Fourier
// coefficients over the basis E_m = exp(i (m1 p + m2 q)), together with the
// exact Moyal star product, Moyal bracket and Poisson bracket in mode space.

#include <complex>
#include <compare>
#include <map>
#include <span>
#include <utility>
#include <vector>

namespace starsdym {

using complex = std::complex<double>;

struct ModeVector {
  int m1 = 0;
  int m2 = 0;

  friend constexpr auto operator<=>(const ModeVector&, const ModeVector&) = default;
  friend constexpr ModeVector operator+(ModeVector a, ModeVector b) { return {a.m1 + b.m1, a.m2 + b.m2}; }
  friend constexpr ModeVector operator-(ModeVector a, ModeVector b) { return {a.m1 - b.m1, a.m2 - b.m2}; }
  friend constexpr ModeVector operator-(ModeVector a) { return {-a.m1, -a.m2}; }
  friend constexpr ModeVector operator*(int k, ModeVector a) { return {k * a.m1, k * a.m2}; }
};

/// m x n = m1 n2 - m2 n1
constexpr long cross(ModeVector m, ModeVector n) {
  return static_cast<long>(m.m1) * n.m2 - static_cast<long>(m.m2) * n.m1;
}

/// max(|m1|, |m2|)
constexpr int mode_radius(ModeVector m) {
  const int a = m.m1 < 0 ? -m.m1 : m.m1;
  const int b = m.m2 < 0 ? -m.m2 : m.m2;
  return a > b ? a : b;
}

/// Coefficients with magnitude below this are dropped after products and brackets.
inline constexpr double kDefaultPruneThreshold = 1e-15;

struct AlgebraOptions {
  double prune_threshold = kDefaultPruneThreshold;
};

class FourierField {
 public:
  using Coefficients = std::map<ModeVector, complex>;

  FourierField() = default;
  explicit FourierField(int band_limit) : band_limit_(band_limit) {}

  /// c * E_m
  static FourierField mode(ModeVector m, complex c = 1.0);

  /// Coefficient of E_m; zero when the mode is not stored.
  complex coeff(ModeVector m) const;

  /// Adds c to the coefficient of E_m, growing the band limit if needed.
  void add(ModeVector m, complex c);

  /// Overwrites the coefficient of E_m (erases it when c == 0).
  void set(ModeVector m, complex c);

  /// Every stored mode satisfies mode_radius(m) <= band_limit().
  int band_limit() const { return band_limit_; }
  void set_band_limit(int r);

  const Coefficients& coefficients() const { return coeffs_; }
  bool empty() const { return coeffs_.empty(); }
  std::size_t size() const { return coeffs_.size(); }

  /// Drops every coefficient with |c| < threshold.
  void prune(double threshold = kDefaultPruneThreshold);

  FourierField& operator+=(const FourierField& other);
  FourierField& operator-=(const FourierField& other);
  FourierField& operator*=(complex s);

  friend FourierField operator+(FourierField a, const FourierField& b) { return a += b; }
  friend FourierField operator-(FourierField a, const FourierField& b) { return a -= b; }
  friend FourierField operator*(complex s, FourierField a) { return a *= s; }
  friend FourierField operator*(FourierField a, complex s) { return a *= s; }

 private:
  Coefficients coeffs_;
  int band_limit_ = 0;
};

/// f * g with E_m * E_n = exp(i hbar/2 m x n) E_{m+n}.
FourierField star_product(const FourierField& f, const FourierField& g, double hbar,
                          const AlgebraOptions& opts = {});

/// (f*g - g*f)/(i hbar), computed exactly as (2/hbar) sin(hbar/2 m x n) f_m g_n on E_{m+n}.
/// Antisymmetric bit for bit: moyal_bracket(g, f) == -moyal_bracket(f, g).
FourierField moyal_bracket(const FourierField& f, const FourierField& g, double hbar,
                           const AlgebraOptions& opts = {});

/// The hbar -> 0 limit of moyal_bracket: (m x n) f_m g_n on E_{m+n}.
/// Pointwise this is  d_q f d_p g - d_p f d_q g  with p = x^1, q = x^2.
FourierField poisson_bracket(const FourierField& f, const FourierField& g,
                             const AlgebraOptions& opts = {});

/// Torus derivatives: multiply E_m by i m1 (d/dp) or i m2 (d/dq).
FourierField derivative_p(const FourierField& f);
FourierField derivative_q(const FourierField& f);

/// sum_m f_m exp(i (m1 p + m2 q))
complex eval_on_torus(const FourierField& f, double p, double q);

/// True when coeff(-m) == conj(coeff(m)) for every stored mode, to tol.
bool is_real(const FourierField& f, double tol = 0.0);

/// max_m |f_m - g_m| over the union of stored modes.
double max_abs_difference(const FourierField& f, const FourierField& g);

/// sqrt(sum_m |f_m|^2), i.e. the RMS of f over the torus.
double l2_norm(const FourierField& f);

/// Coefficient-wise sum_k weights[k] * fields[k].
FourierField linear_combination(std::span<const double> weights,
                                std::span<const FourierField* const> fields);

}  // namespace starsdym
