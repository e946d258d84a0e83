#pragma once

// The trigonometric basis L_m of sl(N, C) built from clock and shift matrices.

#include <Eigen/Dense>

#include <string>
#include <vector>

#include "starsdym/fourier_field.hpp"

namespace starsdym {

using Matrix = Eigen::MatrixXcd;

/// exp(i pi / N) * diag(1, w, ..., w^{N-1}) with w = exp(2 pi i / N).
Matrix clock_matrix(int n);

/// Cyclic shift T[i][i+1] = 1 with T[N-1][0] = -1.
Matrix shift_matrix(int n);

/// u^k for a unitary u; negative powers use the adjoint.
Matrix unitary_power(const Matrix& u, int k);

struct BasisMatrix {
  int n_dim = 0;
  ModeVector index;
  Matrix entries;
};

/// (iN/2pi) exp(i pi m1 m2 / N) S^{m1} T^{m2} for any integer index.
BasisMatrix basis_matrix(int n, ModeVector m);

/// Decomposition m = mu + N r with 0 <= mu1, mu2 <= N-1 (Euclidean remainder).
struct WindowReduction {
  ModeVector mu;
  ModeVector shift;
  int sign = 1;  // L_m = sign * L_mu
  bool in_kernel() const { return mu.m1 == 0 && mu.m2 == 0; }
};

WindowReduction reduce_to_window(int n, ModeVector m);

/// (-1)^{(mu1+1) r2 + (mu2+1) r1 + N r1 r2}
int periodicity_sign(int n, ModeVector mu, ModeVector r);

/// The window 0 <= mu1, mu2 <= N-1 without (0,0), in lexicographic order.
std::vector<ModeVector> fundamental_window(int n);

/// L_mu for every window index, in fundamental_window order. Cached per N.
const std::vector<Matrix>& window_basis(int n);

struct PropertyCheck {
  std::string name;
  bool passed = false;
  double max_deviation = 0.0;
};

struct BasisPropertyReport {
  int n = 0;
  /// periodicity, traceless, trace_of_kernel, product_rule, adjoint_inverse, determinant
  std::vector<PropertyCheck> properties;
  /// Determinant against (-1)^{m1 m2 + N(m1+m2)} (iN/2pi)^N.
  PropertyCheck determinant_corrected;
  /// [L_mu, L_nu] = (N/pi) sin(pi/N mu x nu) L_{mu+nu} over the window.
  PropertyCheck structure_constants;

  bool all_properties_passed() const;
};

/// Entrywise tolerance for properties 1-5 and the structure constants,
/// relative tolerance for the determinant.
BasisPropertyReport verify_basis_properties(int n, double entry_tol = 1e-11, double det_rel_tol = 1e-10);

/// Max entrywise deviation of [L_mu, L_nu] from the sine structure constants.
double structure_constant_deviation(int n);

struct SuNLabel {
  enum class Kind { cosine, sine, single };
  Kind kind = Kind::single;
  ModeVector index;    // mu
  ModeVector partner;  // window representative of -mu
  int partner_sign = 1;

  std::string to_string() const;
};

/// Anti-hermitian combinations of L_mu and L_{-mu}:
///   cosine: (L_mu + s L_mu') / 2,  sine: (L_mu - s L_mu') / 2i
/// with L_{-mu} = s L_mu'. Self-paired indices give L_mu or L_mu / i.
struct SuNBasisElement {
  int n_dim = 0;
  SuNLabel label;
  Matrix entries;
};

/// N^2 - 1 elements; throws NumericalError if they fail to be anti-hermitian
/// or linearly independent.
std::vector<SuNBasisElement> su_n_basis(int n);

/// Numerical rank of the stacked real representation (singular values above threshold).
int stacked_rank(const std::vector<Matrix>& matrices, double threshold = 1e-8);

}  // namespace starsdym
