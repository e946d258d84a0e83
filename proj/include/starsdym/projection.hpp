#pragma once

// Folding torus Fourier series onto sl(N, C):
//   E_{mu + N r} -> (-1)^{(mu1+1) r2 + (mu2+1) r1 + N r1 r2} L_mu,   E_{N r} -> 0.
// With the Moyal bracket at hbar = 2 pi / N this is a Lie algebra homomorphism.

#include <numbers>
#include <vector>

#include "starsdym/grid.hpp"
#include "starsdym/sine_basis.hpp"

namespace starsdym {

struct FoldedMatrixField {
  int n_dim = 0;
  Matrix matrix;
  int source_band_limit = 0;
};

/// A matrix-valued field over a spacetime grid.
struct AlgebraField {
  SpacetimeGrid grid;
  int n_dim = 0;
  std::vector<Matrix> values;
};

/// hbar = 2 pi / N
inline double matrix_hbar(int n) { return 2.0 * std::numbers::pi / n; }

FoldedMatrixField chi_project(const FourierField& f, int n);

/// Pointwise chi_project. Requires |F.hbar - 2 pi / N| <= 1e-14.
AlgebraField chi_project_gridded(const GriddedFourierField& field, int n);

}  // namespace starsdym
