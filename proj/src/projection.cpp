#include "starsdym/projection.hpp"

#include <cmath>

#include <fmt/format.h>

#include "starsdym/errors.hpp"

namespace starsdym {

FoldedMatrixField chi_project(const FourierField& f, int n) {
  if (n < 2) throw ValidationError(fmt::format("chi_project: N must be at least 2, got {}", n));
  const auto& basis = window_basis(n);
  Matrix out = Matrix::Zero(n, n);
  for (const auto& [m, c] : f.coefficients()) {
    const auto red = reduce_to_window(n, m);
    if (red.in_kernel()) continue;
    // Window position of mu in lexicographic order without (0,0).
    const auto slot = static_cast<std::size_t>(red.mu.m1 * n + red.mu.m2 - 1);
    out += (static_cast<double>(red.sign) * c) * basis[slot];
  }
  return {n, std::move(out), f.band_limit()};
}

AlgebraField chi_project_gridded(const GriddedFourierField& field, int n) {
  if (n < 2) throw ValidationError(fmt::format("chi_project_gridded: N must be at least 2, got {}", n));
  if (std::abs(field.hbar - matrix_hbar(n)) > 1e-14) {
    throw ValidationError(fmt::format("chi_project_gridded: field has hbar = {:.17g}, expected 2 pi / {} = {:.17g}",
                                      field.hbar, n, matrix_hbar(n)));
  }
  AlgebraField out{field.grid, n, {}};
  out.values.reserve(field.values.size());
  for (const auto& f : field.values) out.values.push_back(chi_project(f, n).matrix);
  return out;
}

}  // namespace starsdym
