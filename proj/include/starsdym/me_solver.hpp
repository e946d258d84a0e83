#pragma once

// Residuals of the master equation and its symmetry reductions for
// torus-valued fields sampled on spacetime grids. Spacetime derivatives are
// second-order central differences of the Fourier coefficients; brackets are
// exact in mode space. The residual at a grid point is the torus RMS
// (coefficient l2 norm) of the residual field.

#include <functional>
#include <vector>

#include "starsdym/grid.hpp"
#include "starsdym/kahler.hpp"

namespace starsdym {

/// d_w^2 Theta + d_z^2 Theta + {d_w Theta, d_z Theta}_Moyal over a (w, z) grid.
ResidualField residual_moyal_hp(const GriddedFourierField& field);

/// The same with the Poisson bracket; field.hbar is ignored.
ResidualField residual_hp_classical(const GriddedFourierField& field);

/// d_w d_w~ Theta + d_z d_z~ Theta + {d_w Theta, d_z Theta} over a (w, z, w~, z~) grid.
ResidualField residual_me_flat(const GriddedFourierField& field);

/// The master equation on a Kahler background in coordinates (y, y~, z, z~)
/// with w = (y + y~)/2, w~ = (y - y~)/2, divided through by g^{w~w}:
///   d_y^2 T - d_y~^2 T + (g^{z~z} d_z d_z~ T + g^{z~w} (d_y + d_y~) d_z~ T
///                          + g^{w~z} d_z (d_y - d_y~) T) / g^{w~w}
///   + {d_y T + d_y~ T, d_z T} / (G g^{w~w}).
ResidualField residual_me_kahler(const GriddedFourierField& field, const KahlerBackground& background);

using FieldSampler = std::function<FourierField(const std::vector<double>& coordinates)>;

/// Evaluates `sampler` at every grid point.
GriddedFourierField sample_field(const SpacetimeGrid& grid, double hbar, const FieldSampler& sampler);

/// The example solution on a (w, z) grid, projected from an n x n torus
/// sampling at the given band limit.
GriddedFourierField sample_example_solution(const SpacetimeGrid& grid, double hbar, int torus, int band_limit);

}  // namespace starsdym
