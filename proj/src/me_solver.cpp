#include "starsdym/me_solver.hpp"

#include <array>

#include "starsdym/errors.hpp"
#include "starsdym/example_solution.hpp"

namespace starsdym {

namespace {

enum class BracketKind { moyal, poisson };

FourierField bracket(BracketKind kind, const FourierField& f, const FourierField& g, double hbar) {
  return kind == BracketKind::moyal ? moyal_bracket(f, g, hbar) : poisson_bracket(f, g);
}

void require_grid(const GriddedFourierField& field, std::size_t dim, const char* what) {
  if (field.grid.dimension() != dim) {
    throw ValidationError(std::string(what) + ": grid has the wrong number of axes");
  }
  if (field.values.size() != field.grid.size()) {
    throw ValidationError(std::string(what) + ": field values do not match the grid");
  }
  for (std::size_t d = 0; d < dim; ++d) {
    if (field.grid.axis(d).count < 3) {
      throw ValidationError(std::string(what) + ": grid too small for the finite-difference stencil");
    }
  }
}

/// Finite-difference stencils around one grid point.
class Stencil {
 public:
  Stencil(const GriddedFourierField& field, std::size_t center) : field_(field), center_(center) {}

  FourierField first(std::size_t d) const {
    const double h = field_.grid.axis(d).step;
    const std::array<double, 2> w{0.5 / h, -0.5 / h};
    const std::array<const FourierField*, 2> f{&at(d, 1), &at(d, -1)};
    return linear_combination(w, f);
  }

  FourierField second(std::size_t d) const {
    const double h = field_.grid.axis(d).step;
    const double inv = 1.0 / (h * h);
    const std::array<double, 3> w{inv, -2.0 * inv, inv};
    const std::array<const FourierField*, 3> f{&at(d, 1), &field_.values[center_], &at(d, -1)};
    return linear_combination(w, f);
  }

  FourierField mixed(std::size_t a, std::size_t b) const {
    const double c = 1.0 / (4.0 * field_.grid.axis(a).step * field_.grid.axis(b).step);
    const std::array<double, 4> w{c, -c, -c, c};
    const std::array<const FourierField*, 4> f{&at2(a, 1, b, 1), &at2(a, 1, b, -1), &at2(a, -1, b, 1),
                                               &at2(a, -1, b, -1)};
    return linear_combination(w, f);
  }

 private:
  const FourierField& at(std::size_t d, int s) const {
    return field_.values[offset(center_, d, s)];
  }
  const FourierField& at2(std::size_t a, int sa, std::size_t b, int sb) const {
    return field_.values[offset(offset(center_, a, sa), b, sb)];
  }
  std::size_t offset(std::size_t base, std::size_t d, int s) const {
    const std::size_t st = field_.grid.stride(d);
    return s > 0 ? base + st : base - st;
  }

  const GriddedFourierField& field_;
  std::size_t center_;
};

template <class PointResidual>
ResidualField sweep_interior(const GriddedFourierField& field, PointResidual&& residual) {
  ResidualField out{field.grid.interior(1), {}};
  out.values.reserve(out.grid.size());
  for (std::size_t k = 0; k < out.grid.size(); ++k) {
    auto idx = out.grid.multi_index(k);
    for (auto& i : idx) i += 1;
    const std::size_t center = field.grid.flat_index(idx);
    out.values.push_back(l2_norm(residual(Stencil(field, center), field.grid.coordinates(center))));
  }
  return out;
}

ResidualField reduced_residual(const GriddedFourierField& field, BracketKind kind, const char* what) {
  require_grid(field, 2, what);
  if (kind == BracketKind::moyal && !(field.hbar > 0.0)) {
    throw ValidationError(std::string(what) + ": hbar must be positive");
  }
  return sweep_interior(field, [&](const Stencil& s, const std::vector<double>&) {
    FourierField r = s.second(0);
    r += s.second(1);
    r += bracket(kind, s.first(0), s.first(1), field.hbar);
    return r;
  });
}

}  // namespace

ResidualField residual_moyal_hp(const GriddedFourierField& field) {
  return reduced_residual(field, BracketKind::moyal, "residual_moyal_hp");
}

ResidualField residual_hp_classical(const GriddedFourierField& field) {
  return reduced_residual(field, BracketKind::poisson, "residual_hp_classical");
}

ResidualField residual_me_flat(const GriddedFourierField& field) {
  require_grid(field, 4, "residual_me_flat");
  if (!(field.hbar > 0.0)) throw ValidationError("residual_me_flat: hbar must be positive");
  return sweep_interior(field, [&](const Stencil& s, const std::vector<double>&) {
    FourierField r = s.mixed(0, 2);
    r += s.mixed(1, 3);
    r += moyal_bracket(s.first(0), s.first(1), field.hbar);
    return r;
  });
}

ResidualField residual_me_kahler(const GriddedFourierField& field, const KahlerBackground& background) {
  require_grid(field, 4, "residual_me_kahler");
  if (!(field.hbar > 0.0)) throw ValidationError("residual_me_kahler: hbar must be positive");
  constexpr std::size_t y = 0, yt = 1, z = 2, zt = 3;
  return sweep_interior(field, [&](const Stencil& s, const std::vector<double>& x) {
    const KahlerPoint point{0.5 * (x[y] + x[yt]), x[z], 0.5 * (x[y] - x[yt]), x[zt]};
    const KahlerMetric inv = background.inverse_metric(point);
    const double g_wtw = inv(0, 0);
    const double g_ztz = inv(1, 1);
    const double g_ztw = inv(1, 0);
    const double g_wtz = inv(0, 1);
    if (std::abs(g_wtw) < 1e-12) {
      throw SingularityError("residual_me_kahler: g^{w~w} vanishes at a grid point");
    }
    const double big_g = background.determinant_factor(point[0], point[1]);

    FourierField r = s.second(y) - s.second(yt);
    FourierField metric_part = complex{g_ztz} * s.mixed(z, zt);
    metric_part += complex{g_ztw} * (s.mixed(y, zt) + s.mixed(yt, zt));
    metric_part += complex{g_wtz} * (s.mixed(z, y) - s.mixed(z, yt));
    r += complex{1.0 / g_wtw} * metric_part;
    r += complex{1.0 / (big_g * g_wtw)} * moyal_bracket(s.first(y) + s.first(yt), s.first(z), field.hbar);
    return r;
  });
}

GriddedFourierField sample_field(const SpacetimeGrid& grid, double hbar, const FieldSampler& sampler) {
  GriddedFourierField out{grid, {}, hbar};
  out.values.reserve(grid.size());
  int band = 0;
  for (std::size_t k = 0; k < grid.size(); ++k) {
    out.values.push_back(sampler(grid.coordinates(k)));
    band = std::max(band, out.values.back().band_limit());
  }
  for (auto& f : out.values) f.set_band_limit(band);
  return out;
}

GriddedFourierField sample_example_solution(const SpacetimeGrid& grid, double hbar, int torus, int band_limit) {
  if (grid.dimension() != 2) throw ValidationError("sample_example_solution: expected a (w, z) grid");
  return sample_field(grid, hbar, [&](const std::vector<double>& x) {
    return example_modes(hbar, x[0], x[1], torus, band_limit);
  });
}

}  // namespace starsdym
