#include <doctest.h>

#include <numbers>

#include "../support.hpp"
#include "starsdym/errors.hpp"
#include "starsdym/projection.hpp"
#include "starsdym/torus_fft.hpp"

using namespace starsdym;
using starsdym::testing::max_entry_difference;
using starsdym::testing::random_field;

namespace {
const complex kI{0.0, 1.0};
}

TEST_CASE("chi_project of single modes is L_m, and zero on the kernel") {
  for (int n = 2; n <= 5; ++n) {
    for (int m1 = -2 * n; m1 <= 2 * n; ++m1) {
      for (int m2 = -2 * n; m2 <= 2 * n; ++m2) {
        const Matrix image = chi_project(FourierField::mode({m1, m2}), n).matrix;
        if (m1 % n == 0 && m2 % n == 0) {
          CHECK(image.cwiseAbs().maxCoeff() == 0.0);
        } else {
          CHECK(max_entry_difference(image, basis_matrix(n, {m1, m2}).entries) <= 1e-12);
        }
      }
    }
  }
}

TEST_CASE("chi_project of trigonometric fields") {
  for (int n = 2; n <= 6; ++n) {
    FourierField cos_pq, sin_p;
    cos_pq.set({1, 1}, 0.5);
    cos_pq.set({-1, -1}, 0.5);
    sin_p.set({1, 0}, -0.5 * kI);
    sin_p.set({-1, 0}, 0.5 * kI);
    const Matrix expected_cos = 0.5 * (basis_matrix(n, {1, 1}).entries +
                                       (n % 2 == 0 ? 1.0 : -1.0) * basis_matrix(n, {n - 1, n - 1}).entries);
    const Matrix expected_sin =
        (1.0 / (2.0 * kI)) * (basis_matrix(n, {1, 0}).entries + basis_matrix(n, {n - 1, 0}).entries);
    CHECK(max_entry_difference(chi_project(cos_pq, n).matrix, expected_cos) <= 1e-14);
    CHECK(max_entry_difference(chi_project(sin_p, n).matrix, expected_sin) <= 1e-14);
    CHECK(chi_project(FourierField::mode({0, 0}, 3.0), n).matrix.cwiseAbs().maxCoeff() == 0.0);
  }
  CHECK_THROWS_AS(chi_project(FourierField{}, 1), ValidationError);
}

TEST_CASE("chi_project is a homomorphism at hbar = 2 pi / N") {
  PortableRng rng(31);
  for (int n = 2; n <= 7; ++n) {
    for (int trial = 0; trial < 20; ++trial) {
      const auto f = random_field(rng, 4, true);
      const auto g = random_field(rng, 4, true);
      const Matrix a = chi_project(f, n).matrix, b = chi_project(g, n).matrix;
      const Matrix image = chi_project(moyal_bracket(f, g, matrix_hbar(n)), n).matrix;
      CHECK(max_entry_difference(image, Matrix(a * b - b * a)) <= 1e-10);
      CHECK(std::abs(a.trace()) <= 1e-12);
    }
  }
}

TEST_CASE("chi_project is linear") {
  PortableRng rng(37);
  const auto f = random_field(rng, 5, false);
  const auto g = random_field(rng, 5, false);
  const complex a{0.7, -0.2}, b{-1.3, 0.4};
  const Matrix lhs = chi_project(a * f + b * g, 4).matrix;
  const Matrix rhs = a * chi_project(f, 4).matrix + b * chi_project(g, 4).matrix;
  CHECK(max_entry_difference(lhs, rhs) <= 1e-14);
}

TEST_CASE("gridded projection") {
  const SpacetimeGrid grid({UniformAxis::from_range(0, 1, 0.5), UniformAxis::from_range(0, 1, 0.5)});
  GriddedFourierField field{grid, {}, matrix_hbar(3)};
  for (std::size_t k = 0; k < grid.size(); ++k) {
    const auto x = grid.coordinates(k);
    field.values.push_back(FourierField::mode({1, 0}, x[0] + 2 * x[1]));
  }
  const auto out = chi_project_gridded(field, 3);
  for (std::size_t k = 0; k < grid.size(); ++k) {
    const auto x = grid.coordinates(k);
    CHECK(max_entry_difference(out.values[k], (x[0] + 2 * x[1]) * basis_matrix(3, {1, 0}).entries) <= 1e-15);
  }
  field.hbar = 1.0;
  CHECK_THROWS_AS(chi_project_gridded(field, 3), ValidationError);
}
