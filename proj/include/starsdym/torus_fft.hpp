#pragma once

// Sampling on a uniform torus grid and projection back onto Fourier modes.

#include <functional>
#include <vector>

#include "starsdym/fourier_field.hpp"

namespace starsdym {

/// Samples at p = 2 pi i1 / n1, q = 2 pi i2 / n2, stored row-major in i1.
struct TorusSamples {
  int n1 = 0;
  int n2 = 0;
  std::vector<complex> values;

  TorusSamples() = default;
  TorusSamples(int rows, int cols) : n1(rows), n2(cols), values(static_cast<std::size_t>(rows) * cols) {}

  complex& at(int i1, int i2) { return values[static_cast<std::size_t>(i1) * n2 + i2]; }
  const complex& at(int i1, int i2) const { return values[static_cast<std::size_t>(i1) * n2 + i2]; }
};

TorusSamples sample_on_torus(const std::function<complex(double, double)>& fn, int n1, int n2);
TorusSamples sample_on_torus(const FourierField& f, int n1, int n2);

/// Recovers the modes |m1|, |m2| <= band_limit. Needs n1, n2 >= 2*band_limit + 2;
/// throws ValidationError otherwise. Coefficients below prune_threshold are dropped.
FourierField fft_project(const TorusSamples& samples, int band_limit,
                         double prune_threshold = kDefaultPruneThreshold);

}  // namespace starsdym
