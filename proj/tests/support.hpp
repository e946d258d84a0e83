#pragma once

#include <cmath>
#include <complex>
#include <numbers>

#include "starsdym/fourier_field.hpp"
#include "starsdym/random.hpp"

namespace starsdym::testing {

/// Random field with every mode of radius <= band_limit populated, scaled to
/// unit RMS. Real fields pair each mode with its conjugate.
inline FourierField random_field(PortableRng& rng, int band_limit, bool real) {
  FourierField f(band_limit);
  for (int m1 = -band_limit; m1 <= band_limit; ++m1) {
    for (int m2 = -band_limit; m2 <= band_limit; ++m2) {
      const ModeVector m{m1, m2};
      if (real && m < -m) continue;
      const complex c{rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0)};
      if (real) {
        if (m == -m) {
          f.set(m, c.real());
        } else {
          f.set(m, c);
          f.set(-m, std::conj(c));
        }
      } else {
        f.set(m, c);
      }
    }
  }
  return (1.0 / l2_norm(f)) * f;
}

/// Entrywise max |a - b|
template <class A, class B>
double max_entry_difference(const A& a, const B& b) {
  return (a - b).cwiseAbs().maxCoeff();
}

}  // namespace starsdym::testing
