#include "starsdym/torus_fft.hpp"

#include <fftw3.h>

#include <cmath>
#include <memory>
#include <numbers>

#include "starsdym/errors.hpp"

namespace starsdym {

namespace {

struct FftwFree {
  void operator()(fftw_complex* p) const { fftw_free(p); }
};
struct PlanDestroy {
  void operator()(fftw_plan_s* p) const { fftw_destroy_plan(p); }
};

using FftwBuffer = std::unique_ptr<fftw_complex[], FftwFree>;
using FftwPlan = std::unique_ptr<fftw_plan_s, PlanDestroy>;

}  // namespace

TorusSamples sample_on_torus(const std::function<complex(double, double)>& fn, int n1, int n2) {
  if (n1 < 1 || n2 < 1) throw ValidationError("sample_on_torus: grid must be nonempty");
  TorusSamples s(n1, n2);
  const double dp = 2.0 * std::numbers::pi / n1;
  const double dq = 2.0 * std::numbers::pi / n2;
  for (int i1 = 0; i1 < n1; ++i1) {
    for (int i2 = 0; i2 < n2; ++i2) s.at(i1, i2) = fn(i1 * dp, i2 * dq);
  }
  return s;
}

TorusSamples sample_on_torus(const FourierField& f, int n1, int n2) {
  return sample_on_torus([&f](double p, double q) { return eval_on_torus(f, p, q); }, n1, n2);
}

FourierField fft_project(const TorusSamples& samples, int band_limit, double prune_threshold) {
  if (band_limit < 0) throw ValidationError("fft_project: band_limit must be non-negative");
  const int need = 2 * band_limit + 2;
  if (samples.n1 < need || samples.n2 < need) {
    throw ValidationError("fft_project: torus grid too small for the requested band limit");
  }
  const int n1 = samples.n1;
  const int n2 = samples.n2;
  const auto total = static_cast<std::size_t>(n1) * n2;
  if (samples.values.size() != total) throw ValidationError("fft_project: sample count mismatch");

  FftwBuffer in(fftw_alloc_complex(total));
  FftwBuffer out(fftw_alloc_complex(total));
  FftwPlan plan(fftw_plan_dft_2d(n1, n2, in.get(), out.get(), FFTW_FORWARD, FFTW_ESTIMATE));
  for (std::size_t k = 0; k < total; ++k) {
    in[k][0] = samples.values[k].real();
    in[k][1] = samples.values[k].imag();
  }
  fftw_execute(plan.get());

  const double norm = 1.0 / static_cast<double>(total);
  FourierField f(band_limit);
  for (int m1 = -band_limit; m1 <= band_limit; ++m1) {
    const int r = (m1 % n1 + n1) % n1;
    for (int m2 = -band_limit; m2 <= band_limit; ++m2) {
      const int c = (m2 % n2 + n2) % n2;
      const auto k = static_cast<std::size_t>(r) * n2 + c;
      const complex v{out[k][0] * norm, out[k][1] * norm};
      if (std::abs(v) >= prune_threshold && v != complex{}) f.set({m1, m2}, v);
    }
  }
  return f;
}

}  // namespace starsdym
