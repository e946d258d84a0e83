#include "starsdym/fourier_field.hpp"

#include <algorithm>
#include <cmath>

#include "starsdym/errors.hpp"

namespace starsdym {

namespace {

int stored_radius(const FourierField& f) {
  int r = 0;
  for (const auto& [m, c] : f.coefficients()) r = std::max(r, mode_radius(m));
  return r;
}

// Dense accumulator over the square |k1|, |k2| <= radius. Summation order is
// fixed by the (lexicographic) iteration order of the inputs.
class DenseAccumulator {
 public:
  explicit DenseAccumulator(int radius)
      : radius_(radius), width_(2 * radius + 1), data_(static_cast<std::size_t>(width_) * width_) {}

  complex& at(ModeVector k) {
    return data_[static_cast<std::size_t>(k.m1 + radius_) * width_ + (k.m2 + radius_)];
  }

  FourierField collect(int band_limit, double prune_threshold) const {
    FourierField out(band_limit);
    for (int i = 0; i < width_; ++i) {
      for (int j = 0; j < width_; ++j) {
        const complex c = data_[static_cast<std::size_t>(i) * width_ + j];
        if (c == complex{} || std::abs(c) < prune_threshold) continue;
        out.set({i - radius_, j - radius_}, c);
      }
    }
    return out;
  }

 private:
  int radius_;
  int width_;
  std::vector<complex> data_;
};

template <class Weight>
void accumulate_pairs(const FourierField& f, const FourierField& g, DenseAccumulator& acc,
                      complex scale, Weight&& weight) {
  for (const auto& [m, fm] : f.coefficients()) {
    for (const auto& [n, gn] : g.coefficients()) {
      const complex w = weight(m, n);
      if (w == complex{}) continue;
      acc.at(m + n) += scale * w * (fm * gn);
    }
  }
}

// 0.5 * (P(f, g) - P(g, f)) for an antisymmetric kernel; equal to P(f, g) in
// exact arithmetic and exactly antisymmetric in floating point.
template <class Weight>
FourierField antisymmetrized(const FourierField& f, const FourierField& g, double prune,
                             Weight&& weight) {
  const int radius = stored_radius(f) + stored_radius(g);
  DenseAccumulator forward(radius);
  DenseAccumulator backward(radius);
  accumulate_pairs(f, g, forward, 1.0, weight);
  accumulate_pairs(g, f, backward, 1.0, weight);
  DenseAccumulator out(radius);
  for (int k1 = -radius; k1 <= radius; ++k1) {
    for (int k2 = -radius; k2 <= radius; ++k2) {
      out.at({k1, k2}) = 0.5 * (forward.at({k1, k2}) - backward.at({k1, k2}));
    }
  }
  return out.collect(f.band_limit() + g.band_limit(), prune);
}

}  // namespace

FourierField FourierField::mode(ModeVector m, complex c) {
  FourierField f(mode_radius(m));
  f.set(m, c);
  return f;
}

complex FourierField::coeff(ModeVector m) const {
  const auto it = coeffs_.find(m);
  return it == coeffs_.end() ? complex{} : it->second;
}

void FourierField::add(ModeVector m, complex c) {
  band_limit_ = std::max(band_limit_, mode_radius(m));
  auto [it, inserted] = coeffs_.try_emplace(m, c);
  if (!inserted) it->second += c;
  if (it->second == complex{}) coeffs_.erase(it);
}

void FourierField::set(ModeVector m, complex c) {
  if (c == complex{}) {
    coeffs_.erase(m);
    return;
  }
  band_limit_ = std::max(band_limit_, mode_radius(m));
  coeffs_[m] = c;
}

void FourierField::set_band_limit(int r) {
  for (const auto& [m, c] : coeffs_) {
    if (mode_radius(m) > r) {
      throw ValidationError("set_band_limit: stored mode exceeds the requested band limit");
    }
  }
  band_limit_ = r;
}

void FourierField::prune(double threshold) {
  std::erase_if(coeffs_, [threshold](const auto& kv) { return std::abs(kv.second) < threshold; });
}

FourierField& FourierField::operator+=(const FourierField& other) {
  for (const auto& [m, c] : other.coeffs_) add(m, c);
  band_limit_ = std::max(band_limit_, other.band_limit_);
  return *this;
}

FourierField& FourierField::operator-=(const FourierField& other) {
  for (const auto& [m, c] : other.coeffs_) add(m, -c);
  band_limit_ = std::max(band_limit_, other.band_limit_);
  return *this;
}

FourierField& FourierField::operator*=(complex s) {
  if (s == complex{}) {
    coeffs_.clear();
    return *this;
  }
  for (auto& [m, c] : coeffs_) c *= s;
  return *this;
}

FourierField star_product(const FourierField& f, const FourierField& g, double hbar,
                          const AlgebraOptions& opts) {
  const int radius = stored_radius(f) + stored_radius(g);
  DenseAccumulator acc(radius);
  accumulate_pairs(f, g, acc, 1.0, [hbar](ModeVector m, ModeVector n) {
    const double phase = 0.5 * hbar * static_cast<double>(cross(m, n));
    return std::polar(1.0, phase);
  });
  return acc.collect(f.band_limit() + g.band_limit(), opts.prune_threshold);
}

FourierField moyal_bracket(const FourierField& f, const FourierField& g, double hbar,
                           const AlgebraOptions& opts) {
  if (!(hbar > 0.0)) throw ValidationError("moyal_bracket: hbar must be positive");
  const double scale = 2.0 / hbar;
  return antisymmetrized(f, g, opts.prune_threshold, [hbar, scale](ModeVector m, ModeVector n) {
    const long mxn = cross(m, n);
    if (mxn == 0) return complex{};
    return complex{scale * std::sin(0.5 * hbar * static_cast<double>(mxn))};
  });
}

FourierField poisson_bracket(const FourierField& f, const FourierField& g,
                             const AlgebraOptions& opts) {
  return antisymmetrized(f, g, opts.prune_threshold, [](ModeVector m, ModeVector n) {
    return complex{static_cast<double>(cross(m, n))};
  });
}

FourierField derivative_p(const FourierField& f) {
  FourierField out(f.band_limit());
  for (const auto& [m, c] : f.coefficients()) out.set(m, complex{0.0, double(m.m1)} * c);
  return out;
}

FourierField derivative_q(const FourierField& f) {
  FourierField out(f.band_limit());
  for (const auto& [m, c] : f.coefficients()) out.set(m, complex{0.0, double(m.m2)} * c);
  return out;
}

complex eval_on_torus(const FourierField& f, double p, double q) {
  complex sum{};
  for (const auto& [m, c] : f.coefficients()) {
    sum += c * std::polar(1.0, m.m1 * p + m.m2 * q);
  }
  return sum;
}

bool is_real(const FourierField& f, double tol) {
  for (const auto& [m, c] : f.coefficients()) {
    if (std::abs(f.coeff(-m) - std::conj(c)) > tol) return false;
  }
  return true;
}

double max_abs_difference(const FourierField& f, const FourierField& g) {
  double d = 0.0;
  for (const auto& [m, c] : f.coefficients()) d = std::max(d, std::abs(c - g.coeff(m)));
  for (const auto& [m, c] : g.coefficients()) {
    if (!f.coefficients().contains(m)) d = std::max(d, std::abs(c));
  }
  return d;
}

double l2_norm(const FourierField& f) {
  double s = 0.0;
  for (const auto& [m, c] : f.coefficients()) s += std::norm(c);
  return std::sqrt(s);
}

FourierField linear_combination(std::span<const double> weights,
                                std::span<const FourierField* const> fields) {
  if (weights.size() != fields.size()) {
    throw ValidationError("linear_combination: weights and fields differ in length");
  }
  int radius = 0;
  int band = 0;
  for (const FourierField* f : fields) {
    radius = std::max(radius, stored_radius(*f));
    band = std::max(band, f->band_limit());
  }
  DenseAccumulator acc(radius);
  for (std::size_t k = 0; k < fields.size(); ++k) {
    if (weights[k] == 0.0) continue;
    for (const auto& [m, c] : fields[k]->coefficients()) acc.at(m) += weights[k] * c;
  }
  return acc.collect(band, 0.0);
}

}  // namespace starsdym
