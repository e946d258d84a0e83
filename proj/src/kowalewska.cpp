#include "starsdym/kowalewska.hpp"

#include <algorithm>
#include <numbers>

#include "starsdym/errors.hpp"

namespace starsdym {

FourierField PolyField::evaluate(double w) const {
  FourierField out;
  double power = 1.0;
  for (const auto& t : terms) {
    out += complex{power} * t;
    power *= w;
  }
  return out;
}

PolyField PolyField::derivative_w() const {
  PolyField out;
  for (std::size_t j = 1; j < terms.size(); ++j) out.terms.push_back(complex{static_cast<double>(j)} * terms[j]);
  return out;
}

bool PolyField::is_zero() const {
  return std::all_of(terms.begin(), terms.end(), [](const FourierField& f) { return f.empty(); });
}

int PolyField::band_limit() const {
  int r = 0;
  for (const auto& t : terms) r = std::max(r, t.band_limit());
  return r;
}

PolyField operator+(const PolyField& a, const PolyField& b) {
  PolyField out = a;
  if (out.terms.size() < b.terms.size()) out.terms.resize(b.terms.size());
  for (std::size_t j = 0; j < b.terms.size(); ++j) out.terms[j] += b.terms[j];
  return out;
}

PolyField operator*(complex s, const PolyField& a) {
  PolyField out = a;
  for (auto& t : out.terms) t *= s;
  return out;
}

PolyField poly_bracket(const PolyField& f, const PolyField& g, double hbar) {
  PolyField out;
  if (f.terms.empty() || g.terms.empty()) return out;
  out.terms.resize(f.terms.size() + g.terms.size() - 1);
  for (std::size_t i = 0; i < f.terms.size(); ++i) {
    if (f.terms[i].empty()) continue;
    for (std::size_t j = 0; j < g.terms.size(); ++j) {
      if (g.terms[j].empty()) continue;
      out.terms[i + j] += hbar > 0.0 ? moyal_bracket(f.terms[i], g.terms[j], hbar)
                                     : poisson_bracket(f.terms[i], g.terms[j]);
    }
  }
  return out;
}

FourierField SeriesSolution::evaluate(double w, double z) const {
  FourierField out;
  double factor = 1.0;  // z^k / k!
  for (std::size_t k = 0; k < orders.size(); ++k) {
    if (k > 0) factor *= z / static_cast<double>(k);
    out += complex{factor} * orders[k].evaluate(w);
  }
  return out;
}

SeriesSolution kowalewska_series(const PolyField& cauchy0, const PolyField& cauchy1, double hbar, int K) {
  if (K < 2) throw ValidationError("kowalewska_series: truncation order must be at least 2");
  if (hbar < 0.0) throw ValidationError("kowalewska_series: hbar must be non-negative");
  SeriesSolution sol{cauchy0, cauchy1, {cauchy0, cauchy1}, hbar};
  std::vector<PolyField> dw{cauchy0.derivative_w(), cauchy1.derivative_w()};
  for (int k = 0; k + 2 <= K; ++k) {
    PolyField next = complex{-1.0} * dw[static_cast<std::size_t>(k)].derivative_w();
    double binom = 1.0;  // C(k, j)
    for (int j = 0; j <= k; ++j) {
      const auto bracket = poly_bracket(dw[static_cast<std::size_t>(j)],
                                        sol.orders[static_cast<std::size_t>(k - j + 1)], hbar);
      next = next + complex{-binom} * bracket;
      binom = binom * (k - j) / (j + 1);
    }
    for (auto& t : next.terms) t.prune();
    dw.push_back(next.derivative_w());
    sol.orders.push_back(std::move(next));
  }
  return sol;
}

PolyField example_cauchy0() {
  constexpr double quarter_pi = std::numbers::pi / 4.0;
  FourierField constant;
  constant.add({1, 1}, quarter_pi);
  constant.add({-1, -1}, quarter_pi);
  // -sin q = -(E_(0,1) - E_(0,-1)) / 2i
  FourierField linear;
  linear.add({0, 1}, complex{0.0, 0.5});
  linear.add({0, -1}, complex{0.0, -0.5});
  return PolyField{{constant, linear}};
}

PolyField example_cauchy1() {
  // -sin p
  FourierField f;
  f.add({1, 0}, complex{0.0, 0.5});
  f.add({-1, 0}, complex{0.0, -0.5});
  return PolyField{{f}};
}

}  // namespace starsdym
