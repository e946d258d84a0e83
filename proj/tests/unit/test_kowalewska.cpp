#include <doctest.h>

#include <cmath>
#include <numbers>

#include "starsdym/errors.hpp"
#include "starsdym/example_solution.hpp"
#include "starsdym/kowalewska.hpp"
#include "starsdym/torus_fft.hpp"

using namespace starsdym;

namespace {

constexpr double kPi = std::numbers::pi;

FourierField project(const std::function<double(double, double)>& fn) {
  return fft_project(sample_on_torus([&](double p, double q) { return complex{fn(p, q)}; }, 64, 64), 16);
}

// Coefficient-wise max over all w-powers, with the oracle in the w^0 slot.
double order_deviation(const PolyField& order, const FourierField& oracle) {
  double d = 0.0;
  for (std::size_t j = 0; j < order.terms.size(); ++j) {
    d = std::max(d, max_abs_difference(order.terms[j], j == 0 ? oracle : FourierField{}));
  }
  if (order.terms.empty()) d = max_abs_difference(FourierField{}, oracle);
  return d;
}

}  // namespace

TEST_CASE("Cauchy data are kept as orders 0 and 1") {
  const auto series = kowalewska_series(example_cauchy0(), example_cauchy1(), 0.5, 4);
  CHECK(series.truncation() == 4);
  CHECK(max_abs_difference(series.orders[0].evaluate(0.3), example_cauchy0().evaluate(0.3)) == 0.0);
  CHECK(max_abs_difference(series.orders[1].evaluate(0.3), example_cauchy1().evaluate(0.3)) == 0.0);
  CHECK(max_abs_difference(example_cauchy0().evaluate(0.3),
                           project([](double p, double q) { return kPi / 2 * std::cos(p + q) - 0.3 * std::sin(q); })) <=
        1e-14);
  CHECK_THROWS_AS(kowalewska_series(example_cauchy0(), example_cauchy1(), 0.5, 1), ValidationError);
}

TEST_CASE("orders 2..6 follow the nested-bracket closed form") {
  for (double hbar : {2 * kPi / 5, 0.3, 0.0}) {
    const double s = bracket_frequency(hbar);
    const auto series = kowalewska_series(example_cauchy0(), example_cauchy1(), hbar, 6);
    for (int k = 2; k <= 6; ++k) {
      // -s^{k-1} cos^{k-1} q d^{k-2}/dp^{k-2} cos p
      const auto oracle = project([&](double p, double q) {
        return -std::pow(s * std::cos(q), k - 1) * std::cos(p + (k - 2) * kPi / 2);
      });
      CHECK_MESSAGE(order_deviation(series.orders[k], oracle) <= 1e-12, "k = " << k << ", hbar = " << hbar);
    }
  }
}

TEST_CASE("orders up to 8 are the Taylor coefficients of the closed form") {
  const double hbar = 1.7;
  const double s = bracket_frequency(hbar);
  const auto series = kowalewska_series(example_cauchy0(), example_cauchy1(), hbar, 8);
  for (int k = 2; k <= 8; ++k) {
    const auto oracle = project([&](double p, double q) {
      return std::pow(s * std::cos(q), k - 1) * std::cos(p + k * kPi / 2);
    });
    CHECK(order_deviation(series.orders[k], oracle) <= 1e-10);
  }
}

TEST_CASE("truncated series against the closed form") {
  const double hbar = 2 * kPi / 5;
  const auto series = kowalewska_series(example_cauchy0(), example_cauchy1(), hbar, 12);
  for (double w : {-0.7, 0.0, 0.5}) {
    CHECK(max_abs_difference(series.evaluate(w, 0.4), example_modes(hbar, w, 0.4, 64, 16)) <= 1e-8);
  }
}

TEST_CASE("zero Cauchy data give zero orders") {
  const auto series = kowalewska_series(PolyField{}, PolyField{}, 0.7, 6);
  for (const auto& order : series.orders) CHECK(order.is_zero());
}

TEST_CASE("polynomial brackets multiply out in w") {
  PolyField f{{FourierField::mode({1, 0}), FourierField::mode({0, 1})}};  // E_10 + w E_01
  PolyField g{{FourierField::mode({0, 1})}};                              // E_01
  const auto b = poly_bracket(f, g, 0.0);
  CHECK(b.terms.size() >= 1);
  CHECK(b.terms[0].coeff({1, 1}) == complex{1.0});
  CHECK(max_abs_difference(b.evaluate(2.0), poisson_bracket(f.evaluate(2.0), g.evaluate(2.0))) <= 1e-15);
  const auto d = f.derivative_w();
  CHECK(max_abs_difference(d.evaluate(5.0), FourierField::mode({0, 1})) == 0.0);
}
