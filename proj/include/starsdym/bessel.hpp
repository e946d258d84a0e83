#pragma once

// Bessel functions of the first kind of integer order and their integrals.

#include <vector>

namespace starsdym {

/// J_0(x) .. J_{n_max}(x) by Miller's downward recurrence, normalized with
/// J_0 + 2 sum_k J_{2k} = 1.
std::vector<double> bessel_j_sequence(int n_max, double x);

/// J_n(x) for n >= 0.
double bessel_j(int n, double x);

/// int_0^x J_n(t) dt by adaptive Gauss-Kronrod (absolute tolerance 1e-13).
/// Negative x is allowed.
double bessel_j_integral(int n, double x);

/// Upper bound for |int_0^x J_n| from |J_n(t)| <= (|t|/2)^n / n!.
double bessel_integral_bound(int n, double x);

/// int_0^x sin(t)/t dt
double sine_integral(double x);

}  // namespace starsdym
