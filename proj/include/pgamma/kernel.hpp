#pragma once

#include "pgamma/specfun.hpp"

namespace pgamma {

/// Below this t the kernel and its derivative are evaluated from the
/// Bernoulli-number series instead of the closed form.
inline constexpr double kKernelSeriesSwitch = 0.1;

/// phi(t) = 1/(1 - e^{-t}) - 1/t, increasing from 1/2 (t -> 0) to 1 (t -> inf).
double phi(double t);

/// phi'(t) = 1/t^2 - e^{-t}/(1 - e^{-t})^2.
double phi_prime(double t);

/// Density g_p(t) = [1 - e^{-(p+1)t}] phi'(t) + (p+1) e^{-(p+1)t} phi(t)
/// whose Laplace transform is theta_{p,1}.
double bernstein_density(PIndex p, double t);

namespace detail {
// Both branches are exposed so tests can compare them across the switch.
double phi_series(double t);
double phi_direct(double t);
double phi_prime_series(double t);
double phi_prime_direct(double t);
} // namespace detail

} // namespace pgamma
