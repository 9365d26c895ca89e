#pragma once

#include "pgamma/specfun.hpp"

#include <functional>

namespace pgamma {

/// Tolerances and truncation policy for semi-infinite integrals.
struct QuadratureSpec {
    double rel_tol = 1e-13;
    double abs_tol = 1e-15;
    int max_subdivisions = 4000;
    double tail_safety = 1.5; ///< multiplier on the analytic truncation point

    /// Throws ArgumentError when an invariant is broken.
    void validate() const;
};

struct QuadResult {
    double value = 0.0;
    double error_estimate = 0.0;
    int subdivisions_used = 0;
};

using Integrand = std::function<double(double)>;

/// Adaptive Gauss-Kronrod (7/15) integration on [a, b]. Throws
/// ConvergenceError if max_subdivisions is exhausted. The per-panel error
/// never drops below ~10 ulp of the panel's absolute integral, so tolerances
/// under that floor cannot be met.
QuadResult integrate_interval(const Integrand& f, double a, double b, const QuadratureSpec& spec);

/// Integral over [0, inf) of f, where |f(t)| <= envelope * exp(-decay_rate t).
/// The range is cut at T = tail_safety (ln(1/abs_tol) + ln(1+envelope)) / decay_rate
/// and the bound envelope * exp(-decay_rate T) / decay_rate is added to the
/// error estimate.
QuadResult integrate_laplace(const Integrand& f, double decay_rate, const QuadratureSpec& spec,
                             double envelope = 1.0);

/// |int (e^{-at} - e^{-bt})/t dt - ln(b/a)|
double verify_log_identity(double a, double b, const QuadratureSpec& spec = {});

/// |(1/Gamma(omega)) int t^{omega-1} e^{-xt} dt - x^{-omega}|
double verify_power_identity(double omega, double x, const QuadratureSpec& spec = {});

/// ln p - int (1 - e^{-(p+1)t})/(1 - e^{-t}) e^{-xt} dt
double psi_p_via_integral(PIndex p, double x, const QuadratureSpec& spec = {});

/// x int [1 - e^{-(p+1)t}] phi(t) e^{-xt} dt
double theta1_via_integral(PIndex p, double x, const QuadratureSpec& spec = {});

/// int g_p(t) e^{-xt} dt with g_p the Bernstein density.
double theta1_via_density(PIndex p, double x, const QuadratureSpec& spec = {});

/// int t^n g_p(t) e^{-xt} dt, which equals (-1)^n theta_{p,1}^(n)(x).
double cm_moment(PIndex p, int n, double x, const QuadratureSpec& spec = {});

} // namespace pgamma
