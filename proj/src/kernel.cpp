#include "pgamma/kernel.hpp"

#include <cmath>

namespace pgamma {

namespace detail {

double phi_series(double t)
{
    // 1/2 + sum B_{2k} t^{2k-1} / (2k)!
    const double t2 = t * t;
    return 0.5 + t * (1.0 / 12 - t2 * (1.0 / 720 - t2 * (1.0 / 30240 - t2 * (1.0 / 1209600))));
}

double phi_direct(double t)
{
    return -1.0 / std::expm1(-t) - 1.0 / t;
}

double phi_prime_series(double t)
{
    const double t2 = t * t;
    return 1.0 / 12 -
           t2 * (1.0 / 240 - t2 * (1.0 / 6048 - t2 * (1.0 / 172800 - t2 * (1.0 / 5322240))));
}

double phi_prime_direct(double t)
{
    // e^{-t}/(1-e^{-t})^2 = 1/(4 sinh^2(t/2)). The difference cancels by a
    // factor ~5000 at t = 0.05, so it is formed in extended precision.
    const long double tl = t;
    const long double s = 2.0L * std::sinh(0.5L * tl);
    return static_cast<double>(1.0L / (tl * tl) - 1.0L / (s * s));
}

} // namespace detail

double phi(double t)
{
    detail::require_positive(t, "phi");
    return t < kKernelSeriesSwitch ? detail::phi_series(t) : detail::phi_direct(t);
}

double phi_prime(double t)
{
    detail::require_positive(t, "phi_prime");
    return t < kKernelSeriesSwitch ? detail::phi_prime_series(t) : detail::phi_prime_direct(t);
}

double bernstein_density(PIndex p, double t)
{
    detail::require_positive(t, "bernstein_density");
    const double q = p.as_double() + 1.0;
    return -std::expm1(-q * t) * phi_prime(t) + q * std::exp(-q * t) * phi(t);
}

} // namespace pgamma
