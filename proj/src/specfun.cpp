#include "pgamma/specfun.hpp"

#include "pgamma/errors.hpp"
#include "pgamma/summation.hpp"

#include <cmath>
#include <string>

namespace pgamma {

PIndex::PIndex(std::int64_t p) : p_(p)
{
    if (p < 1)
        throw DomainError("p must be a positive integer, got " + std::to_string(p));
}

namespace detail {

void require_positive(double x, const char* what)
{
    if (!std::isfinite(x) || !(x > 0.0))
        throw DomainError(std::string(what) + " requires a finite positive argument, got " +
                          std::to_string(x));
}

void require_order(int n, int min_order, const char* what)
{
    if (n < min_order || n > kMaxDerivOrder)
        throw OrderError(std::string(what) + ": derivative order " + std::to_string(n) +
                         " outside [" + std::to_string(min_order) + ", " +
                         std::to_string(kMaxDerivOrder) + "]");
}

double factorial(int n)
{
    double f = 1.0;
    for (int k = 2; k <= n; ++k)
        f *= k;
    return f;
}

} // namespace detail

double ln_gamma_p(PIndex p, double x)
{
    detail::require_positive(x, "ln_gamma_p");
    // ln p! - sum_{k=1}^{p} ln(x+k) = -sum_{k=1}^{p} ln(1 + x/k): no large
    // cancelling terms, so no separate ln p! is needed.
    CompensatedSum s;
    for (std::int64_t k = p.value(); k >= 1; --k)
        s += std::log1p(x / static_cast<double>(k));
    return x * std::log(p.as_double()) - std::log(x) - s.value();
}

double gamma_p(PIndex p, double x)
{
    return std::exp(ln_gamma_p(p, x));
}

double psi_p(PIndex p, double x)
{
    detail::require_positive(x, "psi_p");
    CompensatedSum s;
    // smallest terms first
    for (std::int64_t k = p.value(); k >= 0; --k)
        s += 1.0 / (x + static_cast<double>(k));
    return std::log(p.as_double()) - s.value();
}

double psi_p_nth(PIndex p, int n, double x)
{
    detail::require_positive(x, "psi_p_nth");
    detail::require_order(n, 1, "psi_p_nth");
    CompensatedSum s;
    for (std::int64_t k = p.value(); k >= 0; --k)
        s += std::pow(x + static_cast<double>(k), -(n + 1));
    const double mag = detail::factorial(n) * s.value();
    return (n % 2 == 1) ? mag : -mag;
}

double digamma_ref(double x)
{
    detail::require_positive(x, "digamma_ref");
    CompensatedSum shift;
    while (x < 10.0) {
        shift += 1.0 / x;
        x += 1.0;
    }
    // Asymptotic expansion with Bernoulli coefficients up to x^-12; the
    // truncation error at x = 10 is below 1e-15.
    const double r = 1.0 / (x * x);
    const double tail =
        r * (1.0 / 12 -
             r * (1.0 / 120 -
                  r * (1.0 / 252 - r * (1.0 / 240 - r * (1.0 / 132 - r * (691.0 / 32760))))));
    return std::log(x) - 0.5 / x - tail - shift.value();
}

} // namespace pgamma
