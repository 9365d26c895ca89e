#include "pgamma/theta.hpp"

#include "pgamma/errors.hpp"
#include "pgamma/summation.hpp"

#include <algorithm>
#include <cmath>

namespace pgamma {

namespace {

// y - ln(1 + y) for y > 0
double log1p_gap(double y)
{
    // extended precision absorbs the cancellation near y ~ 1
    if (y >= 0.25) {
        const long double yl = y;
        return static_cast<double>(yl - std::log1p(yl));
    }
    CompensatedSum s;
    double power = y * y;
    for (int j = 2; j < 200; ++j) {
        const double term = power / j;
        s += (j % 2 == 0) ? term : -term;
        if (term < 1e-18 * s.value())
            break;
        power *= y;
    }
    return s.value();
}

// (1 + y)^{-n} - 1 + n y for y > 0, n >= 1
double binomial_gap(int n, double y)
{
    if (n * y >= 0.25)
        return std::expm1(-n * std::log1p(y)) + n * y;
    // sum_{j>=2} (-1)^j C(n+j-1, j) y^j
    CompensatedSum s;
    double term = 0.5 * n * (n + 1) * y * y;
    for (int j = 2; j < 400; ++j) {
        s += (j % 2 == 0) ? term : -term;
        if (term < 1e-18 * s.value())
            break;
        term *= y * (n + j) / (j + 1);
    }
    return s.value();
}

} // namespace

ThetaParams::ThetaParams(PIndex p_, double alpha_) : p(p_), alpha(alpha_)
{
    if (!std::isfinite(alpha))
        throw DomainError("alpha must be finite");
}

// The bracket telescopes into sum_{k=0}^{p} [1/(x+k) - ln(1 + 1/(x+k))], a
// sum of positive terms. Differentiating term by term gives
//   (-1)^n bracket^(n)(x) = (n-1)! sum_k y_k^n [(1+y_k)^{-n} - 1 + n y_k],
// with y_k = 1/(x+k), again positive terms, so nothing cancels for large x.

double bracket(PIndex p, double x)
{
    detail::require_positive(x, "bracket");
    CompensatedSum s;
    for (std::int64_t k = p.value(); k >= 0; --k)
        s += log1p_gap(1.0 / (x + static_cast<double>(k)));
    return s.value();
}

double bracket_nth(PIndex p, int n, double x)
{
    detail::require_positive(x, "bracket_nth");
    detail::require_order(n, 1, "bracket_nth");
    CompensatedSum s;
    for (std::int64_t k = p.value(); k >= 0; --k) {
        const double y = 1.0 / (x + static_cast<double>(k));
        s += std::pow(y, n) * binomial_gap(n, y);
    }
    const double mag = detail::factorial(n - 1) * s.value();
    return (n % 2 == 0) ? mag : -mag;
}

std::vector<double> bracket_derivatives(PIndex p, int n, double x)
{
    detail::require_order(n, 0, "bracket_derivatives");
    std::vector<double> d(static_cast<std::size_t>(n) + 1);
    d[0] = bracket(p, x);
    for (int m = 1; m <= n; ++m)
        d[static_cast<std::size_t>(m)] = bracket_nth(p, m, x);
    return d;
}

double theta(const ThetaParams& params, double x)
{
    detail::require_positive(x, "theta");
    return std::pow(x, params.alpha) * bracket(params.p, x);
}

ScaledValue theta_nth_scaled(const ThetaParams& params, int n, double x)
{
    detail::require_positive(x, "theta_nth");
    detail::require_order(n, 0, "theta_nth");
    const std::vector<double> b = bracket_derivatives(params.p, n, x);

    // theta_{p,1}^(m) = x b^(m) + m b^(m-1)
    std::vector<double> v(b.size());
    double scale = 0.0;
    for (std::size_t m = 0; m < b.size(); ++m) {
        const double lead = x * b[m];
        const double carry = m > 0 ? static_cast<double>(m) * b[m - 1] : 0.0;
        v[m] = lead + carry;
        scale = std::max({scale, std::abs(lead), std::abs(carry)});
    }

    // Leibniz with u = x^{alpha-1}: u^(i) = (alpha-1)_i x^{alpha-1-i}
    const double beta = params.alpha - 1.0;
    CompensatedSum s;
    double falling = 1.0; // (beta)(beta-1)...(beta-i+1)
    double binom = 1.0;   // C(n, i)
    for (int i = 0; i <= n; ++i) {
        if (i > 0) {
            falling *= beta - (i - 1);
            binom = binom * (n - i + 1) / i;
        }
        if (falling == 0.0)
            break;
        const double term =
            binom * falling * std::pow(x, beta - i) * v[static_cast<std::size_t>(n - i)];
        s += term;
        scale = std::max(scale, std::abs(term));
    }
    return {s.value(), std::max(scale, std::abs(s.value()))};
}

double theta_nth(const ThetaParams& params, int n, double x)
{
    return theta_nth_scaled(params, n, x).value;
}

double necessity_ratio(PIndex p, double x)
{
    detail::require_positive(x, "necessity_ratio");
    // numerator x psi_p'(x) - (p+1)/(x+p+1) = -x bracket'(x)
    return -x * bracket_nth(p, 1, x) / bracket(p, x);
}

std::optional<ViolationWitness> find_cm_violation(const ThetaParams& params,
                                                  const ViolationSearch& search)
{
    if (!(params.alpha > 1.0))
        throw ArgumentError("find_cm_violation requires alpha > 1; theta_{p,alpha} is "
                            "completely monotonic for alpha <= 1");
    detail::require_positive(search.start, "ViolationSearch.start");
    if (!(search.growth > 1.0) || !(search.x_min > 0.0) || !(search.x_max >= search.x_min))
        throw ArgumentError("invalid violation search grid");

    auto probe = [&](double x) -> std::optional<ViolationWitness> {
        if (necessity_ratio(params.p, x) >= params.alpha)
            return std::nullopt;
        const ScaledValue d = theta_nth_scaled(params, 1, x);
        const double signed_value = -d.value;
        if (signed_value < -search.tol * std::max(1.0, d.scale))
            return ViolationWitness{1, x, signed_value};
        return std::nullopt;
    };

    double up = search.start;
    double down = search.start / search.growth;
    if (auto w = probe(up))
        return w;
    while (true) {
        up *= search.growth;
        const bool up_ok = up <= search.x_max;
        const bool down_ok = down >= search.x_min;
        if (!up_ok && !down_ok)
            return std::nullopt;
        if (up_ok)
            if (auto w = probe(up))
                return w;
        if (down_ok)
            if (auto w = probe(down))
                return w;
        down /= search.growth;
    }
}

} // namespace pgamma
