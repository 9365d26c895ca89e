#include "pgamma/quad.hpp"

#include "pgamma/errors.hpp"
#include "pgamma/kernel.hpp"
#include "pgamma/summation.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <vector>

namespace pgamma {

namespace {

// Gauss-Kronrod 7/15 abscissae and weights (QUADPACK qk15).
constexpr double kXgk[8] = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
constexpr double kWgk[8] = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr double kWg[4] = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Panel {
    double a;
    double b;
    double value;
    double error;
    bool operator<(const Panel& other) const { return error < other.error; }
};

Panel gauss_kronrod(const Integrand& f, double a, double b)
{
    const double centre = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    const double fc = f(centre);
    double kronrod = fc * kWgk[7];
    double gauss = fc * kWg[3];
    double abs_sum = std::abs(kronrod);
    for (int j = 0; j < 7; ++j) {
        const double dx = half * kXgk[j];
        const double f1 = f(centre - dx);
        const double f2 = f(centre + dx);
        kronrod += kWgk[j] * (f1 + f2);
        abs_sum += kWgk[j] * (std::abs(f1) + std::abs(f2));
        if (j % 2 == 1)
            gauss += kWg[j / 2] * (f1 + f2);
    }
    const double value = kronrod * half;
    const double floor = 10.0 * std::numeric_limits<double>::epsilon() * abs_sum * std::abs(half);
    double error = std::max(std::abs((kronrod - gauss) * half), floor);
    if (!std::isfinite(value))
        throw ConvergenceError("integrand not finite on [" + std::to_string(a) + ", " +
                               std::to_string(b) + "]");
    return {a, b, value, error};
}

} // namespace

void QuadratureSpec::validate() const
{
    if (!(rel_tol > 0.0) || !(abs_tol > 0.0))
        throw ArgumentError("quadrature tolerances must be positive");
    if (max_subdivisions < 10)
        throw ArgumentError("max_subdivisions must be at least 10");
    if (!(tail_safety >= 1.0))
        throw ArgumentError("tail_safety must be >= 1");
}

QuadResult integrate_interval(const Integrand& f, double a, double b, const QuadratureSpec& spec)
{
    spec.validate();
    if (!(b > a))
        return {};

    std::vector<Panel> panels{gauss_kronrod(f, a, b)};
    CompensatedSum total;
    CompensatedSum error;
    total += panels.front().value;
    error += panels.front().error;
    int used = 1;

    auto resum = [&] {
        total = {};
        error = {};
        for (const Panel& panel : panels) {
            total += panel.value;
            error += panel.error;
        }
    };
    auto converged = [&] {
        return error.value() <= std::max(spec.abs_tol, spec.rel_tol * std::abs(total.value()));
    };

    while (true) {
        if (converged()) {
            resum();
            if (converged())
                break;
        }
        if (used >= spec.max_subdivisions)
            throw ConvergenceError("quadrature did not converge in " +
                                   std::to_string(spec.max_subdivisions) +
                                   " subdivisions (error estimate " +
                                   std::to_string(error.value()) + ")");
        std::pop_heap(panels.begin(), panels.end());
        const Panel worst = panels.back();
        panels.pop_back();
        total += -worst.value;
        error += -worst.error;
        const double mid = 0.5 * (worst.a + worst.b);
        for (const Panel& half : {gauss_kronrod(f, worst.a, mid), gauss_kronrod(f, mid, worst.b)}) {
            panels.push_back(half);
            std::push_heap(panels.begin(), panels.end());
            total += half.value;
            error += half.error;
        }
        ++used;
    }
    return {total.value(), error.value(), used};
}

QuadResult integrate_laplace(const Integrand& f, double decay_rate, const QuadratureSpec& spec,
                             double envelope)
{
    spec.validate();
    if (!(decay_rate > 0.0) || !std::isfinite(decay_rate))
        throw ArgumentError("decay_rate must be positive and finite");
    if (!(envelope >= 0.0) || !std::isfinite(envelope))
        throw ArgumentError("envelope must be non-negative and finite");

    const double cut = spec.tail_safety *
                       (std::log(1.0 / spec.abs_tol) + std::log1p(envelope)) / decay_rate;
    const double tail = envelope * std::exp(-decay_rate * cut) / decay_rate;

    // The truncated part gets what remains of the absolute budget.
    QuadratureSpec inner = spec;
    inner.abs_tol = std::max(spec.abs_tol - tail, 0.5 * spec.abs_tol);
    QuadResult r = integrate_interval(f, 0.0, cut, inner);
    r.error_estimate += tail;
    return r;
}

double verify_log_identity(double a, double b, const QuadratureSpec& spec)
{
    detail::require_positive(a, "verify_log_identity");
    detail::require_positive(b, "verify_log_identity");
    auto f = [a, b](double t) {
        if (t < 1e-6) // removable singularity: (e^{-at} - e^{-bt})/t -> b - a
            return (b - a) - 0.5 * t * (b * b - a * a) + t * t * (b * b * b - a * a * a) / 6.0;
        return (std::expm1(-a * t) - std::expm1(-b * t)) / t;
    };
    // |f(t)| <= |b - a| e^{-min(a,b) t}
    const QuadResult r = integrate_laplace(f, std::min(a, b), spec, std::abs(b - a));
    return std::abs(r.value - std::log(b / a));
}

double verify_power_identity(double omega, double x, const QuadratureSpec& spec)
{
    detail::require_positive(omega, "verify_power_identity");
    detail::require_positive(x, "verify_power_identity");
    double integral = 0.0;
    if (omega < 1.0) {
        // [0, 1] with t = u^{1/omega}: t^{omega-1} dt = du / omega
        auto head = [omega, x](double u) { return std::exp(-x * std::pow(u, 1.0 / omega)) / omega; };
        integral += integrate_interval(head, 0.0, 1.0, spec).value;
        // [1, inf) shifted to [0, inf): (1+s)^{omega-1} <= 1
        auto rest = [omega, x](double s) { return std::pow(1.0 + s, omega - 1.0) * std::exp(-x * (1.0 + s)); };
        integral += integrate_laplace(rest, x, spec, std::exp(-x)).value;
    } else {
        // t^{omega-1} e^{-xt/2} <= (2(omega-1)/(e x))^{omega-1}
        const double m = omega - 1.0;
        const double envelope = m > 0.0 ? std::pow(2.0 * m / (std::exp(1.0) * x), m) : 1.0;
        auto f = [omega, x](double t) { return std::pow(t, omega - 1.0) * std::exp(-x * t); };
        integral = integrate_laplace(f, 0.5 * x, spec, envelope).value;
    }
    return std::abs(integral / std::tgamma(omega) - std::pow(x, -omega));
}

double psi_p_via_integral(PIndex p, double x, const QuadratureSpec& spec)
{
    detail::require_positive(x, "psi_p_via_integral");
    const double q = p.as_double() + 1.0;
    const double pd = p.as_double();
    auto f = [q, pd, x](double t) {
        // (1 - e^{-qt})/(1 - e^{-t}) = sum_{k=0}^{p} e^{-kt} -> p + 1
        if (t < 1e-6)
            return (q - t * pd * q / 2.0 + t * t * pd * q * (2.0 * pd + 1.0) / 12.0) * std::exp(-x * t);
        return std::expm1(-q * t) / std::expm1(-t) * std::exp(-x * t);
    };
    const QuadResult r = integrate_laplace(f, x, spec, q);
    return std::log(pd) - r.value;
}

double theta1_via_integral(PIndex p, double x, const QuadratureSpec& spec)
{
    detail::require_positive(x, "theta1_via_integral");
    const double q = p.as_double() + 1.0;
    auto f = [q, x](double t) { return -std::expm1(-q * t) * phi(t) * std::exp(-x * t); };
    return x * integrate_laplace(f, x, spec, 1.0).value;
}

double theta1_via_density(PIndex p, double x, const QuadratureSpec& spec)
{
    return cm_moment(p, 0, x, spec);
}

double cm_moment(PIndex p, int n, double x, const QuadratureSpec& spec)
{
    detail::require_positive(x, "cm_moment");
    detail::require_order(n, 0, "cm_moment");
    // g_p <= 1/12 + (p+1) and t^n e^{-xt/2} <= (2n/(e x))^n
    const double g_bound = p.as_double() + 2.0;
    double decay = x;
    double envelope = g_bound;
    if (n > 0) {
        decay = 0.5 * x;
        envelope *= std::pow(2.0 * n / (std::exp(1.0) * x), n);
    }
    auto f = [p, n, x](double t) {
        return std::pow(t, n) * bernstein_density(p, t) * std::exp(-x * t);
    };
    return integrate_laplace(f, decay, spec, envelope).value;
}

} // namespace pgamma
