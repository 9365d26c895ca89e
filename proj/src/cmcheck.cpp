#include "pgamma/cmcheck.hpp"

#include "pgamma/errors.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <cmath>
#include <limits>
#include <utility>

namespace pgamma {

std::string_view to_string(Method m)
{
    switch (m) {
    case Method::closed_form: return "closed-form";
    case Method::finite_difference: return "finite-difference";
    case Method::moment_integral: return "moment-integral";
    }
    return "unknown";
}

std::string_view to_string(Verdict v)
{
    return v == Verdict::consistent ? "consistent" : "violated";
}

std::vector<double> LogGrid::nodes() const
{
    if (!(lo > 0.0) || !(hi >= lo) || !std::isfinite(hi) || points < 1)
        throw ArgumentError("log grid needs 0 < lo <= hi and at least one point");
    if (points == 1)
        return {lo};
    std::vector<double> out(static_cast<std::size_t>(points));
    const double step = std::log(hi / lo) / (points - 1);
    for (int i = 0; i < points; ++i)
        out[static_cast<std::size_t>(i)] = lo * std::exp(step * i);
    out.back() = hi;
    return out;
}

FunctionFamily::FunctionFamily(FamilyKind kind, std::string id, int max_order,
                               Derivative derivative, std::optional<Moment> moment)
    : kind_(kind), id_(std::move(id)), max_order_(max_order), derivative_(std::move(derivative)),
      moment_(std::move(moment))
{
    if (max_order_ < 0 || max_order_ > kMaxDerivOrder)
        throw OrderError("family order cap outside [0, kMaxDerivOrder]");
}

FunctionFamily FunctionFamily::theta(const ThetaParams& params, const QuadratureSpec& spec)
{
    auto d = [params](int n, double x) { return theta_nth_scaled(params, n, x); };
    std::optional<Moment> m;
    if (params.alpha == 1.0)
        m = [p = params.p, spec](int n, double x) { return cm_moment(p, n, x, spec); };
    return {FamilyKind::theta,
            fmt::format("theta(p={},alpha={})", params.p.value(), params.alpha),
            kMaxDerivOrder, d, m};
}

FunctionFamily FunctionFamily::psi_p_prime(PIndex p)
{
    auto d = [p](int n, double x) {
        const double v = psi_p_nth(p, n + 1, x);
        return ScaledValue{v, std::abs(v)};
    };
    return {FamilyKind::psi_p_prime, fmt::format("psi_p_prime(p={})", p.value()),
            kMaxDerivOrder - 1, d};
}

FunctionFamily FunctionFamily::custom(std::string id, int max_order,
                                      std::function<double(int n, double x)> derivative)
{
    auto d = [f = std::move(derivative)](int n, double x) {
        const double v = f(n, x);
        return ScaledValue{v, std::max(1.0, std::abs(v))};
    };
    return {FamilyKind::custom, std::move(id), max_order, d};
}

ScaledValue FunctionFamily::derivative(int n, double x) const
{
    if (n < 0 || n > max_order_)
        throw OrderError(fmt::format("{}: order {} outside [0, {}]", id_, n, max_order_));
    return derivative_(n, x);
}

double FunctionFamily::moment(int n, double x) const
{
    if (!moment_)
        throw ArgumentError(id_ + " has no moment representation");
    return (*moment_)(n, x);
}

EvaluationError::EvaluationError(int n_, double x_, const std::string& what)
    : std::runtime_error(fmt::format("evaluation failed at n={}, x={:.17g}: {}", n_, x_, what)),
      n(n_), x(x_)
{
}

double default_fd_step(double x)
{
    return 1e-2 * std::max(1.0, x);
}

namespace {

double central_stencil(const std::function<double(double)>& f, double x, int n, double h)
{
    switch (n) {
    case 1: return (f(x + h) - f(x - h)) / (2.0 * h);
    case 2: return (f(x + h) - 2.0 * f(x) + f(x - h)) / (h * h);
    case 3: return (f(x + 2 * h) - 2.0 * f(x + h) + 2.0 * f(x - h) - f(x - 2 * h)) / (2.0 * h * h * h);
    case 4:
        return (f(x + 2 * h) - 4.0 * f(x + h) + 6.0 * f(x) - 4.0 * f(x - h) + f(x - 2 * h)) /
               (h * h * h * h);
    default: throw OrderError("fd_derivative supports 1 <= n <= 4");
    }
}

} // namespace

double fd_derivative(const std::function<double(double)>& f, double x, int n, double h0)
{
    if (n < 1 || n > kMaxFdOrder)
        throw OrderError("fd_derivative supports 1 <= n <= 4");
    if (!(h0 > 0.0))
        throw ArgumentError("fd_derivative step must be positive");
    if (!(x - n * h0 > 0.0))
        throw DomainError(fmt::format("fd_derivative step collapse: x - n*h = {:.6g} <= 0", x - n * h0));

    // error series in h^2, h^4, ...
    const double d0 = central_stencil(f, x, n, h0);
    const double d1 = central_stencil(f, x, n, 0.5 * h0);
    const double d2 = central_stencil(f, x, n, 0.25 * h0);
    const double r01 = (4.0 * d1 - d0) / 3.0;
    const double r12 = (4.0 * d2 - d1) / 3.0;
    return (16.0 * r12 - r01) / 15.0;
}

CMScanReport cm_scan(const FunctionFamily& family, const LogGrid& grid, int max_order, double tol)
{
    if (max_order < 0 || max_order > family.max_order())
        throw OrderError(fmt::format("{}: scan order {} outside [0, {}]", family.id(), max_order,
                                     family.max_order()));
    if (!(tol >= 0.0))
        throw ArgumentError("scan tolerance must be non-negative");

    const std::vector<double> xs = grid.nodes();
    CMScanReport report;
    report.family = family.id();
    report.grid = grid;
    report.max_order = max_order;
    report.tolerance = tol;
    report.samples.reserve(xs.size() * static_cast<std::size_t>(max_order + 1));

    for (int n = 0; n <= max_order; ++n) {
        OrderMinimum least{n, std::numeric_limits<double>::infinity(), xs.front()};
        for (double x : xs) {
            ScaledValue d;
            try {
                d = family.derivative(n, x);
            } catch (const std::exception& e) {
                throw EvaluationError(n, x, e.what());
            }
            if (!std::isfinite(d.value))
                throw EvaluationError(n, x, "non-finite derivative");
            const double signed_value = (n % 2 == 0) ? d.value : -d.value;
            report.samples.push_back({n, x, signed_value, Method::closed_form});
            if (signed_value < least.min_value)
                least = {n, signed_value, x};
            if (!report.witness && signed_value < -tol * d.scale)
                report.witness = ViolationWitness{n, x, signed_value};
        }
        report.minima.push_back(least);
    }
    report.verdict = report.witness ? Verdict::violated : Verdict::consistent;
    return report;
}

std::vector<Discrepancy> cross_validate(const FunctionFamily& family, const LogGrid& grid,
                                        int min_order, int max_order)
{
    if (min_order < 0 || max_order > family.max_order() || min_order > max_order)
        throw OrderError("cross_validate order range invalid for " + family.id());
    const std::vector<double> xs = grid.nodes();
    auto f = [&family](double t) { return family.value(t); };

    std::vector<Discrepancy> out;
    auto record = [&out](Method a, Method b, int n, double va, double vb, double x) {
        auto it = std::find_if(out.begin(), out.end(), [&](const Discrepancy& d) {
            return d.a == a && d.b == b && d.n == n;
        });
        if (it == out.end()) {
            out.push_back({a, b, n, 0.0, 0.0, x});
            it = std::prev(out.end());
        }
        const double diff = std::abs(va - vb);
        if (diff > it->max_abs) {
            it->max_abs = diff;
            it->worst_x = x;
        }
        it->max_rel = std::max(it->max_rel, diff / (1.0 + std::abs(va)));
    };

    for (int n = min_order; n <= max_order; ++n) {
        for (double x : xs) {
            double closed = 0.0;
            try {
                closed = family.derivative(n, x).value;
                if (n >= 1 && n <= kMaxFdOrder)
                    record(Method::closed_form, Method::finite_difference, n, closed,
                           fd_derivative(f, x, n, default_fd_step(x)), x);
                if (family.has_moment()) {
                    const double sign = (n % 2 == 0) ? 1.0 : -1.0;
                    record(Method::closed_form, Method::moment_integral, n, sign * closed,
                           family.moment(n, x), x);
                }
            } catch (const EvaluationError&) {
                throw;
            } catch (const std::exception& e) {
                throw EvaluationError(n, x, e.what());
            }
        }
    }
    return out;
}

} // namespace pgamma
