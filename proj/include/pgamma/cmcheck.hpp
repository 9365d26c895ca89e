#pragma once

#include "pgamma/quad.hpp"
#include "pgamma/theta.hpp"

#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace pgamma {

enum class Method { closed_form, finite_difference, moment_integral };

std::string_view to_string(Method m);

/// One evaluated derivative. value holds the signed quantity (-1)^n f^(n)(x).
struct DerivSample {
    int n;
    double x;
    double value;
    Method method;
};

/// Logarithmically spaced points on [lo, hi], both ends included.
struct LogGrid {
    double lo = 0.01;
    double hi = 100.0;
    int points = 64;

    std::vector<double> nodes() const;
};

enum class FamilyKind { theta, psi_p_prime, custom };

/// A function f on (0, inf) together with the ways we know to evaluate its
/// derivatives.
class FunctionFamily {
public:
    /// Returns f^(n)(x) with the magnitude of the largest term it was built from.
    using Derivative = std::function<ScaledValue(int n, double x)>;
    /// Returns (-1)^n f^(n)(x) computed as a moment integral of a density.
    using Moment = std::function<double(int n, double x)>;

    FunctionFamily(FamilyKind kind, std::string id, int max_order, Derivative derivative,
                   std::optional<Moment> moment = std::nullopt);

    /// theta_{p,alpha}; carries a moment evaluator when alpha == 1.
    static FunctionFamily theta(const ThetaParams& params, const QuadratureSpec& spec = {});
    /// psi_p'; its n-th derivative is psi_p_nth(p, n + 1, x).
    static FunctionFamily psi_p_prime(PIndex p);
    /// Any closed-form function; the term scale defaults to max(1, |value|).
    static FunctionFamily custom(std::string id, int max_order,
                                 std::function<double(int n, double x)> derivative);

    FamilyKind kind() const noexcept { return kind_; }
    const std::string& id() const noexcept { return id_; }
    int max_order() const noexcept { return max_order_; }

    ScaledValue derivative(int n, double x) const;
    double value(double x) const { return derivative(0, x).value; }
    bool has_moment() const noexcept { return moment_.has_value(); }
    double moment(int n, double x) const;

private:
    FamilyKind kind_;
    std::string id_;
    int max_order_;
    Derivative derivative_;
    std::optional<Moment> moment_;
};

/// Raised when an evaluator fails or returns a non-finite value.
class EvaluationError : public std::runtime_error {
public:
    EvaluationError(int n, double x, const std::string& what);
    int n;
    double x;
};

struct OrderMinimum {
    int n;
    double min_value;
    double argmin_x;
};

enum class Verdict { consistent, violated };

std::string_view to_string(Verdict v);

struct CMScanReport {
    std::string family;
    LogGrid grid;
    int max_order = 0;
    double tolerance = 0.0;
    std::vector<OrderMinimum> minima;
    std::vector<DerivSample> samples;
    Verdict verdict = Verdict::consistent;
    std::optional<ViolationWitness> witness;
};

inline constexpr int kMaxFdOrder = 4;

/// Default initial step for fd_derivative: 1e-2 * max(1, x).
double default_fd_step(double x);

/// n-th derivative (1 <= n <= 4) from second-order central stencils at steps
/// h0, h0/2, h0/4 combined by two Richardson levels. Throws DomainError if
/// x - n*h0 <= 0.
double fd_derivative(const std::function<double(double)>& f, double x, int n, double h0);

/// Evaluates (-1)^n f^(n)(x) for n = 0..N over the grid. Verdict is violated
/// iff some value falls below -tol * scale; the witness is the first such
/// sample in (n, x) order.
CMScanReport cm_scan(const FunctionFamily& family, const LogGrid& grid, int max_order, double tol);

struct Discrepancy {
    Method a;
    Method b;
    int n;
    double max_abs;
    double max_rel; ///< max |a - b| / (1 + |a|)
    double worst_x;
};

/// Compares every available pair of methods for n in [min_order, max_order].
/// Finite differences take part only for 1 <= n <= 4, moments only when the
/// family provides them.
std::vector<Discrepancy> cross_validate(const FunctionFamily& family, const LogGrid& grid,
                                        int min_order, int max_order);

} // namespace pgamma
