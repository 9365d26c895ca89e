#pragma once

#include "pgamma/specfun.hpp"

#include <optional>
#include <vector>

namespace pgamma {

/// (p, alpha) parameterizing theta_{p,alpha}(x) = x^alpha [ln(px/(x+p+1)) - psi_p(x)].
struct ThetaParams {
    PIndex p;
    double alpha;

    /// Throws DomainError when alpha is not finite.
    ThetaParams(PIndex p, double alpha);
};

/// A derivative value together with the largest magnitude of the terms it
/// was assembled from; sign tests scale their tolerance by the latter.
struct ScaledValue {
    double value;
    double scale;
};

/// ln(px/(x+p+1)) - psi_p(x). Positive for all x > 0.
double bracket(PIndex p, double x);

/// n-th derivative of bracket, 1 <= n <= kMaxDerivOrder.
double bracket_nth(PIndex p, int n, double x);

/// bracket and its derivatives of order 0..n in one pass.
std::vector<double> bracket_derivatives(PIndex p, int n, double x);

double theta(const ThetaParams& params, double x);

/// Exact n-th derivative via the Leibniz rule on x^{alpha-1} * theta_{p,1}(x).
double theta_nth(const ThetaParams& params, int n, double x);
ScaledValue theta_nth_scaled(const ThetaParams& params, int n, double x);

/// Upper limit on alpha for theta_{p,alpha} to be non-increasing at x:
/// theta' <= 0 at x iff alpha <= necessity_ratio(p, x).
double necessity_ratio(PIndex p, double x);

struct ViolationWitness {
    int n;
    double x;
    double value; ///< (-1)^n theta^(n)(x), negative for a genuine violation
};

/// Geometric search grid for find_cm_violation. Points are visited in the
/// order start, start*growth, start/growth, start*growth^2, ... until both
/// x_max and x_min are passed.
struct ViolationSearch {
    double start = 1.0;
    double growth = 2.0;
    double x_max = 1e9;
    double x_min = 1e-9;
    double tol = 1e-9;
};

/// Finds a point where theta'_{p,alpha}(x) > 0. Requires alpha > 1
/// (ArgumentError otherwise). Returns nullopt only if the grid is exhausted.
std::optional<ViolationWitness> find_cm_violation(const ThetaParams& params,
                                                  const ViolationSearch& search = {});

} // namespace pgamma
