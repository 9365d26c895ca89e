#pragma once

#include <cstdint>

namespace pgamma {

/// Largest derivative order accepted by the closed-form evaluators.
inline constexpr int kMaxDerivOrder = 30;

/// The positive integer index p of the Gamma_p family.
class PIndex {
public:
    /// Throws DomainError unless p >= 1.
    explicit PIndex(std::int64_t p);

    std::int64_t value() const noexcept { return p_; }
    double as_double() const noexcept { return static_cast<double>(p_); }

    friend bool operator==(PIndex, PIndex) = default;

private:
    std::int64_t p_;
};

/// ln Gamma_p(x) = ln(p! p^x / (x (x+1) ... (x+p))), kept in the log domain
/// so that it stays finite for very large p.
double ln_gamma_p(PIndex p, double x);

/// Gamma_p(x). Overflows to +inf for extreme inputs.
double gamma_p(PIndex p, double x);

/// psi_p(x) = ln p - sum_{k=0}^{p} 1/(x+k).
double psi_p(PIndex p, double x);

/// n-th derivative of psi_p for 1 <= n <= kMaxDerivOrder:
/// (-1)^{n+1} n! sum_{k=0}^{p} (x+k)^{-(n+1)}.
double psi_p_nth(PIndex p, int n, double x);

/// Classical digamma function. Reference oracle for the p -> infinity limit.
double digamma_ref(double x);

namespace detail {
void require_positive(double x, const char* what);
void require_order(int n, int min_order, const char* what);
double factorial(int n);
} // namespace detail

} // namespace pgamma
