#pragma once

// Test-only helpers: tolerances, grids, a seeded generator, and brute-force
// oracles written straight from the defining formulas in long double. None of
// them call into the library's evaluation paths.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

namespace pgamma::test {

inline double rel_diff(double a, double b)
{
    const double scale = std::max(std::abs(a), std::abs(b));
    return scale == 0.0 ? 0.0 : std::abs(a - b) / scale;
}

inline std::vector<double> log_points(double lo, double hi, int n)
{
    std::vector<double> out;
    for (int i = 0; i < n; ++i)
        out.push_back(lo * std::pow(hi / lo, n == 1 ? 0.0 : static_cast<double>(i) / (n - 1)));
    return out;
}

class Rng {
public:
    explicit Rng(std::uint64_t seed) : gen_(seed) {}
    double uniform(double lo, double hi)
    {
        return lo + (hi - lo) * static_cast<double>(gen_() >> 11) * 0x1.0p-53;
    }
    double log_uniform(double lo, double hi) { return std::exp(uniform(std::log(lo), std::log(hi))); }
    int integer(int lo, int hi) { return lo + static_cast<int>(gen_() % static_cast<std::uint64_t>(hi - lo + 1)); }

private:
    std::mt19937_64 gen_;
};

namespace oracle {

// p! p^x / (x (x+1) ... (x+p)) as a literal product
inline long double gamma_p_product(int p, long double x)
{
    long double num = 1.0L;
    for (int k = 2; k <= p; ++k)
        num *= k;
    num *= std::pow(static_cast<long double>(p), x);
    long double den = 1.0L;
    for (int k = 0; k <= p; ++k)
        den *= x + k;
    return num / den;
}

// ln p - sum 1/(x+k), naive order
inline long double psi_p_naive(long long p, long double x)
{
    long double s = 0.0L;
    for (long long k = 0; k <= p; ++k)
        s += 1.0L / (x + k);
    return std::log(static_cast<long double>(p)) - s;
}

// ln(px/(x+p+1)) - psi_p(x) exactly as written
inline long double bracket_naive(long long p, long double x)
{
    return std::log(p * x / (x + p + 1)) - psi_p_naive(p, x);
}

// (-1)^{n-1}(n-1)! [x^{-n} - (x+p+1)^{-n}] - psi_p^(n)(x), with
// psi_p^(n) = (-1)^{n+1} n! sum (x+k)^{-(n+1)}
inline long double bracket_nth_naive(long long p, int n, long double x)
{
    long double fact_nm1 = 1.0L;
    for (int k = 2; k < n; ++k)
        fact_nm1 *= k;
    const long double sign = (n % 2 == 1) ? 1.0L : -1.0L;
    long double s = 0.0L;
    for (long long k = 0; k <= p; ++k)
        s += std::pow(x + k, -(n + 1));
    const long double psi_n = sign * fact_nm1 * n * s;
    return sign * fact_nm1 * (std::pow(x, -n) - std::pow(x + p + 1, -n)) - psi_n;
}

inline double phi_direct(double t)
{
    const long double tl = t;
    return static_cast<double>(1.0L / (1.0L - std::exp(-tl)) - 1.0L / tl);
}

} // namespace oracle

} // namespace pgamma::test
