#include "support.hpp"

#include "pgamma/cmcheck.hpp"
#include "pgamma/errors.hpp"
#include "pgamma/kernel.hpp"

#include <doctest.h>

#include <cmath>
#include <bit>
#include <cstdint>

using namespace pgamma;

TEST_CASE("LogGrid nodes")
{
    const auto xs = LogGrid{}.nodes();
    REQUIRE(xs.size() == 64);
    CHECK(xs.front() == 0.01);
    CHECK(xs.back() == 100.0);
    for (std::size_t i = 2; i < xs.size(); ++i)
        CHECK(xs[i] / xs[i - 1] == doctest::Approx(xs[1] / xs[0]).epsilon(1e-12));
    CHECK(LogGrid{2.0, 2.0, 1}.nodes() == std::vector<double>{2.0});
    CHECK_THROWS_AS((LogGrid{0.0, 1.0, 10}.nodes()), ArgumentError);
    CHECK_THROWS_AS((LogGrid{2.0, 1.0, 10}.nodes()), ArgumentError);
}

TEST_CASE("fd_derivative examples")
{
    auto sq = [](double x) { return x * x; };
    CHECK(std::abs(fd_derivative(sq, 3.0, 1, default_fd_step(3.0)) - 6.0) < 1e-9);

    const ThetaParams one(PIndex(1), 1.0);
    auto th = [&one](double x) { return theta(one, x); };
    CHECK(std::abs(fd_derivative(th, 1.0, 1, default_fd_step(1.0)) - -0.18194562200144302473) < 1e-9);

    auto ps = [](double x) { return psi_p(PIndex(1), x); };
    CHECK(std::abs(fd_derivative(ps, 1.0, 1, default_fd_step(1.0)) - 1.25) < 1e-7);

    auto cube = [](double x) { return x * x * x * x; };
    CHECK(std::abs(fd_derivative(cube, 2.0, 4, 0.1) - 24.0) < 1e-6);
    CHECK(std::abs(fd_derivative(cube, 2.0, 3, 0.1) - 48.0) < 1e-8);
}

TEST_CASE("fd_derivative errors")
{
    auto f = [](double x) { return x; };
    CHECK_THROWS_AS(fd_derivative(f, 0.03, 4, 0.01), DomainError);
    CHECK_THROWS_AS(fd_derivative(f, 1.0, 5, 0.01), OrderError);
    CHECK_THROWS_AS(fd_derivative(f, 1.0, 0, 0.01), OrderError);
    CHECK_THROWS_AS(fd_derivative(f, 1.0, 1, 0.0), ArgumentError);
}

TEST_CASE("cm_scan verdicts split at alpha = 1")
{
    const CMScanReport ok =
        cm_scan(FunctionFamily::theta(ThetaParams(PIndex(1), 1.0)), LogGrid{}, 10, 1e-9);
    CHECK(ok.verdict == Verdict::consistent);
    CHECK_FALSE(ok.witness.has_value());
    CHECK(ok.samples.size() == 64u * 11u);
    REQUIRE(ok.minima.size() == 11);

    const ThetaParams two(PIndex(1), 2.0);
    const CMScanReport bad = cm_scan(FunctionFamily::theta(two), LogGrid{1e-3, 1e3, 64}, 10, 1e-9);
    CHECK(bad.verdict == Verdict::violated);
    REQUIRE(bad.witness.has_value());
    CHECK(bad.witness->n == 1);
    // the witness reproduces on re-evaluation
    const ScaledValue d = theta_nth_scaled(two, bad.witness->n, bad.witness->x);
    CHECK(-d.value == bad.witness->value);
    CHECK(-d.value < -1e-9 * d.scale);

    const CMScanReport psi = cm_scan(FunctionFamily::psi_p_prime(PIndex(3)), LogGrid{}, 10, 0.0);
    CHECK(psi.verdict == Verdict::consistent);
    for (const OrderMinimum& m : psi.minima)
        CHECK(m.min_value > 0.0);
}

TEST_CASE("per-order minima of theta_{p,1} dominate the phi lower bound")
{
    const LogGrid grid;
    const auto xs = grid.nodes();
    for (std::int64_t pv : {1, 5}) {
        const CMScanReport r = cm_scan(FunctionFamily::theta(ThetaParams(PIndex(pv), 1.0)), grid, 10, 1e-9);
        for (int n = 1; n <= 10; ++n) {
            double bound = INFINITY;
            for (double x : xs)
                bound = std::min(bound, phi(n / x) * detail::factorial(n) * (pv + 1) /
                                            std::pow(x + pv + 1, n + 1));
            CHECK(r.minima[static_cast<std::size_t>(n)].min_value > 0.0);
            CHECK(r.minima[static_cast<std::size_t>(n)].min_value >= bound);
        }
    }
}

TEST_CASE("cm_scan reports the failing sample")
{
    auto throwing = FunctionFamily::custom("throws", 3, [](int n, double x) -> double {
        if (n == 2 && x > 1.0)
            throw DomainError("boom");
        return std::exp(-x);
    });
    try {
        cm_scan(throwing, LogGrid{0.5, 4.0, 8}, 3, 1e-9);
        FAIL("expected EvaluationError");
    } catch (const EvaluationError& e) {
        CHECK(e.n == 2);
        CHECK(e.x > 1.0);
    }

    auto nan_family = FunctionFamily::custom("nan", 1, [](int, double) { return std::nan(""); });
    CHECK_THROWS_AS(cm_scan(nan_family, LogGrid{}, 1, 1e-9), EvaluationError);

    CHECK_THROWS_AS(cm_scan(FunctionFamily::psi_p_prime(PIndex(1)), LogGrid{}, 30, 1e-9), OrderError);
}

TEST_CASE("cm_scan is deterministic")
{
    const auto family = FunctionFamily::theta(ThetaParams(PIndex(7), 0.3));
    const CMScanReport a = cm_scan(family, LogGrid{}, 8, 1e-9);
    const CMScanReport b = cm_scan(family, LogGrid{}, 8, 1e-9);
    REQUIRE(a.samples.size() == b.samples.size());
    for (std::size_t i = 0; i < a.samples.size(); ++i) {
        CHECK(a.samples[i].n == b.samples[i].n);
        CHECK(std::bit_cast<std::uint64_t>(a.samples[i].x) == std::bit_cast<std::uint64_t>(b.samples[i].x));
        CHECK(std::bit_cast<std::uint64_t>(a.samples[i].value) ==
              std::bit_cast<std::uint64_t>(b.samples[i].value));
    }
}

TEST_CASE("cross_validate")
{
    const auto family = FunctionFamily::theta(ThetaParams(PIndex(1), 1.0));
    const LogGrid grid{0.5, 20.0, 12};
    // orders 1-3 only: order 4 at x near 0.5 is limited by roundoff (see theta tests)
    for (const Discrepancy& d : cross_validate(family, grid, 1, 3)) {
        if (d.b == Method::finite_difference)
            CHECK(d.max_abs <= 1e-6);
        else
            CHECK(d.max_rel <= 1e-6);
    }
    const auto moments = cross_validate(family, grid, 0, 6);
    int moment_rows = 0;
    for (const Discrepancy& d : moments)
        if (d.b == Method::moment_integral) {
            ++moment_rows;
            CHECK(d.max_rel <= 1e-6);
        }
    CHECK(moment_rows == 7);

    auto constant = FunctionFamily::custom("const", 4, [](int n, double) { return n == 0 ? 3.0 : 0.0; });
    const auto flat = cross_validate(constant, LogGrid{1.0, 50.0, 10}, 0, 4);
    CHECK(flat.size() == 4);
    for (const Discrepancy& d : flat)
        CHECK(d.max_abs <= 1e-12);

    CHECK_THROWS_AS(cross_validate(constant, grid, 3, 1), OrderError);
}
