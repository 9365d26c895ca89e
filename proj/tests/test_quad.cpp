#include "support.hpp"

#include "pgamma/errors.hpp"
#include "pgamma/quad.hpp"
#include "pgamma/theta.hpp"

#include <doctest.h>

#include <cmath>
#include <numbers>

using namespace pgamma;
using pgamma::test::rel_diff;

TEST_CASE("integrate_laplace on Gamma-function integrands")
{
    const QuadratureSpec spec;
    const QuadResult a = integrate_laplace([](double t) { return std::exp(-t); }, 1.0, spec);
    CHECK(std::abs(a.value - 1.0) < 1e-13);
    CHECK(a.error_estimate <= std::max(spec.abs_tol, spec.rel_tol * std::abs(a.value)));
    CHECK(a.subdivisions_used >= 1);

    // t e^{-2t} <= e^{-t}/e
    const QuadResult b =
        integrate_laplace([](double t) { return t * std::exp(-2 * t); }, 1.0, spec, 1.0);
    CHECK(std::abs(b.value - 0.25) < 1e-13);

    // t^3 e^{-t} <= (6/e)^3 e^{-t/2}
    const QuadResult c = integrate_laplace([](double t) { return t * t * t * std::exp(-t); }, 0.5,
                                           spec, std::pow(6.0 / std::numbers::e, 3));
    CHECK(std::abs(c.value - 6.0) < 1e-12);
}

TEST_CASE("integrate_interval")
{
    const QuadResult r = integrate_interval([](double t) { return std::sin(t); }, 0.0,
                                            std::numbers::pi, QuadratureSpec{});
    CHECK(std::abs(r.value - 2.0) < 1e-14);
    CHECK(integrate_interval([](double) { return 1.0; }, 3.0, 3.0, QuadratureSpec{}).value == 0.0);
}

TEST_CASE("quadrature reports failure instead of a wrong value")
{
    QuadratureSpec too_tight;
    too_tight.rel_tol = 1e-17;
    too_tight.abs_tol = 1e-300;
    too_tight.max_subdivisions = 50;
    CHECK_THROWS_AS(integrate_laplace([](double t) { return std::exp(-t); }, 1.0, too_tight),
                    ConvergenceError);

    QuadratureSpec few;
    few.max_subdivisions = 10;
    auto spiky = [](double t) { return 1.0 / (1e-6 + (t - 0.3) * (t - 0.3)); };
    CHECK_THROWS_AS(integrate_interval(spiky, 0.0, 1.0, few), ConvergenceError);

    auto bad = [](double) { return std::nan(""); };
    CHECK_THROWS_AS(integrate_interval(bad, 0.0, 1.0, QuadratureSpec{}), ConvergenceError);
}

TEST_CASE("QuadratureSpec validation")
{
    QuadratureSpec s;
    s.rel_tol = 0;
    CHECK_THROWS_AS(s.validate(), ArgumentError);
    s = {};
    s.max_subdivisions = 9;
    CHECK_THROWS_AS(s.validate(), ArgumentError);
    s = {};
    s.tail_safety = 0.5;
    CHECK_THROWS_AS(s.validate(), ArgumentError);
    CHECK_THROWS_AS(integrate_laplace([](double) { return 0.0; }, 0.0, QuadratureSpec{}),
                    ArgumentError);
}

TEST_CASE("log identity")
{
    CHECK(verify_log_identity(1.0, 1.0) == 0.0);
    CHECK(verify_log_identity(1.0, std::numbers::e) < 1e-12);
    CHECK(verify_log_identity(2.0, 6.0) < 1e-12);
    CHECK(verify_log_identity(9.5, 0.11) < 1e-11);
    CHECK_THROWS_AS(verify_log_identity(0.0, 1.0), DomainError);
}

TEST_CASE("power identity")
{
    CHECK(verify_power_identity(1.0, 3.0) < 1e-14);
    CHECK(verify_power_identity(4.0, 1.0) < 1e-12);
    CHECK(verify_power_identity(0.5, 2.0) < 1e-12);
    CHECK(verify_power_identity(0.3, 0.2) < 1e-11);
    CHECK(verify_power_identity(5.0, 0.2) < 1e-9);
    CHECK_THROWS_AS(verify_power_identity(-0.5, 1.0), DomainError);
}

TEST_CASE("psi_p from its integral form")
{
    CHECK(std::abs(psi_p_via_integral(PIndex(1), 1.0) - -1.5) < 1e-12);
    CHECK(std::abs(psi_p_via_integral(PIndex(2), 1.0) - -1.1401861527733879499) < 1e-12);
    CHECK(rel_diff(psi_p_via_integral(PIndex(5), 0.5), psi_p(PIndex(5), 0.5)) < 1e-12);
}

TEST_CASE("theta_{p,1} from both Laplace representations")
{
    CHECK(rel_diff(theta1_via_integral(PIndex(1), 1.0), 0.40138771133189030860) < 1e-12);
    CHECK(rel_diff(theta1_via_integral(PIndex(2), 1.0), 0.44703897221344264048) < 1e-12);
    CHECK(rel_diff(theta1_via_density(PIndex(1), 1.0), 0.40138771133189030860) < 1e-12);
    CHECK(rel_diff(theta1_via_density(PIndex(10), 2.0), theta(ThetaParams(PIndex(10), 1.0), 2.0)) <
          1e-12);

    pgamma::test::Rng rng(31);
    for (int i = 0; i < 20; ++i) {
        const PIndex p(rng.integer(1, 30));
        const double x = rng.log_uniform(0.05, 50.0);
        const double a = theta1_via_integral(p, x);
        const double b = theta1_via_density(p, x);
        CHECK(a > 0.0);
        CHECK(b > 0.0);
        CHECK(rel_diff(a, b) < 1e-10);
    }
}

TEST_CASE("cm_moment equals signed derivatives of theta_{p,1}")
{
    CHECK(rel_diff(cm_moment(PIndex(1), 0, 1.0), 0.40138771133189030860) < 1e-12);
    CHECK(rel_diff(cm_moment(PIndex(1), 1, 1.0), 0.18194562200144302473) < 1e-12);
    for (int n = 0; n <= 8; ++n) {
        const double m = cm_moment(PIndex(3), n, 0.8);
        CHECK(m > 0.0);
        const double d = theta_nth(ThetaParams(PIndex(3), 1.0), n, 0.8);
        CHECK(std::abs(m - (n % 2 == 0 ? d : -d)) < 1e-9 * (1.0 + m));
    }
}
