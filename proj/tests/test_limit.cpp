#include "pgamma/errors.hpp"
#include "pgamma/limit.hpp"

#include <doctest.h>

#include <cmath>
#include <stdexcept>
#include <vector>

using namespace pgamma;

TEST_CASE("fitted_order recovers power laws")
{
    const std::vector<double> ps = {1e3, 1e4, 1e5, 1e6};
    for (double k : {0.5, 1.0, 2.0}) {
        std::vector<double> errs;
        for (double p : ps)
            errs.push_back(3.0 * std::pow(p, -k));
        CHECK(fitted_order(ps, errs) == doctest::Approx(k).epsilon(1e-12));
    }
}

TEST_CASE("fitted_order rejects degenerate input")
{
    const std::vector<double> one = {10.0};
    CHECK_THROWS(fitted_order(one, one));
    const std::vector<double> ps = {10.0, 100.0};
    const std::vector<double> zero = {1e-3, 0.0};
    CHECK_THROWS(fitted_order(ps, zero));
}
