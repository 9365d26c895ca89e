#include "pgamma/limit.hpp"

#include "pgamma/errors.hpp"

#include <cmath>

namespace pgamma {

double fitted_order(std::span<const double> ps, std::span<const double> errs)
{
    if (ps.size() != errs.size() || ps.size() < 2)
        throw ArgumentError("fitted_order needs two or more (p, err) pairs");
    const double m = static_cast<double>(ps.size());
    double mx = 0.0, my = 0.0;
    for (std::size_t i = 0; i < ps.size(); ++i) {
        if (!(ps[i] > 0.0) || !(errs[i] > 0.0))
            throw DomainError("fitted_order needs positive p and err");
        mx += std::log(ps[i]) / m;
        my += std::log(errs[i]) / m;
    }
    double sxy = 0.0, sxx = 0.0;
    for (std::size_t i = 0; i < ps.size(); ++i) {
        const double dx = std::log(ps[i]) - mx;
        sxy += dx * (std::log(errs[i]) - my);
        sxx += dx * dx;
    }
    if (sxx == 0.0)
        throw ArgumentError("fitted_order needs at least two distinct p");
    return -sxy / sxx;
}

} // namespace pgamma
