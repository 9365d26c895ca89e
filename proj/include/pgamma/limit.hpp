#pragma once

#include <span>

namespace pgamma {

/// Empirical convergence order k in err ~ C p^{-k}: the negated least-squares
/// slope of ln err against ln p. Needs at least two points with err > 0.
double fitted_order(std::span<const double> ps, std::span<const double> errs);

} // namespace pgamma
