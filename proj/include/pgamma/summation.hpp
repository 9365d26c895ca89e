#pragma once

#include <cmath>

namespace pgamma {

/// Neumaier's variant of Kahan summation. The running compensation also
/// absorbs the error when an addend is larger than the partial sum.
class CompensatedSum {
public:
    CompensatedSum& operator+=(double term) noexcept
    {
        const double t = sum_ + term;
        if (std::abs(sum_) >= std::abs(term))
            comp_ += (sum_ - t) + term;
        else
            comp_ += (term - t) + sum_;
        sum_ = t;
        return *this;
    }

    double value() const noexcept { return sum_ + comp_; }

private:
    double sum_ = 0.0;
    double comp_ = 0.0;
};

} // namespace pgamma
