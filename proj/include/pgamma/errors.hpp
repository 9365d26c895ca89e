#pragma once

#include <stdexcept>
#include <string>

namespace pgamma {

// Argument outside the function's domain (x <= 0, non-finite input, p < 1).
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// Derivative order outside [0, kMaxDerivOrder] or below an operation's minimum.
class OrderError : public std::out_of_range {
public:
    using std::out_of_range::out_of_range;
};

// Adaptive quadrature could not reach the requested tolerance.
class ConvergenceError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Violated operation precondition that is not a domain issue
// (e.g. asking for a CM violation when alpha <= 1).
class ArgumentError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

} // namespace pgamma
