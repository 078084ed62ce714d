#pragma once

#include <stdexcept>
#include <string>

namespace groundstate {

// Thrown when omega >= omega_{p,q}, i.e. no ground state exists.
struct ExistenceError : std::runtime_error {
    explicit ExistenceError(const std::string& msg) : std::runtime_error(msg) {}
};

// Thrown when f (or a reduced function) has no positive part to bracket.
struct NoPositivePartError : std::runtime_error {
    explicit NoPositivePartError(const std::string& msg) : std::runtime_error(msg) {}
};

// A root bracket [lo, hi] without a sign change.
struct BracketError : std::runtime_error {
    explicit BracketError(const std::string& msg) : std::runtime_error(msg) {}
};

// Iteration budget exhausted before reaching tolerance.
struct ConvergenceError : std::runtime_error {
    explicit ConvergenceError(const std::string& msg) : std::runtime_error(msg) {}
};

// Requested operation is outside the supported parameter regime.
struct UnsupportedCaseError : std::runtime_error {
    explicit UnsupportedCaseError(const std::string& msg) : std::runtime_error(msg) {}
};

// Shooting bracket endpoints failed the undershoot/overshoot dichotomy.
struct DichotomyError : std::runtime_error {
    explicit DichotomyError(const std::string& msg) : std::runtime_error(msg) {}
};

// Adaptive step size underflowed.
struct IntegrationError : std::runtime_error {
    explicit IntegrationError(const std::string& msg) : std::runtime_error(msg) {}
};

} // namespace groundstate
