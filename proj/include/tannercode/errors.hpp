#pragma once

#include <stdexcept>
#include <string>

namespace tanner {

// Caller violated a documented precondition (bad dimensions, infeasible
// parameters, out-of-range arguments). Maps to CLI exit code 2.
struct UsageError : std::invalid_argument {
    explicit UsageError(const std::string& msg) : std::invalid_argument(msg) {}
};

// Instance is too large for an exact/enumerative routine.
struct CapacityError : std::runtime_error {
    explicit CapacityError(const std::string& msg) : std::runtime_error(msg) {}
};

// Randomized construction exhausted its retry budget.
struct GenerationError : std::runtime_error {
    explicit GenerationError(const std::string& msg) : std::runtime_error(msg) {}
};

// Violated internal invariant; never expected on valid inputs.
struct InternalError : std::logic_error {
    explicit InternalError(const std::string& msg) : std::logic_error(msg) {}
};

}  // namespace tanner
