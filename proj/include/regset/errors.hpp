#pragma once

#include <stdexcept>
#include <string>

namespace regset {

// Bad user input: malformed spec, invalid table, out-of-range arguments.
struct InputError : std::invalid_argument {
    explicit InputError(const std::string& msg)
        : std::invalid_argument("input-error: " + msg) {}
};

// A requested (alpha, beta) pair is outside the feasible set.
struct InfeasiblePair : std::runtime_error {
    explicit InfeasiblePair(const std::string& msg)
        : std::runtime_error("infeasible-pair: " + msg) {}
};

// Exhaustive enumeration would exceed the configured candidate budget.
struct BudgetExceeded : std::runtime_error {
    explicit BudgetExceeded(const std::string& msg)
        : std::runtime_error("budget-exceeded: " + msg) {}
};

// An internal cross-check failed; signals a bug, not bad input.
struct VerificationFailure : std::logic_error {
    explicit VerificationFailure(const std::string& msg)
        : std::logic_error("verification-failure: " + msg) {}
};

}  // namespace regset
