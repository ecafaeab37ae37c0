#pragma once

#include <stdexcept>
#include <string>

namespace stairconv {

/// Two points (or two point sets) share a coordinate value on some axis.
/// The stair predicates require per-axis distinctness; callers that sample
/// random inputs are expected to reject-and-redraw instead of perturbing.
struct SharedCoordinateError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct DimensionMismatchError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct EmptyInputError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// A coordinate lies outside the domain required by the operation
/// (e.g. outside [0,1]^d or outside the open unit cube).
struct DomainError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// The ordered-diagonal preconditions fail; the message names the violated
/// inequality, e.g. "p_i <= q_i violated at i=2 (p_2=0.7, q_2=0.5)".
struct ConditionViolation : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// An enumeration or evaluation budget was exceeded (or is too small to start).
struct BudgetError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// An objective evaluator produced a non-finite value.
struct EvaluationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace stairconv
