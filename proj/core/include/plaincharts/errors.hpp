#pragma once

#include <stdexcept>
#include <string>

namespace plaincharts {

/// Base class for all library errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Operands live in different polynomial rings.
struct RingMismatchError : Error {
    using Error::Error;
};

/// exact division requested but the divisor does not divide the dividend.
struct NotDivisibleError : Error {
    using Error::Error;
};

/// A variable name is not declared in the ring at hand.
struct UnknownVariableError : Error {
    using Error::Error;
};

/// A Groebner computation exceeded its pair-reduction budget.
struct BudgetExceededError : Error {
    using Error::Error;
};

/// Construction-time invariant failure (center spec, patch, rational map).
struct ValidationError : Error {
    using Error::Error;
};

/// Textual input failed to parse; carries position information.
struct ParseError : Error {
    ParseError(const std::string& msg, int line_, int col_, std::string expected_)
        : Error(msg), line(line_), col(col_), expected(std::move(expected_)) {}
    int line;
    int col;
    std::string expected;
};

} // namespace plaincharts
