#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace padic {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct NonPrimeError : Error {
    explicit NonPrimeError(const std::string& what) : Error(what) {}
};
struct InvalidPrecisionError : Error {
    using Error::Error;
};
struct ContextMismatchError : Error {
    using Error::Error;
};
struct NotAUnitError : Error {
    using Error::Error;
};
struct ValuationUnderflowError : Error {
    using Error::Error;
};
struct DivisionByZeroResidueError : Error {
    using Error::Error;
};
struct PrecisionExceededError : Error {
    using Error::Error;
};
struct EmptyPolynomialError : Error {
    using Error::Error;
};
struct SingularPointError : Error {
    using Error::Error;
};
struct PrimeTooLargeError : Error {
    using Error::Error;
};
struct ZeroPolynomialModPError : Error {
    using Error::Error;
};
struct InvalidSeedError : Error {
    using Error::Error;
};
struct SingularSeedError : Error {
    using Error::Error;
};
struct BudgetExceededError : Error {
    using Error::Error;
};
struct InsufficientTraceError : Error {
    using Error::Error;
};
struct DigitOutOfRangeError : Error {
    using Error::Error;
};

/// Parse failure carrying the byte offset of the offending token.
struct SyntaxError : Error {
    SyntaxError(const std::string& what, std::size_t position)
        : Error(what + " (at position " + std::to_string(position) + ")"), pos(position) {}
    std::size_t pos;
};

}  // namespace padic
