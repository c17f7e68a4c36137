#ifndef LATTICECOUNT_ERROR_HPP
#define LATTICECOUNT_ERROR_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace latticecount {

enum class ErrorCode {
    EmptyPattern,
    BadChar,
    DepthNonzero,
    PatternTooShort,
    CapExceeded,
    TruncationTooLow,
    BelowBoundary,
    InsufficientPoints,
    PolynomialMismatch,
    NotInvertible,
    BadConstantTerm,
    NotDeltaSeries,
    NoSolution,
    NotBasic,
    BadDims,
    FormulaDefect,
    IdentityViolation,
    BadDocument,
    InvalidArgument,
};

const char* error_code_name(ErrorCode code) noexcept;

// Single exception type for the library; the C API maps `code()` onto status values.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message)
        : std::runtime_error(message), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

class BadCharError : public Error {
public:
    BadCharError(std::size_t position, char ch);

    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

} // namespace latticecount

#endif
