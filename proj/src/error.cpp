#include "latticecount/error.hpp"

namespace latticecount {

const char* error_code_name(ErrorCode code) noexcept {
    switch (code) {
    case ErrorCode::EmptyPattern: return "EMPTY_PATTERN";
    case ErrorCode::BadChar: return "BAD_CHAR";
    case ErrorCode::DepthNonzero: return "DEPTH_NONZERO";
    case ErrorCode::PatternTooShort: return "PATTERN_TOO_SHORT";
    case ErrorCode::CapExceeded: return "CAP_EXCEEDED";
    case ErrorCode::TruncationTooLow: return "TRUNCATION_TOO_LOW";
    case ErrorCode::BelowBoundary: return "BELOW_BOUNDARY";
    case ErrorCode::InsufficientPoints: return "INSUFFICIENT_POINTS";
    case ErrorCode::PolynomialMismatch: return "POLYNOMIAL_MISMATCH";
    case ErrorCode::NotInvertible: return "NOT_INVERTIBLE";
    case ErrorCode::BadConstantTerm: return "BAD_CONSTANT_TERM";
    case ErrorCode::NotDeltaSeries: return "NOT_DELTA_SERIES";
    case ErrorCode::NoSolution: return "NO_SOLUTION";
    case ErrorCode::NotBasic: return "NOT_BASIC";
    case ErrorCode::BadDims: return "BAD_DIMS";
    case ErrorCode::FormulaDefect: return "FORMULA_DEFECT";
    case ErrorCode::IdentityViolation: return "IDENTITY_VIOLATION";
    case ErrorCode::BadDocument: return "BAD_DOCUMENT";
    case ErrorCode::InvalidArgument: return "INVALID_ARGUMENT";
    }
    return "UNKNOWN";
}

BadCharError::BadCharError(std::size_t position, char ch)
    : Error(ErrorCode::BadChar,
            "unexpected character '" + std::string(1, ch) + "' at index " + std::to_string(position)),
      position_(position) {}

} // namespace latticecount
