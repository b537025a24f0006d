#include "deficitlab/error.hpp"

namespace deficitlab {

std::string_view to_string(ErrorCode code) noexcept {
    switch (code) {
        case ErrorCode::RejectSpec: return "REJECT_SPEC";
        case ErrorCode::UnknownSymbol: return "UNKNOWN_SYMBOL";
        case ErrorCode::DivisionByZero: return "DIVISION_BY_ZERO";
        case ErrorCode::NotInvertible: return "NOT_INVERTIBLE";
        case ErrorCode::ContextMismatch: return "CONTEXT_MISMATCH";
        case ErrorCode::ZeroPolynomial: return "ZERO_POLYNOMIAL";
        case ErrorCode::DegreeOverflow: return "DEGREE_OVERFLOW";
        case ErrorCode::UnsatisfiableConstraints: return "UNSATISFIABLE_CONSTRAINTS";
        case ErrorCode::ArityMismatch: return "ARITY_MISMATCH";
        case ErrorCode::InadmissibleContext: return "INADMISSIBLE_CONTEXT";
        case ErrorCode::DegreeIncompatible: return "DEGREE_INCOMPATIBLE";
        case ErrorCode::SyntaxError: return "SYNTAX_ERROR";
        case ErrorCode::ArityViolation: return "ARITY_VIOLATION";
    }
    return "UNKNOWN";
}

Error::Error(ErrorCode code, const std::string& message, std::optional<std::size_t> position)
    : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code), position_(position) {}

}  // namespace deficitlab
