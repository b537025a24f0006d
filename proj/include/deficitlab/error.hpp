#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace deficitlab {

enum class ErrorCode {
    RejectSpec,
    UnknownSymbol,
    DivisionByZero,
    NotInvertible,
    ContextMismatch,
    ZeroPolynomial,
    DegreeOverflow,
    UnsatisfiableConstraints,
    ArityMismatch,
    InadmissibleContext,
    DegreeIncompatible,
    SyntaxError,
    ArityViolation,
};

/// Upper-case wire name, e.g. "ZERO_POLYNOMIAL".
std::string_view to_string(ErrorCode code) noexcept;

/// Every failure in the library is reported through this type; `code()` is stable
/// and is what the CLI maps to exit statuses.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message, std::optional<std::size_t> position = std::nullopt);

    ErrorCode code() const noexcept { return code_; }
    /// Character offset into parsed text, when the error came from a parser.
    std::optional<std::size_t> position() const noexcept { return position_; }

private:
    ErrorCode code_;
    std::optional<std::size_t> position_;
};

}  // namespace deficitlab
