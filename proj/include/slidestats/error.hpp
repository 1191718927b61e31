#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace slide {

enum class ErrorCode {
    InvalidArgument,
    NonPositiveDistance,
    TooFewPoints,
    Overflow,
    OracleUnstable,
    NotNormalized,
    QuadratureNoConvergence,
    NonNegativeRho2,
    DuplicatePoint,
    BadSpec,
    ParseError,
    NonPositivePrice,
    SeriesTooShort,
};

std::string_view to_string(ErrorCode code) noexcept;

/// Exception carrying a machine-readable code next to the message.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

}  // namespace slide
