#include "slidestats/error.hpp"

namespace slide {

std::string_view to_string(ErrorCode code) noexcept {
    switch (code) {
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::NonPositiveDistance: return "NonPositiveDistance";
    case ErrorCode::TooFewPoints: return "TooFewPoints";
    case ErrorCode::Overflow: return "Overflow";
    case ErrorCode::OracleUnstable: return "OracleUnstable";
    case ErrorCode::NotNormalized: return "NotNormalized";
    case ErrorCode::QuadratureNoConvergence: return "QuadratureNoConvergence";
    case ErrorCode::NonNegativeRho2: return "NonNegativeRho2";
    case ErrorCode::DuplicatePoint: return "DuplicatePoint";
    case ErrorCode::BadSpec: return "BadSpec";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::NonPositivePrice: return "NonPositivePrice";
    case ErrorCode::SeriesTooShort: return "SeriesTooShort";
    }
    return "Unknown";
}

}  // namespace slide
