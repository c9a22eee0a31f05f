#include "ktower/error.hpp"

namespace ktower {

std::string_view to_string(ErrorCode code) noexcept {
    switch (code) {
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::OutOfRange: return "OutOfRange";
    case ErrorCode::NotCoprime: return "NotCoprime";
    case ErrorCode::SearchExhausted: return "SearchExhausted";
    case ErrorCode::ModulusMismatch: return "ModulusMismatch";
    case ErrorCode::RamifiedPrime: return "RamifiedPrime";
    case ErrorCode::NotTotallySplit: return "NotTotallySplit";
    case ErrorCode::ZeroPolynomial: return "ZeroPolynomial";
    case ErrorCode::NotSquarefree: return "NotSquarefree";
    case ErrorCode::DiscriminantDivisible: return "DiscriminantDivisible";
    case ErrorCode::ValidationFailed: return "ValidationFailed";
    case ErrorCode::EqualPrimes: return "EqualPrimes";
    case ErrorCode::InvalidChain: return "InvalidChain";
    case ErrorCode::TorsionHypothesisUnmet: return "TorsionHypothesisUnmet";
    case ErrorCode::PlanNotInflated: return "PlanNotInflated";
    }
    return "Unknown";
}

Error::Error(ErrorCode code, const std::string& detail)
    : std::runtime_error(std::string(to_string(code)) + ": " + detail), code_(code) {}

}  // namespace ktower
