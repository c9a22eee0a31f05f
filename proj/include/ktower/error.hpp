#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace ktower {

enum class ErrorCode {
    InvalidArgument,
    ParseError,
    OutOfRange,
    NotCoprime,
    SearchExhausted,
    ModulusMismatch,
    RamifiedPrime,
    NotTotallySplit,
    ZeroPolynomial,
    NotSquarefree,
    DiscriminantDivisible,
    ValidationFailed,
    EqualPrimes,
    InvalidChain,
    TorsionHypothesisUnmet,
    PlanNotInflated,
};

std::string_view to_string(ErrorCode code) noexcept;

// Every library failure is reported through this type; `code()` is the
// stable machine-readable part, `what()` carries the human-readable detail.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& detail);

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

}  // namespace ktower
