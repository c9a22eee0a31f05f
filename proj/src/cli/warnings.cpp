#include "ktower/cli/warnings.hpp"

#include <algorithm>

#include "ktower/error.hpp"

namespace ktower {

const std::vector<WarningInfo>& warning_catalogue() {
    static const std::vector<WarningInfo> catalogue = {
        {"W-EX1-ALPHA", "printed α for example 1 carries one extra prime factor beyond the 42 listed primes"},
        {"W-EX2-T-FORMULA", "printed t for example 2 disagrees with t = N + 2dℓ(ℓ−1) at the stated d"},
        {"W-EX2-DIMENSION", "example 2 names both Z_3^3 and Z_3^2 for the same extension"},
        {"W-EX3-UNIT", "printed factors of 43 multiply to 43 times a root of unity, not to 43"},
        {"W-EX3-PRIMES-NOT-MINIMAL", "example 3 primes satisfy the predicate but are not the smallest such primes"},
        {"W-EX3-ALPHA", "printed α for example 3 is not the product of the selected primes; kept as display data"},
        {"W-EX3-LAYER-BASE", "example 3 prints the class-group bound as 6·3^n and with ℓ = 5, while N·p^n = 6·7^n"},
        {"W-LEMMA-GAP-DIRECTION", "S-class gap is applied as an upper bound with base ℓ^n"},
        {"W-SELMER-FINAL-STEP", "N·q^n − 2·dim A ≥ N·q^n does not hold for dim A ≥ 1"},
        {"W-SELMER-NOT-INFLATED", "fine-Selmer rows use a plan without the N + 2·s0 inflation"},
    };
    return catalogue;
}

const WarningInfo& warning_info(std::string_view code) {
    const auto& catalogue = warning_catalogue();
    auto it = std::find_if(catalogue.begin(), catalogue.end(), [&](const WarningInfo& w) { return w.code == code; });
    if (it == catalogue.end()) throw Error(ErrorCode::InvalidArgument, "unknown warning code " + std::string(code));
    return *it;
}

}  // namespace ktower
