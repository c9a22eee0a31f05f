#include "ktower/bounds/abelian_group.hpp"

#include "ktower/arith/primes.hpp"
#include "ktower/error.hpp"

namespace ktower {

FiniteAbelianGroup::FiniteAbelianGroup(std::vector<Integer> invariant_factors)
    : factors_(std::move(invariant_factors)) {
    for (std::size_t i = 0; i < factors_.size(); ++i) {
        if (factors_[i] < 2) {
            throw Error(ErrorCode::InvalidChain, "invariant factor " + factors_[i].to_string() + " is < 2");
        }
        if (i > 0 && !(factors_[i] % factors_[i - 1]).is_zero()) {
            throw Error(ErrorCode::InvalidChain,
                        factors_[i - 1].to_string() + " does not divide " + factors_[i].to_string());
        }
    }
}

Integer FiniteAbelianGroup::order() const {
    Integer n = 1;
    for (const auto& a : factors_) n *= a;
    return n;
}

std::string FiniteAbelianGroup::describe() const {
    if (factors_.empty()) return "1";
    std::string out;
    for (const auto& a : factors_) {
        if (!out.empty()) out += " x ";
        out += "Z/" + a.to_string();
    }
    return out;
}

std::uint64_t ell_rank(const FiniteAbelianGroup& group, std::uint64_t ell) {
    if (!is_prime_u64(ell)) throw Error(ErrorCode::InvalidArgument, std::to_string(ell) + " is not prime");
    std::uint64_t rank = 0;
    for (const auto& a : group.invariant_factors()) {
        if ((a % Integer(ell)).is_zero()) ++rank;
    }
    return rank;
}

}  // namespace ktower
