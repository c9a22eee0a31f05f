#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ktower/arith/integer.hpp"

namespace ktower {

/// Z/a_1 × ... × Z/a_k with a_i ≥ 2 and a_i | a_{i+1}. Empty = trivial.
class FiniteAbelianGroup {
public:
    FiniteAbelianGroup() = default;
    /// Throws InvalidChain when a factor is < 2 or fails to divide the next.
    explicit FiniteAbelianGroup(std::vector<Integer> invariant_factors);

    const std::vector<Integer>& invariant_factors() const noexcept { return factors_; }
    Integer order() const;
    std::string describe() const;

private:
    std::vector<Integer> factors_;
};

/// dim over Z/ℓ of G[ℓ]: the number of invariant factors divisible by ℓ.
std::uint64_t ell_rank(const FiniteAbelianGroup& group, std::uint64_t ell);

}  // namespace ktower
