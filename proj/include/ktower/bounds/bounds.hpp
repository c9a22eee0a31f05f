#pragma once

#include <cstdint>
#include <set>
#include <string>

#include "ktower/arith/integer.hpp"
#include "ktower/tower/assumption.hpp"
#include "ktower/tower/plan.hpp"

namespace ktower {

/// max(T − degree, 0). Throws InvalidArgument for T < 0 or degree < 1.
Integer ambiguous_lower(const Integer& T, const Integer& degree);

/// N·p^n, computed as ambiguous_lower(t·p^n, m·d·ℓ(ℓ−1)·p^n) and checked
/// against the closed form. N is the plan's effective (possibly inflated) N.
Integer class_rank_lower(const TowerPlan& plan, std::uint64_t n);

/// 2·s0·ℓ^n. Throws InvalidArgument for s0 = 0.
Integer s_class_gap(std::uint64_t s0, std::uint64_t ell, std::uint64_t n);

struct AbelianVarietyDesc {
    std::string label;
    std::uint64_t dim_A = 1;
    bool torsion_nontrivial_at_ell = false;  // A(Q(ζ_ℓ))[ℓ] ≠ 0
    std::set<std::uint64_t> bad_primes;
    Provenance provenance = Provenance::Asserted;
};

enum class InflationPolicy {
    Require,        // the plan must have been built with N + 2·s0
    PaperFaithful,  // accept an un-inflated plan, as the worked examples do
};

struct FineSelmerBound {
    std::uint64_t q = 0;  // min(ℓ, p)
    Integer paper;        // N·q^n
    Integer conservative; // max(N·q^n − 2·dim A, 0)
};

/// N here is the requested (un-inflated) N. Throws TorsionHypothesisUnmet,
/// PlanNotInflated (Require policy only), InvalidArgument for s0 = 0 or
/// dim A = 0.
FineSelmerBound fine_selmer_lower(const TowerPlan& plan, const AbelianVarietyDesc& A, std::uint64_t s0,
                                  std::uint64_t n, InflationPolicy policy = InflationPolicy::Require);

/// Number of finite places of Q(ζ_ℓ) above p and the bad primes: the s0 of
/// S = S_p ∪ S_bad ∪ S_∞.
std::uint64_t count_s0(std::uint64_t ell, std::uint64_t p, const std::set<std::uint64_t>& bad_primes);

}  // namespace ktower
