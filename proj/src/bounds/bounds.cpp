#include "ktower/bounds/bounds.hpp"

#include <algorithm>

#include "ktower/cyclotomic/splitting.hpp"
#include "ktower/error.hpp"

namespace ktower {

Integer ambiguous_lower(const Integer& T, const Integer& degree) {
    if (T < 0) throw Error(ErrorCode::InvalidArgument, "T must be non-negative");
    if (degree < 1) throw Error(ErrorCode::InvalidArgument, "degree must be >= 1");
    return std::max(T - degree, Integer(0));
}

Integer class_rank_lower(const TowerPlan& plan, std::uint64_t n) {
    const LayerCounts layer = plan.layer(n);
    Integer bound = ambiguous_lower(layer.ramified_lower, layer.degree_lower);
    Integer closed = plan.N * Integer::pow(Integer(plan.p), n);
    if (bound != closed) {
        throw Error(ErrorCode::ValidationFailed, "ambiguous bound " + bound.to_string() + " ≠ N·p^n = " +
                                                     closed.to_string() + " at n = " + std::to_string(n));
    }
    return bound;
}

Integer s_class_gap(std::uint64_t s0, std::uint64_t ell, std::uint64_t n) {
    if (s0 == 0) throw Error(ErrorCode::InvalidArgument, "s0 must be >= 1");
    return Integer(2 * s0) * Integer::pow(Integer(ell), n);
}

FineSelmerBound fine_selmer_lower(const TowerPlan& plan, const AbelianVarietyDesc& A, std::uint64_t s0,
                                  std::uint64_t n, InflationPolicy policy) {
    if (s0 == 0) throw Error(ErrorCode::InvalidArgument, "s0 must be >= 1");
    if (A.dim_A == 0) throw Error(ErrorCode::InvalidArgument, "dim A must be >= 1");
    if (!A.torsion_nontrivial_at_ell) {
        throw Error(ErrorCode::TorsionHypothesisUnmet,
                    A.label + ": A(Q(ζ_" + std::to_string(plan.ell) + "))[" + std::to_string(plan.ell) + "] = 0");
    }
    if (policy == InflationPolicy::Require && plan.inflation_s0 != s0) {
        throw Error(ErrorCode::PlanNotInflated, "plan built with s0 = " + std::to_string(plan.inflation_s0) +
                                                    ", certificate needs N + 2·s0 with s0 = " + std::to_string(s0));
    }
    FineSelmerBound out;
    out.q = std::min(plan.ell, plan.p);
    out.paper = plan.requested_N() * Integer::pow(Integer(out.q), n);
    out.conservative = std::max(out.paper - Integer(2 * A.dim_A), Integer(0));
    return out;
}

std::uint64_t count_s0(std::uint64_t ell, std::uint64_t p, const std::set<std::uint64_t>& bad_primes) {
    std::set<std::uint64_t> primes = bad_primes;
    primes.insert(p);
    std::uint64_t s0 = 0;
    for (std::uint64_t q : primes) s0 += q == ell ? 1 : splitting_data(q, ell).g;
    return s0;
}

}  // namespace ktower
