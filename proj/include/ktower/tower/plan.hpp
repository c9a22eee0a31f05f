#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ktower/arith/integer.hpp"
#include "ktower/cyclotomic/int_poly.hpp"
#include "ktower/tower/assumption.hpp"
#include "ktower/tower/gamma.hpp"
#include "ktower/tower/report.hpp"

namespace ktower {

/// t = N + m·d·ℓ(ℓ−1).
Integer compute_t(const Integer& N, std::uint64_t m, std::uint64_t d, std::uint64_t ell);

/// The field K whose inert primes are selected.
///
/// Cyclotomic: K = Q(ζ_c), used when m = 2; a rational prime is selected
/// when it is inert in K.
/// Relative: K = F_0(θ) with F_0 = Q(ζ_c) and θ a root of a monic integer
/// polynomial of degree m; a rational prime is selected when it splits
/// completely in F_0 and every prime above it is inert in K/F_0.
struct BaseField {
    enum class Kind { Cyclotomic, Relative };

    Kind kind = Kind::Cyclotomic;
    std::uint64_t conductor = 3;
    std::optional<IntPoly> relative_poly;

    static BaseField cyclotomic(std::uint64_t conductor);
    static BaseField relative(std::uint64_t conductor, IntPoly poly);

    std::string describe() const;
    /// Number of places v_i contributed by each selected rational prime.
    std::uint64_t places_per_prime() const;
    /// The inertness predicate. Primes dividing the conductor or the
    /// discriminant are never selected.
    bool selects(std::uint64_t q) const;
};

/// A selected place of K_0: an inert rational prime (q), or a degree-one
/// prime (q, ζ_c − root) of F_0.
struct Place {
    std::uint64_t q = 0;
    std::optional<std::uint64_t> root;
    std::uint64_t conductor = 0;

    std::string describe() const;
};

struct FieldNode {
    std::string id;
    std::string label;
};

/// Inclusion lower ⊂ upper. `degree` is set for finite steps; Γ-steps carry
/// the label "Γ" and contribute d·p^n at layer n.
struct FieldEdge {
    std::string lower;
    std::string upper;
    std::string label;
    std::optional<std::uint64_t> degree;
};

struct FieldDiagram {
    std::vector<FieldNode> nodes;
    std::vector<FieldEdge> edges;

    const FieldEdge* find(std::string_view lower, std::string_view upper) const;
};

struct LayerCounts {
    std::uint64_t n = 0;
    Integer ramified_lower;  // t·p^n
    Integer degree_lower;    // m·ℓ(ℓ−1)·d·p^n
};

struct TowerPlan {
    std::uint64_t ell = 0;
    std::uint64_t p = 0;
    Integer N;                      // the N entering t (already inflated)
    std::uint64_t inflation_s0 = 0; // N = requested + 2·s0; 0 when not inflated
    GammaSpec gamma;
    BaseField base;
    std::optional<AssumptionReport> assumption;

    std::uint64_t q_min = 0;        // min(ℓ, p)
    Integer t;
    std::vector<Integer> selected_primes;  // rational primes, ascending
    std::vector<Place> places;             // v_1..v_t
    Integer alpha;
    FieldDiagram diagram;
    std::vector<std::string> notes;

    Integer requested_N() const { return N - Integer(2 * inflation_s0); }
    /// m·d·ℓ(ℓ−1).
    Integer degree_factor() const;
    LayerCounts layer(std::uint64_t n) const;
};

struct TowerRequest {
    std::uint64_t ell = 0;
    std::uint64_t p = 0;
    Integer N = 1;
    GammaSpec gamma;
    BaseField base;
    std::optional<AssumptionChecklist> checklist;
    /// When nonzero the plan is built with N + 2·s0 in place of N.
    std::uint64_t inflate_s0 = 0;
    /// Use these rational primes instead of the ascending search; each is
    /// re-verified against the predicate.
    std::optional<std::vector<std::uint64_t>> explicit_primes;
};

/// Every hypothesis check except prime selection; never throws for unmet
/// hypotheses. The assumption report, when computed, is stored in `assumption`.
ValidationReport validate_request(const TowerRequest& request,
                                  std::optional<AssumptionReport>* assumption = nullptr);

/// Throws EqualPrimes when ℓ = p and ValidationFailed (with every failed
/// constraint and its citation) for any other unmet hypothesis.
TowerPlan build_tower_plan(const TowerRequest& request);

/// Re-derives every plan invariant from scratch.
ValidationReport verify_plan(const TowerPlan& plan);

}  // namespace ktower
