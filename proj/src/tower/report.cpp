#include "ktower/tower/report.hpp"

#include <algorithm>

#include "ktower/error.hpp"

namespace ktower {

const std::vector<Citation>& citation_catalogue() {
    static const std::vector<Citation> catalogue = {
        {"gamma.uniform", "Γ uniform pro-p of dimension d: Γ_n/Γ_{n+1} ≅ (Z/pZ)^d"},
        {"gamma.involution-abelian", "fixed-point-free automorphism of order 2 ⇒ Γ ≅ Z_p^d"},
        {"gamma.nilpotent", "Γ(s) = ⟨x,y,z : [x,z]=[y,z]=1, [x,y]=z^(p^s)⟩, dim Γ(s) = 3"},
        {"gamma.order3", "Γ(1) has a fixed-point-free automorphism of order 3 when p ≡ 1 (mod 3)"},
        {"gamma.order-prime", "automorphism order m is a prime, m ≠ p when m > 2"},
        {"base.cm-cyclic", "K CM with Gal(K/Q) ≅ Z/2dZ and a unique prime of K above p"},
        {"base.inert-splits", "q inert in K/Q, q ∤ p ⇒ q splits completely in K_∞"},
        {"base.relative-inert", "place of K_0 inert in K/K_0 ⇒ splits completely in K_∞/K"},
        {"base.layer-degree", "[F_0:Q]·p^n ≥ 2d (applied with n = 0)"},
        {"assumption.1", "F/F_0 cyclic of degree m with F_0 totally imaginary"},
        {"assumption.2", "μ_p ⊂ F"},
        {"assumption.3", "a unique prime 𝔭 of F above p"},
        {"assumption.4", "(Cl(F)/⟨[𝔭]⟩)[p^∞] = 0"},
        {"p-rational", "μ_p ⊂ F: F p-rational ⟺ unique 𝔭 | p and (Cl(F)/⟨[𝔭]⟩)[p^∞] = 0"},
        {"tower.primes", "ℓ ≠ p prime, ℓ odd"},
        {"tower.t", "t = N + m·d·ℓ(ℓ−1)"},
        {"tower.kummer", "ord_{v_i}(α) = 1 for i = 1..t ⇒ v_i ramifies in K(ζ_ℓ, α^(1/ℓ))/K(ζ_ℓ)"},
        {"tower.ramified", "#{primes of K_n ramified in L_n} ≥ t·p^n"},
        {"tower.degree", "[L_n:Q] ≥ m·ℓ(ℓ−1)·d·p^n"},
        {"bounds.ambiguous", "r_ℓ(Am_st(L/K)) ≥ T − [L:Q], T = #ramified primes, L/K cyclic of degree ℓ"},
        {"bounds.class-contains", "Am_st(L_n/K_n) ⊂ Cl(L_n) ⇒ r_ℓ(Cl(L_n)) ≥ r_ℓ(Am_st(L_n/K_n))"},
        {"bounds.class-growth", "r_ℓ(Cl(L_n)) ≥ (t − m·d·ℓ(ℓ−1))·p^n = N·p^n"},
        {"bounds.selmer-class", "A(F)[ℓ] ≠ 0 ⇒ r_ℓ(R_ℓ∞(A/F)) ≥ r_ℓ(Cl_S(F))·r_ℓ(A(F)[ℓ]) − 2·dim A"},
        {"bounds.s-class-gap", "|r_ℓ(Cl(L_n)) − r_ℓ(Cl_S(L_n))| ≤ 2·s_0·ℓ^n"},
        {"bounds.inflate", "class-group tower built with N replaced by N + 2·s_0"},
        {"bounds.fine-selmer", "r_ℓ(R_ℓ∞(A/L_n)) ≥ N·q^n − 2·dim A, q = min(ℓ, p)"},
    };
    return catalogue;
}

const Citation& cite(std::string_view tag) {
    const auto& catalogue = citation_catalogue();
    auto it = std::find_if(catalogue.begin(), catalogue.end(), [&](const Citation& c) { return c.tag == tag; });
    if (it == catalogue.end()) throw Error(ErrorCode::InvalidArgument, "unknown citation tag " + std::string(tag));
    return *it;
}

void ValidationReport::fail(std::string constraint, std::string_view tag) {
    failures.push_back(Finding{std::move(constraint), std::string(cite(tag).tag)});
}

std::string ValidationReport::summary() const {
    std::string out;
    for (const auto& f : failures) {
        if (!out.empty()) out += "\n";
        out += f.constraint + " [" + f.citation + ": " + std::string(cite(f.citation).statement) + "]";
    }
    return out;
}

}  // namespace ktower
