#include "ktower/tower/gamma.hpp"

#include "ktower/arith/primes.hpp"

namespace ktower {

std::string_view to_string(GammaFamily family) noexcept {
    switch (family) {
    case GammaFamily::Abelian: return "abelian";
    case GammaFamily::Nilpotent: return "nilpotent";
    case GammaFamily::Custom: return "custom";
    }
    return "unknown";
}

std::optional<GammaFamily> parse_gamma_family(std::string_view text) {
    if (text == "abelian") return GammaFamily::Abelian;
    if (text == "nilpotent") return GammaFamily::Nilpotent;
    if (text == "custom") return GammaFamily::Custom;
    return std::nullopt;
}

std::string GammaSpec::describe() const {
    const std::string ps = std::to_string(p);
    switch (family) {
    case GammaFamily::Abelian:
        return d == 1 ? "Z_" + ps : "Z_" + ps + "^" + std::to_string(d);
    case GammaFamily::Nilpotent:
        return "Γ(" + std::to_string(s) + ") = ⟨x,y,z : [x,z]=[y,z]=1, [x,y]=z^(" + ps + "^" + std::to_string(s) +
               ")⟩";
    case GammaFamily::Custom:
        return presentation;
    }
    return {};
}

ValidationReport validate_gamma(const GammaSpec& spec) {
    ValidationReport report;
    if (!is_prime_u64(spec.p)) report.fail("p = " + std::to_string(spec.p) + " is not prime", "gamma.uniform");
    if (spec.d < 1) report.fail("dimension d must be >= 1", "gamma.uniform");
    if (!is_prime_u64(spec.m)) {
        report.fail("automorphism order m = " + std::to_string(spec.m) + " is not prime", "gamma.order-prime");
    } else if (spec.m > 2 && spec.m == spec.p) {
        report.fail("automorphism order m must differ from p when m > 2", "gamma.order-prime");
    }
    if (spec.m == 2 && spec.family != GammaFamily::Abelian) {
        report.fail("m = 2 requires the abelian family Z_p^d", "gamma.involution-abelian");
    }
    switch (spec.family) {
    case GammaFamily::Abelian:
        break;
    case GammaFamily::Nilpotent:
        if (spec.d != 3) report.fail("Γ(s) has dimension 3, got d = " + std::to_string(spec.d), "gamma.nilpotent");
        if (spec.s < 1) report.fail("Γ(s) needs s >= 1", "gamma.nilpotent");
        if (spec.s == 1 && spec.m == 3 && spec.p % 3 != 1) {
            report.fail("p ≢ 1 mod 3 (p = " + std::to_string(spec.p) + ")", "gamma.order3");
        }
        report.notes.push_back("presentation " + spec.describe());
        break;
    case GammaFamily::Custom:
        if (spec.presentation.empty()) report.fail("custom family needs a presentation", "gamma.uniform");
        report.notes.push_back("custom presentation taken as given: " + spec.presentation);
        break;
    }
    return report;
}

}  // namespace ktower
