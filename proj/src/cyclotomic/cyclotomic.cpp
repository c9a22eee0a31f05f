#include "ktower/cyclotomic/cyclotomic.hpp"

#include <map>

#include "ktower/arith/number_theory.hpp"
#include "ktower/error.hpp"

namespace ktower {

namespace {

std::vector<std::uint64_t> divisors(std::uint64_t m) {
    std::vector<std::uint64_t> small, large;
    for (std::uint64_t d = 1; d <= m / d; ++d) {
        if (m % d != 0) continue;
        small.push_back(d);
        if (d != m / d) large.push_back(m / d);
    }
    small.insert(small.end(), large.rbegin(), large.rend());
    return small;
}

// Reduce in place modulo a monic polynomial of degree `deg`.
void reduce_monic(std::vector<Integer>& c, const IntPoly& monic) {
    const auto deg = static_cast<std::size_t>(monic.degree());
    const auto& mc = monic.coeffs();
    for (std::size_t i = c.size(); i-- > deg;) {
        if (c[i].is_zero()) continue;
        const Integer top = c[i];
        const std::size_t shift = i - deg;
        for (std::size_t j = 0; j < deg; ++j) c[shift + j] -= top * mc[j];
        c[i] = 0;
    }
    c.resize(deg);
}

void require_same_field(const CycloElement& a, const CycloElement& b) {
    if (a.modulus().m != b.modulus().m) {
        throw Error(ErrorCode::ModulusMismatch, "Q(zeta_" + std::to_string(a.modulus().m) + ") vs Q(zeta_" +
                                                    std::to_string(b.modulus().m) + ")");
    }
}

}  // namespace

CycloModulus cyclotomic_polynomial(std::uint64_t m) {
    if (m == 0) throw Error(ErrorCode::InvalidArgument, "conductor must be >= 1");
    std::map<std::uint64_t, IntPoly> phi_of;
    for (std::uint64_t d : divisors(m)) {
        IntPoly value = IntPoly::monomial(1, d) - IntPoly::monomial(1, 0);
        for (const auto& [e, phi_e] : phi_of) {
            if (d % e != 0) continue;
            auto [quot, rem] = divmod_monic(value, phi_e);
            if (!rem.is_zero()) throw Error(ErrorCode::InvalidArgument, "inexact cyclotomic division");
            value = std::move(quot);
        }
        phi_of.emplace(d, std::move(value));
    }
    CycloModulus out;
    out.m = m;
    out.phi = euler_phi(m);
    out.polynomial = std::move(phi_of.at(m));
    return out;
}

ModulusPtr make_cyclotomic_field(std::uint64_t m) {
    return std::make_shared<const CycloModulus>(cyclotomic_polynomial(m));
}

CycloElement::CycloElement(ModulusPtr modulus, std::vector<Integer> coeffs)
    : modulus_(std::move(modulus)), coeffs_(std::move(coeffs)) {
    if (!modulus_) throw Error(ErrorCode::InvalidArgument, "null cyclotomic modulus");
    reduce_monic(coeffs_, modulus_->polynomial);
    coeffs_.resize(modulus_->phi);
}

CycloElement CycloElement::constant(ModulusPtr modulus, const Integer& value) {
    return CycloElement(std::move(modulus), {value});
}

CycloElement CycloElement::zeta_power(ModulusPtr modulus, std::uint64_t k) {
    const std::uint64_t m = modulus->m;
    std::vector<Integer> c(k % m + 1);
    c[k % m] = 1;
    return CycloElement(std::move(modulus), std::move(c));
}

bool CycloElement::is_rational() const noexcept {
    for (std::size_t i = 1; i < coeffs_.size(); ++i) {
        if (!coeffs_[i].is_zero()) return false;
    }
    return true;
}

CycloElement operator+(const CycloElement& a, const CycloElement& b) {
    require_same_field(a, b);
    std::vector<Integer> c(a.coeffs_.size());
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.coeffs_[i] + b.coeffs_[i];
    return CycloElement(a.modulus_, std::move(c));
}

CycloElement operator-(const CycloElement& a, const CycloElement& b) {
    require_same_field(a, b);
    std::vector<Integer> c(a.coeffs_.size());
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.coeffs_[i] - b.coeffs_[i];
    return CycloElement(a.modulus_, std::move(c));
}

CycloElement operator*(const CycloElement& a, const CycloElement& b) {
    require_same_field(a, b);
    const std::size_t n = a.coeffs_.size();
    std::vector<Integer> c(2 * n - 1);
    for (std::size_t i = 0; i < n; ++i) {
        if (a.coeffs_[i].is_zero()) continue;
        for (std::size_t j = 0; j < n; ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return CycloElement(a.modulus_, std::move(c));
}

bool operator==(const CycloElement& a, const CycloElement& b) {
    return a.modulus_->m == b.modulus_->m && a.coeffs_ == b.coeffs_;
}

CycloElement cyclo_mul(const CycloElement& a, const CycloElement& b) { return a * b; }

FactorizationCheck verify_factorization(const ModulusPtr& modulus, const Integer& target,
                                        std::span<const CycloElement> factors) {
    CycloElement product = CycloElement::constant(modulus, 1);
    for (const auto& f : factors) product = product * f;

    FactorizationCheck check{product, FactorizationCheck::Outcome::Mismatch, std::nullopt};
    const CycloElement expected = CycloElement::constant(modulus, target);
    if (product == expected) {
        check.outcome = FactorizationCheck::Outcome::Exact;
        return check;
    }
    // Roots of unity in Q(zeta_m) are +-zeta^k.
    for (std::uint64_t k = 0; k < modulus->m; ++k) {
        const CycloElement shifted = expected * CycloElement::zeta_power(modulus, k);
        for (int sign : {1, -1}) {
            const CycloElement candidate =
                sign > 0 ? shifted : CycloElement::constant(modulus, 0) - shifted;
            if (candidate == product) {
                check.outcome = FactorizationCheck::Outcome::UnitMultiple;
                check.unit = RootOfUnity{sign, k};
                return check;
            }
        }
    }
    return check;
}

}  // namespace ktower
