#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <vector>

#include "ktower/arith/integer.hpp"
#include "ktower/cyclotomic/int_poly.hpp"

namespace ktower {

/// Conductor m together with phi(m) and the m-th cyclotomic polynomial.
struct CycloModulus {
    std::uint64_t m = 1;
    std::uint64_t phi = 1;
    IntPoly polynomial;
};

/// Phi_m by exact division of x^m - 1 by the Phi_d for proper divisors d.
CycloModulus cyclotomic_polynomial(std::uint64_t m);

using ModulusPtr = std::shared_ptr<const CycloModulus>;

ModulusPtr make_cyclotomic_field(std::uint64_t m);

/// Element of Q(zeta_m) with integral coefficients in the power basis
/// 1, zeta, ..., zeta^(phi(m)-1). Always fully reduced modulo Phi_m.
class CycloElement {
public:
    /// Reduces `coeffs` (any length, constant term first) modulo Phi_m.
    CycloElement(ModulusPtr modulus, std::vector<Integer> coeffs);

    static CycloElement constant(ModulusPtr modulus, const Integer& value);
    static CycloElement zeta_power(ModulusPtr modulus, std::uint64_t k);

    const CycloModulus& modulus() const noexcept { return *modulus_; }
    const ModulusPtr& modulus_ptr() const noexcept { return modulus_; }
    const std::vector<Integer>& coeffs() const noexcept { return coeffs_; }

    bool is_rational() const noexcept;
    /// Coefficient of zeta^0.
    const Integer& rational_part() const noexcept { return coeffs_.front(); }

    friend CycloElement operator+(const CycloElement& a, const CycloElement& b);
    friend CycloElement operator-(const CycloElement& a, const CycloElement& b);
    friend CycloElement operator*(const CycloElement& a, const CycloElement& b);
    friend bool operator==(const CycloElement& a, const CycloElement& b);

private:
    ModulusPtr modulus_;
    std::vector<Integer> coeffs_;
};

/// Product reduced modulo Phi_m. Throws ModulusMismatch.
CycloElement cyclo_mul(const CycloElement& a, const CycloElement& b);

struct RootOfUnity {
    int sign = 1;          // +1 or -1
    std::uint64_t power = 0;  // exponent k in sign * zeta^k
};

struct FactorizationCheck {
    enum class Outcome { Exact, UnitMultiple, Mismatch };

    CycloElement product;
    Outcome outcome = Outcome::Mismatch;
    /// Set when outcome is UnitMultiple: product = unit * target.
    std::optional<RootOfUnity> unit;
};

/// Multiplies `factors` and compares the product against the rational
/// integer `target`, detecting a discrepancy by a root of unity.
FactorizationCheck verify_factorization(const ModulusPtr& modulus, const Integer& target,
                                        std::span<const CycloElement> factors);

}  // namespace ktower
