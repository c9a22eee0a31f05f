#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "ktower/cyclotomic/int_poly.hpp"
#include "ktower/finite_poly/finite_field.hpp"

namespace ktower {

/// Polynomial over a finite field, constant term first. The leading
/// coefficient is always nonzero; the zero polynomial is empty.
class FqPoly {
public:
    explicit FqPoly(FieldPtr field);
    FqPoly(FieldPtr field, std::vector<FqElement> coeffs);

    static FqPoly x(FieldPtr field);
    static FqPoly constant(FieldPtr field, const FqElement& c);
    /// Coefficient-wise reduction of an integer polynomial.
    static FqPoly reduce(const IntPoly& poly, FieldPtr field);

    const FiniteField& field() const noexcept { return *field_; }
    const FieldPtr& field_ptr() const noexcept { return field_; }
    const std::vector<FqElement>& coeffs() const noexcept { return coeffs_; }

    int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const noexcept { return coeffs_.empty(); }
    bool is_one() const;
    const FqElement& leading() const;

    FqPoly monic() const;
    FqPoly derivative() const;

    std::string to_string() const;

    friend FqPoly operator+(const FqPoly& a, const FqPoly& b);
    friend FqPoly operator-(const FqPoly& a, const FqPoly& b);
    friend FqPoly operator*(const FqPoly& a, const FqPoly& b);
    friend bool operator==(const FqPoly& a, const FqPoly& b);

private:
    void trim();

    FieldPtr field_;
    std::vector<FqElement> coeffs_;
};

/// Throws ZeroPolynomial for a zero divisor.
std::pair<FqPoly, FqPoly> divmod(const FqPoly& a, const FqPoly& b);
FqPoly operator%(const FqPoly& a, const FqPoly& b);

/// Monic gcd (zero only if both inputs are zero).
FqPoly gcd(FqPoly a, FqPoly b);

/// base^exponent mod modulus by repeated squaring.
FqPoly powmod(const FqPoly& base, std::uint64_t exponent, const FqPoly& modulus);

/// base^(Q^times) mod modulus where Q is the field order, computed as
/// f * times successive q-th powers so no exponent exceeds the characteristic.
FqPoly frobenius(const FqPoly& base, std::uint64_t times, const FqPoly& modulus);

}  // namespace ktower
