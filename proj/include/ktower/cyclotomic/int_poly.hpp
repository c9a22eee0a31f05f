#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ktower/arith/integer.hpp"

namespace ktower {

/// Dense polynomial with Integer coefficients, constant term first.
/// Trailing zero coefficients are always stripped; the zero polynomial has
/// no coefficients and degree -1.
class IntPoly {
public:
    IntPoly() = default;
    explicit IntPoly(std::vector<Integer> coeffs);

    static IntPoly monomial(const Integer& coeff, std::size_t degree);
    static IntPoly x() { return monomial(1, 1); }

    /// Parses "x^3 - x^2 - 4*x - 1" style input. Throws ParseError.
    static IntPoly parse(std::string_view text, char variable = 'x');

    int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const noexcept { return coeffs_.empty(); }
    bool is_monic() const noexcept { return !coeffs_.empty() && coeffs_.back() == 1; }

    const std::vector<Integer>& coeffs() const noexcept { return coeffs_; }
    Integer coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Integer{}; }
    const Integer& leading() const;

    IntPoly derivative() const;

    /// Value at `point` modulo q.
    std::uint64_t evaluate_mod(std::uint64_t point, std::uint64_t q) const;

    /// Standard ASCII rendering, highest degree first.
    std::string to_string(char variable = 'x') const;

    friend IntPoly operator+(const IntPoly& a, const IntPoly& b);
    friend IntPoly operator-(const IntPoly& a, const IntPoly& b);
    friend IntPoly operator*(const IntPoly& a, const IntPoly& b);
    friend bool operator==(const IntPoly& a, const IntPoly& b) = default;

private:
    void trim();

    std::vector<Integer> coeffs_;
};

/// Quotient and remainder of `a` by a monic divisor.
std::pair<IntPoly, IntPoly> divmod_monic(const IntPoly& a, const IntPoly& divisor);

/// Sylvester-matrix resultant, evaluated with fraction-free elimination.
Integer resultant(const IntPoly& a, const IntPoly& b);

/// (-1)^(n(n-1)/2) Res(f, f') / lc(f). Requires deg f >= 1.
Integer discriminant(const IntPoly& f);

}  // namespace ktower
