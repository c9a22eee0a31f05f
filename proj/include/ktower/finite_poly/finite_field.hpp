#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "ktower/arith/integer.hpp"

namespace ktower {

/// Element of F_{q^f}: coefficients of a polynomial of degree < f in the
/// field generator, constant term first, always of length exactly f.
struct FqElement {
    std::vector<std::uint64_t> coeffs;

    friend bool operator==(const FqElement&, const FqElement&) = default;
};

/// F_{q^f} = F_q[x] / (generator). For f = 1 the generator is x and
/// elements are plain residues mod q.
class FiniteField {
public:
    /// Trusts the caller that `generator` (monic, degree f, constant term
    /// first) is irreducible; use build_extension_field for a certified one.
    FiniteField(std::uint64_t q, std::vector<std::uint64_t> generator);

    static std::shared_ptr<const FiniteField> prime_field(std::uint64_t q);

    std::uint64_t characteristic() const noexcept { return q_; }
    std::size_t degree() const noexcept { return f_; }
    const std::vector<std::uint64_t>& generator() const noexcept { return generator_; }
    /// q^f.
    const Integer& order() const noexcept { return order_; }

    FqElement zero() const;
    FqElement one() const;
    FqElement from_int(std::int64_t value) const;
    FqElement from_integer(const Integer& value) const;
    /// The class of x, a generator of the field over F_q.
    FqElement primitive() const;

    bool is_zero(const FqElement& a) const noexcept;
    FqElement add(const FqElement& a, const FqElement& b) const;
    FqElement sub(const FqElement& a, const FqElement& b) const;
    FqElement neg(const FqElement& a) const;
    FqElement mul(const FqElement& a, const FqElement& b) const;
    FqElement pow(const FqElement& a, const Integer& exponent) const;
    /// Throws InvalidArgument for zero.
    FqElement inv(const FqElement& a) const;

    /// Every element, in lexicographic order of coefficient vectors.
    std::vector<FqElement> elements() const;

    std::string describe() const;

    friend bool operator==(const FiniteField& a, const FiniteField& b) noexcept {
        return a.q_ == b.q_ && a.generator_ == b.generator_;
    }

private:
    std::uint64_t q_;
    std::size_t f_;
    std::vector<std::uint64_t> generator_;
    Integer order_;
};

using FieldPtr = std::shared_ptr<const FiniteField>;

/// F_{q^f} with the first monic irreducible generator of degree f, scanning
/// x^f + c_{f-1} x^{f-1} + ... + c_0 in increasing order of
/// sum c_i q^i and certifying the choice with is_irreducible.
FieldPtr build_extension_field(std::uint64_t q, std::size_t f);

}  // namespace ktower
