#pragma once

#include <compare>
#include <concepts>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace ktower {

/// Arbitrary-precision signed integer.
///
/// Stored as sign plus magnitude in base 2^32, least significant limb first.
/// The representation is always canonical: no leading zero limbs, and the
/// sign is 0 exactly when the magnitude is empty. Division truncates toward
/// zero, matching the built-in integer types.
class Integer {
public:
    using Limb = std::uint32_t;

    Integer() = default;

    template <std::signed_integral T>
    Integer(T value) {  // NOLINT(google-explicit-constructor)
        assign_signed(static_cast<std::int64_t>(value));
    }

    template <std::unsigned_integral T>
    Integer(T value) {  // NOLINT(google-explicit-constructor)
        assign_unsigned(static_cast<std::uint64_t>(value));
    }

    /// Parses an optional sign followed by decimal digits. Throws ParseError.
    static Integer from_string(std::string_view text);

    std::string to_string() const;

    int sign() const noexcept { return sign_; }
    bool is_zero() const noexcept { return sign_ == 0; }
    bool is_odd() const noexcept { return !mag_.empty() && (mag_[0] & 1u) != 0; }
    std::size_t bit_length() const noexcept;
    std::size_t limb_count() const noexcept { return mag_.size(); }
    /// Bit `index` of the magnitude.
    bool bit(std::size_t index) const noexcept;

    std::optional<std::uint64_t> to_u64() const noexcept;
    std::optional<std::int64_t> to_i64() const noexcept;

    Integer abs() const;
    Integer operator-() const;

    Integer& operator+=(const Integer& rhs);
    Integer& operator-=(const Integer& rhs);
    Integer& operator*=(const Integer& rhs);
    Integer& operator/=(const Integer& rhs);
    Integer& operator%=(const Integer& rhs);

    friend Integer operator+(Integer lhs, const Integer& rhs) { return lhs += rhs; }
    friend Integer operator-(Integer lhs, const Integer& rhs) { return lhs -= rhs; }
    friend Integer operator*(const Integer& lhs, const Integer& rhs);
    friend Integer operator/(const Integer& lhs, const Integer& rhs);
    friend Integer operator%(const Integer& lhs, const Integer& rhs);

    friend bool operator==(const Integer& lhs, const Integer& rhs) noexcept = default;
    friend std::strong_ordering operator<=>(const Integer& lhs, const Integer& rhs) noexcept;

    /// Truncating division; remainder has the sign of the dividend.
    /// Throws InvalidArgument on a zero divisor.
    friend std::pair<Integer, Integer> divmod(const Integer& lhs, const Integer& rhs);

    static Integer pow(const Integer& base, std::uint64_t exponent);

private:
    void assign_signed(std::int64_t value);
    void assign_unsigned(std::uint64_t value);
    void normalize() noexcept;

    int sign_ = 0;
    std::vector<Limb> mag_;
};

std::ostream& operator<<(std::ostream& os, const Integer& value);

/// Exact product of a non-empty list; evaluated as a balanced product tree
/// so the result does not depend on association order.
Integer mul_many(std::span<const Integer> factors);

/// Non-negative greatest common divisor.
Integer gcd(Integer a, Integer b);

/// Least non-negative residue of `a` modulo a positive `m`.
Integer mod_floor(const Integer& a, const Integer& m);

/// base^exponent mod modulus for exponent >= 0 and modulus >= 1.
Integer powmod(const Integer& base, const Integer& exponent, const Integer& modulus);

}  // namespace ktower
