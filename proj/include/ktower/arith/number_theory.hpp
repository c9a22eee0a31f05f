#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "ktower/arith/integer.hpp"

namespace ktower {

// Word-sized helpers. All desk-scale conductors and primes fit in 64 bits;
// products are formed in 128-bit arithmetic so any uint64 modulus is safe.

std::uint64_t mulmod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t m) noexcept;
std::uint64_t powmod_u64(std::uint64_t base, std::uint64_t exponent, std::uint64_t m) noexcept;
std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b) noexcept;

/// Prime factorization by trial division, ascending (prime, exponent) pairs.
std::vector<std::pair<std::uint64_t, unsigned>> factor_u64(std::uint64_t n);

/// Euler's totient. Requires n >= 1.
std::uint64_t euler_phi(std::uint64_t n);

/// Least k >= 1 with a^k = 1 (mod m). Requires m >= 2 and m < 2^64.
/// Throws NotCoprime when gcd(a, m) != 1.
Integer mult_order(const Integer& a, const Integer& m);

std::uint64_t mult_order_u64(std::uint64_t a, std::uint64_t m);

}  // namespace ktower
