#pragma once

#include <cstdint>
#include <functional>
#include <set>
#include <vector>

#include "ktower/arith/integer.hpp"

namespace ktower {

/// Deterministic below 2^64 (Miller-Rabin with the first twelve prime bases).
bool is_prime_u64(std::uint64_t n) noexcept;

/// Primality of n >= 0. Exact for n < 2^64. Above that, n is reported prime
/// iff it is a strong probable prime to each of the first
/// `kLargeWitnessCount` prime bases.
bool is_prime(const Integer& n);

inline constexpr int kLargeWitnessCount = 40;

using PrimeFilter = std::function<bool(const Integer&)>;

/// Default ceiling for `primes_ascending`: candidates above it are not tried.
inline constexpr std::uint64_t kDefaultSearchCeiling = 100'000'000;

/// The `count` smallest primes that satisfy `filter` and are not in
/// `exclude`, ascending. Throws SearchExhausted when fewer than `count`
/// qualify below `ceiling`.
std::vector<Integer> primes_ascending(const PrimeFilter& filter, const std::set<Integer>& exclude,
                                      std::size_t count,
                                      std::uint64_t ceiling = kDefaultSearchCeiling);

}  // namespace ktower
