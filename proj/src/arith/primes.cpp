#include "ktower/arith/primes.hpp"

#include <array>

#include "ktower/arith/number_theory.hpp"
#include "ktower/error.hpp"

namespace ktower {

namespace {

constexpr std::array<std::uint64_t, 12> kSmallBases = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};

std::vector<std::uint64_t> first_primes(std::size_t count) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t n = 2; out.size() < count; ++n) {
        if (is_prime_u64(n)) out.push_back(n);
    }
    return out;
}

bool strong_probable_prime(const Integer& n, const Integer& n_minus_1, const Integer& odd_part,
                           std::size_t twos, const Integer& base) {
    Integer x = powmod(base, odd_part, n);
    if (x == 1 || x == n_minus_1) return true;
    for (std::size_t i = 1; i < twos; ++i) {
        x = x * x % n;
        if (x == n_minus_1) return true;
        if (x == 1) return false;
    }
    return false;
}

}  // namespace

bool is_prime_u64(std::uint64_t n) noexcept {
    if (n < 2) return false;
    for (std::uint64_t p : kSmallBases) {
        if (n % p == 0) return n == p;
    }
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1u) == 0) {
        d >>= 1;
        ++s;
    }
    for (std::uint64_t a : kSmallBases) {
        std::uint64_t x = powmod_u64(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int r = 1; r < s; ++r) {
            x = mulmod_u64(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

bool is_prime(const Integer& n) {
    if (n.sign() < 0) throw Error(ErrorCode::InvalidArgument, "is_prime requires n >= 0");
    if (auto small = n.to_u64()) return is_prime_u64(*small);

    static const std::vector<std::uint64_t> witnesses = first_primes(kLargeWitnessCount);
    for (std::uint64_t p : witnesses) {
        if ((n % Integer(p)).is_zero()) return false;
    }
    const Integer n_minus_1 = n - 1;
    Integer odd_part = n_minus_1;
    std::size_t twos = 0;
    while (!odd_part.is_odd()) {
        odd_part /= 2;
        ++twos;
    }
    for (std::uint64_t p : witnesses) {
        if (!strong_probable_prime(n, n_minus_1, odd_part, twos, Integer(p))) return false;
    }
    return true;
}

std::vector<Integer> primes_ascending(const PrimeFilter& filter, const std::set<Integer>& exclude,
                                      std::size_t count, std::uint64_t ceiling) {
    if (count == 0) throw Error(ErrorCode::InvalidArgument, "primes_ascending requires count >= 1");
    std::vector<Integer> out;
    out.reserve(count);
    for (std::uint64_t n = 2; n <= ceiling; n += (n == 2 ? 1 : 2)) {
        if (!is_prime_u64(n)) continue;
        Integer candidate(n);
        if (exclude.contains(candidate) || !filter(candidate)) continue;
        out.push_back(std::move(candidate));
        if (out.size() == count) return out;
    }
    throw Error(ErrorCode::SearchExhausted, "found " + std::to_string(out.size()) + " of " +
                                                std::to_string(count) + " primes below " +
                                                std::to_string(ceiling));
}

}  // namespace ktower
