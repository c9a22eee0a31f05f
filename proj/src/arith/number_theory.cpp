#include "ktower/arith/number_theory.hpp"

#include "ktower/error.hpp"

namespace ktower {

std::uint64_t mulmod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t m) noexcept {
    __extension__ using u128 = unsigned __int128;
    return static_cast<std::uint64_t>(static_cast<u128>(a) * b % m);
}

std::uint64_t powmod_u64(std::uint64_t base, std::uint64_t exponent, std::uint64_t m) noexcept {
    if (m == 1) return 0;
    std::uint64_t result = 1;
    base %= m;
    while (exponent != 0) {
        if (exponent & 1u) result = mulmod_u64(result, base, m);
        base = mulmod_u64(base, base, m);
        exponent >>= 1;
    }
    return result;
}

std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b) noexcept {
    while (b != 0) {
        std::uint64_t r = a % b;
        a = b;
        b = r;
    }
    return a;
}

std::vector<std::pair<std::uint64_t, unsigned>> factor_u64(std::uint64_t n) {
    std::vector<std::pair<std::uint64_t, unsigned>> out;
    for (std::uint64_t d = 2; d <= n / d; d += (d == 2 ? 1 : 2)) {
        if (n % d != 0) continue;
        unsigned e = 0;
        while (n % d == 0) {
            n /= d;
            ++e;
        }
        out.emplace_back(d, e);
    }
    if (n > 1) out.emplace_back(n, 1);
    return out;
}

std::uint64_t euler_phi(std::uint64_t n) {
    if (n == 0) throw Error(ErrorCode::InvalidArgument, "euler_phi(0) is undefined");
    std::uint64_t phi = n;
    for (auto [prime, exponent] : factor_u64(n)) {
        (void)exponent;
        phi = phi / prime * (prime - 1);
    }
    return phi;
}

std::uint64_t mult_order_u64(std::uint64_t a, std::uint64_t m) {
    if (m < 2) throw Error(ErrorCode::InvalidArgument, "mult_order requires m >= 2");
    a %= m;
    if (gcd_u64(a, m) != 1) {
        throw Error(ErrorCode::NotCoprime,
                    "gcd(" + std::to_string(a) + ", " + std::to_string(m) + ") != 1");
    }
    // The order divides phi(m); strip prime factors while a^(order/r) stays 1.
    std::uint64_t order = euler_phi(m);
    for (auto [r, exponent] : factor_u64(order)) {
        for (unsigned i = 0; i < exponent; ++i) {
            if (powmod_u64(a, order / r, m) != 1) break;
            order /= r;
        }
    }
    return order;
}

Integer mult_order(const Integer& a, const Integer& m) {
    auto mm = m.to_u64();
    if (!mm) throw Error(ErrorCode::OutOfRange, "mult_order modulus must be in [2, 2^64)");
    Integer reduced = mod_floor(a, m);
    return mult_order_u64(*reduced.to_u64(), *mm);
}

}  // namespace ktower
