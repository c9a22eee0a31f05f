#pragma once

// Brute-force reference implementations. They share no code with the
// library beyond plain integer types, so agreement is meaningful.

#include <cstdint>
#include <numeric>
#include <optional>
#include <vector>

namespace ktower::testing {

inline bool naive_is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) return false;
    }
    return true;
}

inline std::vector<std::uint64_t> sieve(std::uint64_t limit) {
    std::vector<bool> composite(limit + 1, false);
    std::vector<std::uint64_t> primes;
    for (std::uint64_t i = 2; i <= limit; ++i) {
        if (composite[i]) continue;
        primes.push_back(i);
        for (std::uint64_t j = i * i; j <= limit; j += i) composite[j] = true;
    }
    return primes;
}

// Smallest k >= 1 with a^k = 1 mod m, by stepping through powers.
inline std::optional<std::uint64_t> naive_order(std::uint64_t a, std::uint64_t m) {
    if (m == 1) return 1;
    if (std::gcd(a, m) != 1) return std::nullopt;
    std::uint64_t x = a % m;
    for (std::uint64_t k = 1; k <= m; ++k) {
        if (x == 1) return k;
        x = x * (a % m) % m;
    }
    return std::nullopt;
}

inline std::uint64_t naive_phi(std::uint64_t m) {
    std::uint64_t count = 0;
    for (std::uint64_t k = 1; k <= m; ++k) count += std::gcd(k, m) == 1;
    return count;
}

// F_{q^f} with elements encoded as integers sum c_i q^i, arithmetic done
// by explicit tables built from a monic generator (constant term first).
class TableField {
public:
    TableField(std::uint64_t q, std::vector<std::uint64_t> generator) : q_(q), gen_(std::move(generator)) {
        f_ = gen_.size() - 1;
        size_ = 1;
        for (std::size_t i = 0; i < f_; ++i) size_ *= q_;
        add_.assign(size_ * size_, 0);
        mul_.assign(size_ * size_, 0);
        for (std::uint64_t a = 0; a < size_; ++a) {
            for (std::uint64_t b = 0; b < size_; ++b) {
                add_[a * size_ + b] = encode(add_digits(digits(a), digits(b)));
                mul_[a * size_ + b] = encode(mul_digits(digits(a), digits(b)));
            }
        }
    }

    std::uint64_t size() const { return size_; }
    std::uint64_t characteristic() const { return q_; }
    std::uint64_t add(std::uint64_t a, std::uint64_t b) const { return add_[a * size_ + b]; }
    std::uint64_t mul(std::uint64_t a, std::uint64_t b) const { return mul_[a * size_ + b]; }
    std::uint64_t neg(std::uint64_t a) const {
        auto d = digits(a);
        for (auto& c : d) c = (q_ - c) % q_;
        return encode(d);
    }

    // Every nonzero element invertible: the generator really is irreducible.
    bool is_field() const {
        for (std::uint64_t a = 1; a < size_; ++a) {
            bool found = false;
            for (std::uint64_t b = 1; b < size_ && !found; ++b) found = mul(a, b) == 1;
            if (!found) return false;
        }
        return true;
    }

    std::vector<std::uint64_t> digits(std::uint64_t a) const {
        std::vector<std::uint64_t> d(f_);
        for (std::size_t i = 0; i < f_; ++i) {
            d[i] = a % q_;
            a /= q_;
        }
        return d;
    }

    std::uint64_t encode(const std::vector<std::uint64_t>& d) const {
        std::uint64_t v = 0;
        for (std::size_t i = d.size(); i-- > 0;) v = v * q_ + d[i];
        return v;
    }

private:
    std::vector<std::uint64_t> add_digits(const std::vector<std::uint64_t>& a, const std::vector<std::uint64_t>& b) const {
        std::vector<std::uint64_t> c(f_);
        for (std::size_t i = 0; i < f_; ++i) c[i] = (a[i] + b[i]) % q_;
        return c;
    }

    std::vector<std::uint64_t> mul_digits(const std::vector<std::uint64_t>& a, const std::vector<std::uint64_t>& b) const {
        std::vector<std::uint64_t> c(2 * f_, 0);
        for (std::size_t i = 0; i < f_; ++i) {
            for (std::size_t j = 0; j < f_; ++j) c[i + j] = (c[i + j] + a[i] * b[j]) % q_;
        }
        for (std::size_t k = c.size(); k-- > f_;) {
            const std::uint64_t top = c[k];
            if (top == 0) continue;
            for (std::size_t i = 0; i <= f_; ++i) {
                c[k - f_ + i] = (c[k - f_ + i] + (q_ - top) * gen_[i]) % q_;
            }
        }
        c.resize(f_);
        return c;
    }

    std::uint64_t q_;
    std::vector<std::uint64_t> gen_;
    std::size_t f_ = 1;
    std::uint64_t size_ = 1;
    std::vector<std::uint64_t> add_;
    std::vector<std::uint64_t> mul_;
};

// Remainder of f by a monic g over the table field (constant term first).
inline std::vector<std::uint64_t> remainder_monic(const TableField& k, std::vector<std::uint64_t> f,
                                                  const std::vector<std::uint64_t>& g) {
    const std::size_t dg = g.size() - 1;
    for (std::size_t i = f.size(); i-- > dg;) {
        const std::uint64_t c = f[i];
        if (c == 0) continue;
        for (std::size_t j = 0; j <= dg; ++j) f[i - dg + j] = k.add(f[i - dg + j], k.neg(k.mul(c, g[j])));
    }
    f.resize(dg);
    return f;
}

// A monic f of degree n is irreducible iff no monic g of degree 1..n/2
// divides it; every such g is tried.
inline bool brute_force_irreducible(const TableField& k, const std::vector<std::uint64_t>& f) {
    const std::size_t n = f.size() - 1;
    if (n == 0) return false;
    for (std::size_t d = 1; 2 * d <= n; ++d) {
        std::uint64_t count = 1;
        for (std::size_t i = 0; i < d; ++i) count *= k.size();
        for (std::uint64_t code = 0; code < count; ++code) {
            std::vector<std::uint64_t> g(d + 1, 1);
            std::uint64_t c = code;
            for (std::size_t i = 0; i < d; ++i) {
                g[i] = c % k.size();
                c /= k.size();
            }
            const auto r = remainder_monic(k, f, g);
            bool zero = true;
            for (auto x : r) zero = zero && x == 0;
            if (zero) return false;
        }
    }
    return true;
}

// Integer polynomial product reduced mod x^m - 1, then mod Φ_m given its
// coefficients (constant term first).
inline std::vector<long long> cyclotomic_product(const std::vector<std::vector<long long>>& factors, std::size_t m,
                                                 const std::vector<long long>& phi) {
    std::vector<long long> acc(m, 0);
    acc[0] = 1;
    for (const auto& f : factors) {
        std::vector<long long> next(m, 0);
        for (std::size_t i = 0; i < m; ++i) {
            for (std::size_t j = 0; j < f.size(); ++j) next[(i + j) % m] += acc[i] * f[j];
        }
        acc = next;
    }
    const std::size_t deg = phi.size() - 1;
    for (std::size_t k = acc.size(); k-- > deg;) {
        const long long top = acc[k];
        for (std::size_t i = 0; i <= deg; ++i) acc[k - deg + i] -= top * phi[i];
    }
    acc.resize(deg);
    return acc;
}

}  // namespace ktower::testing
