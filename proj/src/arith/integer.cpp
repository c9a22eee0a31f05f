#include "ktower/arith/integer.hpp"

#include <algorithm>
#include <bit>
#include <cassert>
#include <ostream>

#include "ktower/error.hpp"

namespace ktower {

namespace {

using Limb = Integer::Limb;
using Wide = std::uint64_t;
using Mag = std::vector<Limb>;

constexpr Wide kBase = Wide{1} << 32;
constexpr Limb kDecimalChunk = 1'000'000'000u;  // 10^9
constexpr int kDecimalChunkDigits = 9;

void trim(Mag& a) noexcept {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

int cmp_mag(const Mag& a, const Mag& b) noexcept {
    if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
    for (std::size_t i = a.size(); i-- > 0;) {
        if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
    }
    return 0;
}

Mag add_mag(const Mag& a, const Mag& b) {
    const Mag& lo = a.size() < b.size() ? a : b;
    const Mag& hi = a.size() < b.size() ? b : a;
    Mag out(hi.size() + 1);
    Wide carry = 0;
    for (std::size_t i = 0; i < hi.size(); ++i) {
        Wide s = Wide{hi[i]} + (i < lo.size() ? lo[i] : 0) + carry;
        out[i] = static_cast<Limb>(s);
        carry = s >> 32;
    }
    out[hi.size()] = static_cast<Limb>(carry);
    trim(out);
    return out;
}

// Requires |a| >= |b|.
Mag sub_mag(const Mag& a, const Mag& b) {
    Mag out(a.size());
    std::int64_t borrow = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        std::int64_t d = static_cast<std::int64_t>(a[i]) - (i < b.size() ? b[i] : 0) - borrow;
        borrow = d < 0 ? 1 : 0;
        out[i] = static_cast<Limb>(d + (borrow ? static_cast<std::int64_t>(kBase) : 0));
    }
    assert(borrow == 0);
    trim(out);
    return out;
}

Mag mul_mag(const Mag& a, const Mag& b) {
    if (a.empty() || b.empty()) return {};
    Mag out(a.size() + b.size(), 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        Wide carry = 0;
        const Wide ai = a[i];
        if (ai == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) {
            Wide t = ai * b[j] + out[i + j] + carry;
            out[i + j] = static_cast<Limb>(t);
            carry = t >> 32;
        }
        out[i + b.size()] = static_cast<Limb>(carry);
    }
    trim(out);
    return out;
}

// In-place a = a * m + add.
void mul_add_small(Mag& a, Limb m, Limb add) {
    Wide carry = add;
    for (auto& limb : a) {
        Wide t = Wide{limb} * m + carry;
        limb = static_cast<Limb>(t);
        carry = t >> 32;
    }
    if (carry != 0) a.push_back(static_cast<Limb>(carry));
}

// In-place a /= d, returns remainder.
Limb div_small(Mag& a, Limb d) {
    Wide rem = 0;
    for (std::size_t i = a.size(); i-- > 0;) {
        Wide cur = (rem << 32) | a[i];
        a[i] = static_cast<Limb>(cur / d);
        rem = cur % d;
    }
    trim(a);
    return static_cast<Limb>(rem);
}

// Knuth, TAOCP vol. 2, 4.3.1 algorithm D. Requires v non-empty.
std::pair<Mag, Mag> divmod_mag(const Mag& u, const Mag& v) {
    if (cmp_mag(u, v) < 0) return {{}, u};
    if (v.size() == 1) {
        Mag q = u;
        Limb r = div_small(q, v[0]);
        Mag rem;
        if (r != 0) rem.push_back(r);
        return {q, rem};
    }

    const std::size_t n = v.size();
    const std::size_t m = u.size() - n;
    const int shift = std::countl_zero(v.back());

    Mag vn(n);
    Mag un(u.size() + 1);
    for (std::size_t i = n - 1; i > 0; --i) {
        vn[i] = shift ? (v[i] << shift) | (v[i - 1] >> (32 - shift)) : v[i];
    }
    vn[0] = v[0] << shift;
    un[u.size()] = shift ? u.back() >> (32 - shift) : 0;
    for (std::size_t i = u.size() - 1; i > 0; --i) {
        un[i] = shift ? (u[i] << shift) | (u[i - 1] >> (32 - shift)) : u[i];
    }
    un[0] = u[0] << shift;

    Mag q(m + 1, 0);
    for (std::size_t j = m + 1; j-- > 0;) {
        Wide num = (Wide{un[j + n]} << 32) | un[j + n - 1];
        Wide qhat = num / vn[n - 1];
        Wide rhat = num % vn[n - 1];
        while (qhat >= kBase || qhat * vn[n - 2] > ((rhat << 32) | un[j + n - 2])) {
            --qhat;
            rhat += vn[n - 1];
            if (rhat >= kBase) break;
        }

        std::int64_t borrow = 0;
        std::int64_t t = 0;
        for (std::size_t i = 0; i < n; ++i) {
            Wide p = qhat * vn[i];
            t = static_cast<std::int64_t>(un[i + j]) - borrow - static_cast<std::int64_t>(p & 0xFFFFFFFFu);
            un[i + j] = static_cast<Limb>(t);
            borrow = static_cast<std::int64_t>(p >> 32) - (t >> 32);
        }
        t = static_cast<std::int64_t>(un[j + n]) - borrow;
        un[j + n] = static_cast<Limb>(t);

        q[j] = static_cast<Limb>(qhat);
        if (t < 0) {
            // qhat was one too large; add the divisor back.
            --q[j];
            Wide carry = 0;
            for (std::size_t i = 0; i < n; ++i) {
                Wide s = Wide{un[i + j]} + vn[i] + carry;
                un[i + j] = static_cast<Limb>(s);
                carry = s >> 32;
            }
            un[j + n] = static_cast<Limb>(Wide{un[j + n]} + carry);
        }
    }

    Mag r(n);
    for (std::size_t i = 0; i < n; ++i) {
        r[i] = shift ? (un[i] >> shift) | static_cast<Limb>(Wide{un[i + 1]} << (32 - shift)) : un[i];
    }
    trim(q);
    trim(r);
    return {q, r};
}

}  // namespace

void Integer::assign_unsigned(std::uint64_t value) {
    mag_.clear();
    while (value != 0) {
        mag_.push_back(static_cast<Limb>(value));
        value >>= 32;
    }
    sign_ = mag_.empty() ? 0 : 1;
}

void Integer::assign_signed(std::int64_t value) {
    if (value >= 0) {
        assign_unsigned(static_cast<std::uint64_t>(value));
        return;
    }
    assign_unsigned(0 - static_cast<std::uint64_t>(value));
    sign_ = -1;
}

void Integer::normalize() noexcept {
    trim(mag_);
    if (mag_.empty()) sign_ = 0;
}

Integer Integer::from_string(std::string_view text) {
    std::size_t pos = 0;
    bool negative = false;
    if (!text.empty() && (text[0] == '-' || text[0] == '+')) {
        negative = text[0] == '-';
        pos = 1;
    }
    if (pos == text.size()) throw Error(ErrorCode::ParseError, "empty integer literal");
    for (std::size_t i = pos; i < text.size(); ++i) {
        if (text[i] < '0' || text[i] > '9') {
            throw Error(ErrorCode::ParseError, "invalid digit in integer literal '" + std::string(text) + "'");
        }
    }

    Integer out;
    const std::size_t digits = text.size() - pos;
    std::size_t first = digits % kDecimalChunkDigits;
    if (first == 0) first = kDecimalChunkDigits;
    while (pos < text.size()) {
        Limb chunk = 0;
        Limb scale = 1;
        for (std::size_t k = 0; k < first; ++k) {
            chunk = chunk * 10 + static_cast<Limb>(text[pos + k] - '0');
            scale *= 10;
        }
        mul_add_small(out.mag_, scale, chunk);
        pos += first;
        first = kDecimalChunkDigits;
    }
    out.sign_ = 1;
    out.normalize();
    if (negative && out.sign_ != 0) out.sign_ = -1;
    return out;
}

std::string Integer::to_string() const {
    if (sign_ == 0) return "0";
    Mag work = mag_;
    std::vector<Limb> chunks;
    while (!work.empty()) chunks.push_back(div_small(work, kDecimalChunk));

    std::string out = sign_ < 0 ? "-" : "";
    out += std::to_string(chunks.back());
    for (std::size_t i = chunks.size() - 1; i-- > 0;) {
        std::string part = std::to_string(chunks[i]);
        out.append(kDecimalChunkDigits - part.size(), '0');
        out += part;
    }
    return out;
}

std::size_t Integer::bit_length() const noexcept {
    if (mag_.empty()) return 0;
    return 32 * (mag_.size() - 1) + static_cast<std::size_t>(std::bit_width(mag_.back()));
}

bool Integer::bit(std::size_t index) const noexcept {
    const std::size_t limb = index / 32;
    if (limb >= mag_.size()) return false;
    return ((mag_[limb] >> (index % 32)) & 1u) != 0;
}

std::optional<std::uint64_t> Integer::to_u64() const noexcept {
    if (sign_ < 0 || mag_.size() > 2) return std::nullopt;
    std::uint64_t v = 0;
    for (std::size_t i = mag_.size(); i-- > 0;) v = (v << 32) | mag_[i];
    return v;
}

std::optional<std::int64_t> Integer::to_i64() const noexcept {
    if (mag_.size() > 2) return std::nullopt;
    std::uint64_t v = 0;
    for (std::size_t i = mag_.size(); i-- > 0;) v = (v << 32) | mag_[i];
    if (sign_ >= 0) {
        if (v > static_cast<std::uint64_t>(INT64_MAX)) return std::nullopt;
        return static_cast<std::int64_t>(v);
    }
    if (v > static_cast<std::uint64_t>(INT64_MAX) + 1) return std::nullopt;
    return static_cast<std::int64_t>(0 - v);
}

Integer Integer::abs() const {
    Integer out = *this;
    if (out.sign_ < 0) out.sign_ = 1;
    return out;
}

Integer Integer::operator-() const {
    Integer out = *this;
    out.sign_ = -out.sign_;
    return out;
}

Integer& Integer::operator+=(const Integer& rhs) {
    if (rhs.sign_ == 0) return *this;
    if (sign_ == 0) return *this = rhs;
    if (sign_ == rhs.sign_) {
        mag_ = add_mag(mag_, rhs.mag_);
        return *this;
    }
    const int c = cmp_mag(mag_, rhs.mag_);
    if (c == 0) {
        mag_.clear();
        sign_ = 0;
    } else if (c > 0) {
        mag_ = sub_mag(mag_, rhs.mag_);
    } else {
        mag_ = sub_mag(rhs.mag_, mag_);
        sign_ = rhs.sign_;
    }
    return *this;
}

Integer& Integer::operator-=(const Integer& rhs) { return *this += -rhs; }

Integer& Integer::operator*=(const Integer& rhs) { return *this = *this * rhs; }
Integer& Integer::operator/=(const Integer& rhs) { return *this = *this / rhs; }
Integer& Integer::operator%=(const Integer& rhs) { return *this = *this % rhs; }

Integer operator*(const Integer& lhs, const Integer& rhs) {
    Integer out;
    if (lhs.sign_ == 0 || rhs.sign_ == 0) return out;
    out.mag_ = mul_mag(lhs.mag_, rhs.mag_);
    out.sign_ = lhs.sign_ * rhs.sign_;
    return out;
}

std::pair<Integer, Integer> divmod(const Integer& lhs, const Integer& rhs) {
    if (rhs.sign_ == 0) throw Error(ErrorCode::InvalidArgument, "division by zero");
    auto [qm, rm] = divmod_mag(lhs.mag_, rhs.mag_);
    Integer q;
    Integer r;
    q.mag_ = std::move(qm);
    r.mag_ = std::move(rm);
    q.sign_ = q.mag_.empty() ? 0 : lhs.sign_ * rhs.sign_;
    r.sign_ = r.mag_.empty() ? 0 : lhs.sign_;
    return {std::move(q), std::move(r)};
}

Integer operator/(const Integer& lhs, const Integer& rhs) { return divmod(lhs, rhs).first; }
Integer operator%(const Integer& lhs, const Integer& rhs) { return divmod(lhs, rhs).second; }

std::strong_ordering operator<=>(const Integer& lhs, const Integer& rhs) noexcept {
    if (lhs.sign_ != rhs.sign_) return lhs.sign_ <=> rhs.sign_;
    const int c = cmp_mag(lhs.mag_, rhs.mag_);
    const int signed_c = lhs.sign_ >= 0 ? c : -c;
    return signed_c <=> 0;
}

Integer Integer::pow(const Integer& base, std::uint64_t exponent) {
    Integer result = 1;
    Integer square = base;
    while (exponent != 0) {
        if (exponent & 1u) result *= square;
        exponent >>= 1;
        if (exponent != 0) square = square * square;
    }
    return result;
}

std::ostream& operator<<(std::ostream& os, const Integer& value) { return os << value.to_string(); }

namespace {

Integer product_range(std::span<const Integer> factors) {
    if (factors.size() == 1) return factors[0];
    const std::size_t half = factors.size() / 2;
    return product_range(factors.first(half)) * product_range(factors.subspan(half));
}

}  // namespace

Integer mul_many(std::span<const Integer> factors) {
    if (factors.empty()) throw Error(ErrorCode::InvalidArgument, "mul_many needs at least one factor");
    return product_range(factors);
}

Integer gcd(Integer a, Integer b) {
    a = a.abs();
    b = b.abs();
    while (!b.is_zero()) {
        Integer r = a % b;
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

Integer mod_floor(const Integer& a, const Integer& m) {
    if (m.sign() <= 0) throw Error(ErrorCode::InvalidArgument, "modulus must be positive");
    Integer r = a % m;
    if (r.sign() < 0) r += m;
    return r;
}

Integer powmod(const Integer& base, const Integer& exponent, const Integer& modulus) {
    if (exponent.sign() < 0) throw Error(ErrorCode::InvalidArgument, "negative exponent");
    if (modulus.sign() <= 0) throw Error(ErrorCode::InvalidArgument, "modulus must be positive");
    Integer result = mod_floor(1, modulus);
    Integer b = mod_floor(base, modulus);
    for (std::size_t i = exponent.bit_length(); i-- > 0;) {
        result = result * result % modulus;
        if (exponent.bit(i)) result = result * b % modulus;
    }
    return result;
}

}  // namespace ktower
