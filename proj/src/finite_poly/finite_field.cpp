#include "ktower/finite_poly/finite_field.hpp"

#include "ktower/arith/number_theory.hpp"
#include "ktower/arith/primes.hpp"
#include "ktower/cyclotomic/int_poly.hpp"
#include "ktower/error.hpp"
#include "ktower/finite_poly/fq_poly.hpp"
#include "ktower/finite_poly/irreducibility.hpp"

namespace ktower {

FiniteField::FiniteField(std::uint64_t q, std::vector<std::uint64_t> generator)
    : q_(q), f_(generator.empty() ? 0 : generator.size() - 1), generator_(std::move(generator)) {
    if (!is_prime_u64(q_)) throw Error(ErrorCode::InvalidArgument, std::to_string(q_) + " is not prime");
    if (q_ >= (std::uint64_t{1} << 32)) {
        throw Error(ErrorCode::OutOfRange, "field characteristic must be below 2^32");
    }
    if (f_ == 0 || generator_.back() != 1) {
        throw Error(ErrorCode::InvalidArgument, "field generator must be monic of degree >= 1");
    }
    for (auto& c : generator_) c %= q_;
    order_ = Integer::pow(Integer(q_), f_);
}

std::shared_ptr<const FiniteField> FiniteField::prime_field(std::uint64_t q) {
    return std::make_shared<const FiniteField>(q, std::vector<std::uint64_t>{0, 1});
}

FqElement FiniteField::zero() const { return FqElement{std::vector<std::uint64_t>(f_, 0)}; }

FqElement FiniteField::one() const {
    FqElement e = zero();
    e.coeffs[0] = 1 % q_;
    return e;
}

FqElement FiniteField::from_int(std::int64_t value) const { return from_integer(Integer(value)); }

FqElement FiniteField::from_integer(const Integer& value) const {
    FqElement e = zero();
    e.coeffs[0] = *mod_floor(value, Integer(q_)).to_u64();
    return e;
}

FqElement FiniteField::primitive() const {
    if (f_ == 1) return FqElement{{(q_ - generator_[0]) % q_}};
    FqElement e = zero();
    e.coeffs[1] = 1;
    return e;
}

bool FiniteField::is_zero(const FqElement& a) const noexcept {
    for (auto c : a.coeffs) {
        if (c != 0) return false;
    }
    return true;
}

FqElement FiniteField::add(const FqElement& a, const FqElement& b) const {
    FqElement out = zero();
    for (std::size_t i = 0; i < f_; ++i) out.coeffs[i] = (a.coeffs[i] + b.coeffs[i]) % q_;
    return out;
}

FqElement FiniteField::sub(const FqElement& a, const FqElement& b) const {
    FqElement out = zero();
    for (std::size_t i = 0; i < f_; ++i) out.coeffs[i] = (a.coeffs[i] + q_ - b.coeffs[i]) % q_;
    return out;
}

FqElement FiniteField::neg(const FqElement& a) const { return sub(zero(), a); }

FqElement FiniteField::mul(const FqElement& a, const FqElement& b) const {
    if (f_ == 1) return FqElement{{mulmod_u64(a.coeffs[0], b.coeffs[0], q_)}};
    std::vector<std::uint64_t> prod(2 * f_ - 1, 0);
    for (std::size_t i = 0; i < f_; ++i) {
        if (a.coeffs[i] == 0) continue;
        for (std::size_t j = 0; j < f_; ++j) {
            prod[i + j] = (prod[i + j] + mulmod_u64(a.coeffs[i], b.coeffs[j], q_)) % q_;
        }
    }
    // Reduce with the monic generator: x^f = -(g_0 + ... + g_{f-1} x^{f-1}).
    for (std::size_t i = prod.size(); i-- > f_;) {
        const std::uint64_t top = prod[i];
        if (top == 0) continue;
        const std::size_t shift = i - f_;
        for (std::size_t j = 0; j < f_; ++j) {
            prod[shift + j] = (prod[shift + j] + q_ - mulmod_u64(top, generator_[j], q_)) % q_;
        }
        prod[i] = 0;
    }
    prod.resize(f_);
    return FqElement{std::move(prod)};
}

FqElement FiniteField::pow(const FqElement& a, const Integer& exponent) const {
    FqElement result = one();
    for (std::size_t i = exponent.bit_length(); i-- > 0;) {
        result = mul(result, result);
        if (exponent.bit(i)) result = mul(result, a);
    }
    return result;
}

FqElement FiniteField::inv(const FqElement& a) const {
    if (is_zero(a)) throw Error(ErrorCode::InvalidArgument, "zero has no inverse");
    // The multiplicative group has order q^f - 1.
    return pow(a, order_ - 2);
}

std::vector<FqElement> FiniteField::elements() const {
    auto total = order_.to_u64();
    if (!total || *total > 10'000'000) throw Error(ErrorCode::OutOfRange, "field too large to enumerate");
    std::vector<FqElement> out;
    out.reserve(*total);
    FqElement e = zero();
    for (std::uint64_t n = 0; n < *total; ++n) {
        out.push_back(e);
        // Increment as a base-q counter, least significant coefficient last.
        for (std::size_t i = f_; i-- > 0;) {
            if (++e.coeffs[i] < q_) break;
            e.coeffs[i] = 0;
        }
    }
    return out;
}

std::string FiniteField::describe() const {
    if (f_ == 1) return "F_" + std::to_string(q_);
    std::vector<Integer> c(generator_.begin(), generator_.end());
    return "F_" + std::to_string(q_) + "^" + std::to_string(f_) + " = F_" + std::to_string(q_) + "[t]/(" +
           IntPoly(std::move(c)).to_string('t') + ")";
}

FieldPtr build_extension_field(std::uint64_t q, std::size_t f) {
    if (f == 0) throw Error(ErrorCode::InvalidArgument, "extension degree must be >= 1");
    FieldPtr base = FiniteField::prime_field(q);
    if (f == 1) return base;
    std::vector<std::uint64_t> low(f, 0);
    while (true) {
        std::vector<FqElement> coeffs;
        for (auto c : low) coeffs.push_back(FqElement{{c}});
        coeffs.push_back(base->one());
        if (is_irreducible(FqPoly(base, std::move(coeffs)))) {
            std::vector<std::uint64_t> gen = low;
            gen.push_back(1);
            return std::make_shared<const FiniteField>(q, std::move(gen));
        }
        std::size_t i = 0;
        while (i < f && ++low[i] == q) low[i++] = 0;
        if (i == f) throw Error(ErrorCode::SearchExhausted, "no irreducible polynomial found");
    }
}

}  // namespace ktower
