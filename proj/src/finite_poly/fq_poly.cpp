#include "ktower/finite_poly/fq_poly.hpp"

#include "ktower/error.hpp"

namespace ktower {

namespace {

void require_same_field(const FqPoly& a, const FqPoly& b) {
    if (!(a.field() == b.field())) {
        throw Error(ErrorCode::ModulusMismatch, a.field().describe() + " vs " + b.field().describe());
    }
}

}  // namespace

FqPoly::FqPoly(FieldPtr field) : field_(std::move(field)) {}

FqPoly::FqPoly(FieldPtr field, std::vector<FqElement> coeffs) : field_(std::move(field)), coeffs_(std::move(coeffs)) {
    trim();
}

void FqPoly::trim() {
    while (!coeffs_.empty() && field_->is_zero(coeffs_.back())) coeffs_.pop_back();
}

FqPoly FqPoly::x(FieldPtr field) {
    std::vector<FqElement> c{field->zero(), field->one()};
    return FqPoly(std::move(field), std::move(c));
}

FqPoly FqPoly::constant(FieldPtr field, const FqElement& c) {
    return FqPoly(std::move(field), std::vector<FqElement>{c});
}

FqPoly FqPoly::reduce(const IntPoly& poly, FieldPtr field) {
    std::vector<FqElement> c;
    c.reserve(poly.coeffs().size());
    for (const auto& a : poly.coeffs()) c.push_back(field->from_integer(a));
    return FqPoly(std::move(field), std::move(c));
}

bool FqPoly::is_one() const { return coeffs_.size() == 1 && coeffs_[0] == field_->one(); }

const FqElement& FqPoly::leading() const {
    if (coeffs_.empty()) throw Error(ErrorCode::ZeroPolynomial, "zero polynomial has no leading coefficient");
    return coeffs_.back();
}

FqPoly FqPoly::monic() const {
    if (coeffs_.empty()) throw Error(ErrorCode::ZeroPolynomial, "cannot normalize the zero polynomial");
    const FqElement inv = field_->inv(coeffs_.back());
    std::vector<FqElement> c;
    c.reserve(coeffs_.size());
    for (const auto& a : coeffs_) c.push_back(field_->mul(a, inv));
    return FqPoly(field_, std::move(c));
}

FqPoly FqPoly::derivative() const {
    if (coeffs_.size() <= 1) return FqPoly(field_);
    std::vector<FqElement> c;
    for (std::size_t i = 1; i < coeffs_.size(); ++i) {
        c.push_back(field_->mul(coeffs_[i], field_->from_int(static_cast<std::int64_t>(i % field_->characteristic()))));
    }
    return FqPoly(field_, std::move(c));
}

std::string FqPoly::to_string() const {
    if (coeffs_.empty()) return "0";
    auto element = [&](const FqElement& e) {
        if (field_->degree() == 1) return std::to_string(e.coeffs[0]);
        std::vector<Integer> c(e.coeffs.begin(), e.coeffs.end());
        return "(" + IntPoly(std::move(c)).to_string('t') + ")";
    };
    std::string out;
    for (std::size_t i = coeffs_.size(); i-- > 0;) {
        if (field_->is_zero(coeffs_[i])) continue;
        if (!out.empty()) out += " + ";
        const bool unit = coeffs_[i] == field_->one();
        if (i == 0) {
            out += element(coeffs_[i]);
            continue;
        }
        if (!unit) out += element(coeffs_[i]) + "*";
        out += "x";
        if (i > 1) out += "^" + std::to_string(i);
    }
    return out;
}

FqPoly operator+(const FqPoly& a, const FqPoly& b) {
    require_same_field(a, b);
    const auto& F = a.field();
    std::vector<FqElement> c(std::max(a.coeffs_.size(), b.coeffs_.size()), F.zero());
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (i < a.coeffs_.size()) c[i] = F.add(c[i], a.coeffs_[i]);
        if (i < b.coeffs_.size()) c[i] = F.add(c[i], b.coeffs_[i]);
    }
    return FqPoly(a.field_, std::move(c));
}

FqPoly operator-(const FqPoly& a, const FqPoly& b) {
    require_same_field(a, b);
    const auto& F = a.field();
    std::vector<FqElement> c(std::max(a.coeffs_.size(), b.coeffs_.size()), F.zero());
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (i < a.coeffs_.size()) c[i] = F.add(c[i], a.coeffs_[i]);
        if (i < b.coeffs_.size()) c[i] = F.sub(c[i], b.coeffs_[i]);
    }
    return FqPoly(a.field_, std::move(c));
}

FqPoly operator*(const FqPoly& a, const FqPoly& b) {
    require_same_field(a, b);
    if (a.is_zero() || b.is_zero()) return FqPoly(a.field_);
    const auto& F = a.field();
    std::vector<FqElement> c(a.coeffs_.size() + b.coeffs_.size() - 1, F.zero());
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (F.is_zero(a.coeffs_[i])) continue;
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
            c[i + j] = F.add(c[i + j], F.mul(a.coeffs_[i], b.coeffs_[j]));
        }
    }
    return FqPoly(a.field_, std::move(c));
}

bool operator==(const FqPoly& a, const FqPoly& b) {
    return a.field() == b.field() && a.coeffs_ == b.coeffs_;
}

std::pair<FqPoly, FqPoly> divmod(const FqPoly& a, const FqPoly& b) {
    require_same_field(a, b);
    if (b.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "polynomial division by zero");
    const auto& F = a.field();
    if (a.degree() < b.degree()) return {FqPoly(a.field_ptr()), a};

    std::vector<FqElement> rem = a.coeffs();
    const auto& bc = b.coeffs();
    const std::size_t db = bc.size() - 1;
    const FqElement lead_inv = F.inv(bc.back());
    std::vector<FqElement> quot(rem.size() - db, F.zero());
    for (std::size_t i = rem.size(); i-- > db;) {
        if (F.is_zero(rem[i])) continue;
        const FqElement factor = F.mul(rem[i], lead_inv);
        const std::size_t shift = i - db;
        quot[shift] = factor;
        for (std::size_t j = 0; j <= db; ++j) rem[shift + j] = F.sub(rem[shift + j], F.mul(factor, bc[j]));
    }
    rem.resize(db);
    return {FqPoly(a.field_ptr(), std::move(quot)), FqPoly(a.field_ptr(), std::move(rem))};
}

FqPoly operator%(const FqPoly& a, const FqPoly& b) { return divmod(a, b).second; }

FqPoly gcd(FqPoly a, FqPoly b) {
    while (!b.is_zero()) {
        FqPoly r = a % b;
        a = std::move(b);
        b = std::move(r);
    }
    return a.is_zero() ? a : a.monic();
}

FqPoly powmod(const FqPoly& base, std::uint64_t exponent, const FqPoly& modulus) {
    FqPoly result = FqPoly::constant(base.field_ptr(), base.field().one()) % modulus;
    FqPoly square = base % modulus;
    while (exponent != 0) {
        if (exponent & 1u) result = result * square % modulus;
        exponent >>= 1;
        if (exponent != 0) square = square * square % modulus;
    }
    return result;
}

FqPoly frobenius(const FqPoly& base, std::uint64_t times, const FqPoly& modulus) {
    const std::uint64_t q = base.field().characteristic();
    const std::uint64_t steps = times * base.field().degree();
    FqPoly h = base % modulus;
    for (std::uint64_t i = 0; i < steps; ++i) h = powmod(h, q, modulus);
    return h;
}

}  // namespace ktower
