#include "ktower/cyclotomic/int_poly.hpp"

#include <cctype>

#include "ktower/arith/number_theory.hpp"
#include "ktower/error.hpp"

namespace ktower {

IntPoly::IntPoly(std::vector<Integer> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

void IntPoly::trim() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

IntPoly IntPoly::monomial(const Integer& coeff, std::size_t degree) {
    std::vector<Integer> c(degree + 1);
    c[degree] = coeff;
    return IntPoly(std::move(c));
}

const Integer& IntPoly::leading() const {
    if (coeffs_.empty()) throw Error(ErrorCode::ZeroPolynomial, "zero polynomial has no leading coefficient");
    return coeffs_.back();
}

IntPoly IntPoly::derivative() const {
    if (coeffs_.size() <= 1) return {};
    std::vector<Integer> d(coeffs_.size() - 1);
    for (std::size_t i = 1; i < coeffs_.size(); ++i) d[i - 1] = coeffs_[i] * Integer(i);
    return IntPoly(std::move(d));
}

std::uint64_t IntPoly::evaluate_mod(std::uint64_t point, std::uint64_t q) const {
    const Integer modulus(q);
    std::uint64_t acc = 0;
    for (std::size_t i = coeffs_.size(); i-- > 0;) {
        std::uint64_t c = *mod_floor(coeffs_[i], modulus).to_u64();
        acc = (mulmod_u64(acc, point % q, q) + c) % q;
    }
    return acc;
}

std::string IntPoly::to_string(char variable) const {
    if (coeffs_.empty()) return "0";
    std::string out;
    for (std::size_t i = coeffs_.size(); i-- > 0;) {
        const Integer& c = coeffs_[i];
        if (c.is_zero()) continue;
        const bool first = out.empty();
        if (c.sign() < 0) {
            out += first ? "-" : " - ";
        } else if (!first) {
            out += " + ";
        }
        const Integer mag = c.abs();
        if (i == 0) {
            out += mag.to_string();
            continue;
        }
        if (mag != 1) out += mag.to_string() + "*";
        out += variable;
        if (i > 1) out += "^" + std::to_string(i);
    }
    return out;
}

namespace {

class PolyParser {
public:
    PolyParser(std::string_view text, char variable) : text_(text), var_(variable) {}

    IntPoly parse() {
        std::vector<Integer> coeffs;
        skip_space();
        if (at_end()) fail("empty polynomial");
        bool first = true;
        while (!at_end()) {
            int sign = 1;
            if (peek() == '+' || peek() == '-') {
                sign = peek() == '-' ? -1 : 1;
                ++pos_;
                skip_space();
            } else if (!first) {
                fail("expected '+' or '-'");
            }
            auto [coeff, degree] = term();
            if (coeffs.size() <= degree) coeffs.resize(degree + 1);
            coeffs[degree] += sign < 0 ? -coeff : coeff;
            first = false;
            skip_space();
        }
        return IntPoly(std::move(coeffs));
    }

private:
    std::pair<Integer, std::size_t> term() {
        Integer coeff = 1;
        bool have_number = false;
        if (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
            coeff = Integer::from_string(digits());
            have_number = true;
            skip_space();
            if (!at_end() && peek() == '*') {
                ++pos_;
                skip_space();
                if (at_end() || peek() != var_) fail("expected variable after '*'");
            }
        }
        if (at_end() || peek() != var_) {
            if (!have_number) fail("expected coefficient or variable");
            return {coeff, 0};
        }
        ++pos_;
        skip_space();
        std::size_t degree = 1;
        if (!at_end() && peek() == '^') {
            ++pos_;
            skip_space();
            if (at_end() || !std::isdigit(static_cast<unsigned char>(peek()))) fail("expected exponent");
            auto e = Integer::from_string(digits()).to_u64();
            if (!e || *e > 1'000'000) fail("exponent out of range");
            degree = static_cast<std::size_t>(*e);
        }
        return {coeff, degree};
    }

    std::string digits() {
        std::size_t start = pos_;
        while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
        return std::string(text_.substr(start, pos_ - start));
    }

    void skip_space() {
        while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
    }
    bool at_end() const { return pos_ >= text_.size(); }
    char peek() const { return text_[pos_]; }

    [[noreturn]] void fail(const std::string& what) const {
        throw Error(ErrorCode::ParseError,
                    what + " at offset " + std::to_string(pos_) + " in '" + std::string(text_) + "'");
    }

    std::string_view text_;
    char var_;
    std::size_t pos_ = 0;
};

Integer bareiss_determinant(std::vector<std::vector<Integer>> a) {
    const std::size_t n = a.size();
    if (n == 0) return 1;
    int sign = 1;
    Integer previous = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a[k][k].is_zero()) {
            std::size_t swap_row = k + 1;
            while (swap_row < n && a[swap_row][k].is_zero()) ++swap_row;
            if (swap_row == n) return 0;
            std::swap(a[k], a[swap_row]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                // Exact by Sylvester's identity.
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / previous;
            }
        }
        previous = a[k][k];
    }
    return sign < 0 ? -a[n - 1][n - 1] : a[n - 1][n - 1];
}

}  // namespace

IntPoly IntPoly::parse(std::string_view text, char variable) { return PolyParser(text, variable).parse(); }

IntPoly operator+(const IntPoly& a, const IntPoly& b) {
    std::vector<Integer> c(std::max(a.coeffs_.size(), b.coeffs_.size()));
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.coeff(i) + b.coeff(i);
    return IntPoly(std::move(c));
}

IntPoly operator-(const IntPoly& a, const IntPoly& b) {
    std::vector<Integer> c(std::max(a.coeffs_.size(), b.coeffs_.size()));
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.coeff(i) - b.coeff(i);
    return IntPoly(std::move(c));
}

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Integer> c(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return IntPoly(std::move(c));
}

std::pair<IntPoly, IntPoly> divmod_monic(const IntPoly& a, const IntPoly& divisor) {
    if (!divisor.is_monic()) throw Error(ErrorCode::InvalidArgument, "divisor must be monic");
    const int dd = divisor.degree();
    if (a.degree() < dd) return {IntPoly{}, a};
    std::vector<Integer> rem = a.coeffs();
    std::vector<Integer> quot(static_cast<std::size_t>(a.degree() - dd + 1));
    const auto& dc = divisor.coeffs();
    for (int i = a.degree(); i >= dd; --i) {
        Integer c = rem[static_cast<std::size_t>(i)];
        if (c.is_zero()) continue;
        const auto shift = static_cast<std::size_t>(i - dd);
        quot[shift] = c;
        for (std::size_t j = 0; j < dc.size(); ++j) rem[shift + j] -= c * dc[j];
    }
    rem.resize(static_cast<std::size_t>(dd));
    return {IntPoly(std::move(quot)), IntPoly(std::move(rem))};
}

Integer resultant(const IntPoly& a, const IntPoly& b) {
    if (a.is_zero() || b.is_zero()) return 0;
    const auto m = static_cast<std::size_t>(a.degree());
    const auto n = static_cast<std::size_t>(b.degree());
    if (m == 0) return Integer::pow(a.leading(), n);
    if (n == 0) return Integer::pow(b.leading(), m);

    const std::size_t size = m + n;
    std::vector<std::vector<Integer>> sylvester(size, std::vector<Integer>(size));
    for (std::size_t row = 0; row < n; ++row) {
        for (std::size_t k = 0; k <= m; ++k) sylvester[row][row + k] = a.coeff(m - k);
    }
    for (std::size_t row = 0; row < m; ++row) {
        for (std::size_t k = 0; k <= n; ++k) sylvester[n + row][row + k] = b.coeff(n - k);
    }
    return bareiss_determinant(std::move(sylvester));
}

Integer discriminant(const IntPoly& f) {
    if (f.degree() < 1) throw Error(ErrorCode::InvalidArgument, "discriminant needs degree >= 1");
    const auto n = static_cast<std::uint64_t>(f.degree());
    Integer r = resultant(f, f.derivative()) / f.leading();
    return (n * (n - 1) / 2) % 2 == 0 ? r : -r;
}

}  // namespace ktower
