#include "ktower/cyclotomic/zeta_format.hpp"

#include <cstdint>
#include <vector>

#include "ktower/error.hpp"

namespace ktower {

namespace {

constexpr char32_t kZeta = U'ζ';
constexpr char32_t kMinusSign = U'−';

void append_utf8(std::string& out, char32_t cp) {
    if (cp < 0x80) {
        out.push_back(static_cast<char>(cp));
    } else if (cp < 0x800) {
        out.push_back(static_cast<char>(0xC0 | (cp >> 6)));
        out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    } else {
        out.push_back(static_cast<char>(0xE0 | (cp >> 12)));
        out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
        out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    }
}

std::u32string decode_utf8(std::string_view text) {
    std::u32string out;
    for (std::size_t i = 0; i < text.size();) {
        const auto b0 = static_cast<unsigned char>(text[i]);
        int extra = b0 < 0x80 ? 0 : (b0 >> 5) == 0x6 ? 1 : (b0 >> 4) == 0xE ? 2 : (b0 >> 3) == 0x1E ? 3 : -1;
        if (extra < 0 || (extra > 0 && i + static_cast<std::size_t>(extra) >= text.size())) {
            throw Error(ErrorCode::ParseError, "invalid UTF-8 input");
        }
        char32_t cp = extra == 0 ? b0 : (b0 & (0x3F >> extra));
        for (int k = 1; k <= extra; ++k) {
            const auto b = static_cast<unsigned char>(text[i + static_cast<std::size_t>(k)]);
            if ((b & 0xC0) != 0x80) throw Error(ErrorCode::ParseError, "invalid UTF-8 input");
            cp = (cp << 6) | (b & 0x3F);
        }
        out.push_back(cp);
        i += static_cast<std::size_t>(extra) + 1;
    }
    return out;
}

char32_t superscript(unsigned d) {
    switch (d) {
    case 1: return U'¹';
    case 2: return U'²';
    case 3: return U'³';
    default: return U'⁰' + d;
    }
}

int superscript_value(char32_t cp) {
    if (cp == U'¹') return 1;
    if (cp == U'²') return 2;
    if (cp == U'³') return 3;
    if (cp == U'⁰' || (cp >= U'⁴' && cp <= U'⁹')) return static_cast<int>(cp - U'⁰');
    return -1;
}

int subscript_value(char32_t cp) {
    return cp >= U'₀' && cp <= U'₉' ? static_cast<int>(cp - U'₀') : -1;
}

void append_digits(std::string& out, std::uint64_t value, char32_t (*glyph)(unsigned)) {
    std::string digits = std::to_string(value);
    for (char c : digits) append_utf8(out, glyph(static_cast<unsigned>(c - '0')));
}

char32_t subscript(unsigned d) { return U'₀' + d; }

class ZetaParser {
public:
    ZetaParser(std::u32string text, std::string original, ModulusPtr modulus)
        : text_(std::move(text)), original_(std::move(original)), modulus_(std::move(modulus)) {}

    CycloElement parse() {
        strip_parentheses();
        std::vector<Integer> coeffs;
        skip_space();
        if (at_end()) fail("empty expression");
        bool first = true;
        while (!at_end()) {
            int sign = 1;
            if (peek() == U'+' || peek() == U'-' || peek() == kMinusSign) {
                sign = peek() == U'+' ? 1 : -1;
                ++pos_;
                skip_space();
            } else if (!first) {
                fail("expected '+' or '-'");
            }
            auto [coeff, exponent] = term();
            if (coeffs.size() <= exponent) coeffs.resize(exponent + 1);
            coeffs[exponent] += sign < 0 ? -coeff : coeff;
            first = false;
            skip_space();
        }
        return CycloElement(modulus_, std::move(coeffs));
    }

private:
    void strip_parentheses() {
        std::size_t b = 0, e = text_.size();
        while (b < e && is_space(text_[b])) ++b;
        while (e > b && is_space(text_[e - 1])) --e;
        if (e - b >= 2 && text_[b] == U'(' && text_[e - 1] == U')') {
            text_ = text_.substr(b + 1, e - b - 2);
        }
    }

    std::pair<Integer, std::size_t> term() {
        Integer coeff = 1;
        bool have_number = false;
        if (!at_end() && is_digit(peek())) {
            coeff = Integer::from_string(ascii_digits());
            have_number = true;
            skip_space();
            if (!at_end() && peek() == U'*') {
                ++pos_;
                skip_space();
                if (!at_zeta()) fail("expected zeta after '*'");
            }
        }
        if (!at_zeta()) {
            if (!have_number) fail("expected coefficient or zeta");
            return {coeff, 0};
        }
        consume_zeta();
        return {coeff, exponent()};
    }

    bool at_zeta() const {
        return !at_end() && (peek() == kZeta || peek() == U'z');
    }

    void consume_zeta() {
        if (text_.compare(pos_, 4, U"zeta") == 0) {
            pos_ += 4;
        } else {
            ++pos_;
        }
        // Optional conductor: Unicode subscript digits, or "_m" in ASCII.
        std::uint64_t conductor = 0;
        bool have_conductor = false;
        if (!at_end() && peek() == U'_') {
            ++pos_;
            if (at_end() || !is_digit(peek())) fail("expected conductor after '_'");
            conductor = *Integer::from_string(ascii_digits()).to_u64();
            have_conductor = true;
        } else {
            while (!at_end() && subscript_value(peek()) >= 0) {
                conductor = conductor * 10 + static_cast<std::uint64_t>(subscript_value(peek()));
                ++pos_;
                have_conductor = true;
            }
        }
        if (have_conductor && conductor != modulus_->m) {
            fail("conductor " + std::to_string(conductor) + " does not match field Q(zeta_" +
                 std::to_string(modulus_->m) + ")");
        }
    }

    std::size_t exponent() {
        std::uint64_t e = 1;
        if (!at_end() && superscript_value(peek()) >= 0) {
            e = 0;
            while (!at_end() && superscript_value(peek()) >= 0) {
                e = e * 10 + static_cast<std::uint64_t>(superscript_value(peek()));
                ++pos_;
                if (e > 1'000'000) fail("exponent out of range");
            }
        } else {
            skip_space();
            if (!at_end() && peek() == U'^') {
                ++pos_;
                skip_space();
                if (at_end() || !is_digit(peek())) fail("expected exponent");
                auto v = Integer::from_string(ascii_digits()).to_u64();
                if (!v || *v > 1'000'000) fail("exponent out of range");
                e = *v;
            }
        }
        // zeta^m = 1, so only the residue matters.
        return static_cast<std::size_t>(e % modulus_->m);
    }

    std::string ascii_digits() {
        std::string out;
        while (!at_end() && is_digit(peek())) out.push_back(static_cast<char>(text_[pos_++]));
        return out;
    }

    static bool is_digit(char32_t c) { return c >= U'0' && c <= U'9'; }
    static bool is_space(char32_t c) { return c == U' ' || c == U'\t' || c == U'\n' || c == U'\r'; }
    void skip_space() {
        while (!at_end() && is_space(peek())) ++pos_;
    }
    bool at_end() const { return pos_ >= text_.size(); }
    char32_t peek() const { return text_[pos_]; }

    [[noreturn]] void fail(const std::string& what) const {
        throw Error(ErrorCode::ParseError, what + " in '" + original_ + "'");
    }

    std::u32string text_;
    std::string original_;
    ModulusPtr modulus_;
    std::size_t pos_ = 0;
};

}  // namespace

std::string render(const CycloElement& element, ZetaStyle style) {
    const auto& c = element.coeffs();
    std::string out;
    for (std::size_t i = c.size(); i-- > 0;) {
        if (c[i].is_zero()) continue;
        const bool first = out.empty();
        if (c[i].sign() < 0) {
            out += first ? "-" : " - ";
        } else if (!first) {
            out += " + ";
        }
        const Integer mag = c[i].abs();
        if (i == 0) {
            out += mag.to_string();
            continue;
        }
        if (style == ZetaStyle::Unicode) {
            if (mag != 1) out += mag.to_string();
            append_utf8(out, kZeta);
            append_digits(out, element.modulus().m, subscript);
            if (i > 1) append_digits(out, i, superscript);
        } else {
            if (mag != 1) out += mag.to_string() + "*";
            out += "z";
            if (i > 1) out += "^" + std::to_string(i);
        }
    }
    return out.empty() ? "0" : out;
}

CycloElement parse_cyclo(std::string_view text, const ModulusPtr& modulus) {
    return ZetaParser(decode_utf8(text), std::string(text), modulus).parse();
}

}  // namespace ktower
