#pragma once

#include <string>
#include <string_view>

#include "ktower/cyclotomic/cyclotomic.hpp"

namespace ktower {

enum class ZetaStyle {
    Unicode,  // "ζ₇⁵ + 2ζ₇³ + ζ₇² + 1"
    Ascii,    // "z^5 + 2*z^3 + z^2 + 1"
};

std::string render(const CycloElement& element, ZetaStyle style = ZetaStyle::Unicode);

/// Parses either rendering style (plus "zeta" as an ASCII spelling, U+2212
/// as minus, and one optional pair of enclosing parentheses). Exponents may
/// exceed phi(m); the result is reduced. A conductor subscript, if given,
/// must match the field. Throws ParseError.
CycloElement parse_cyclo(std::string_view text, const ModulusPtr& modulus);

}  // namespace ktower
