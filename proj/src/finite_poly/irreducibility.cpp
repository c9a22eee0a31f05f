#include "ktower/finite_poly/irreducibility.hpp"

#include "ktower/arith/number_theory.hpp"
#include "ktower/error.hpp"

namespace ktower {

bool is_irreducible(const FqPoly& f) {
    if (f.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "irreducibility of the zero polynomial");
    const FqPoly g = f.monic();
    const auto n = static_cast<std::uint64_t>(g.degree());
    if (n == 0) return false;
    if (n == 1) return true;

    const FqPoly x = FqPoly::x(g.field_ptr());
    if (!(frobenius(x, n, g) == x % g)) return false;
    for (auto [r, exponent] : factor_u64(n)) {
        (void)exponent;
        const FqPoly h = frobenius(x, n / r, g) - x;
        if (!gcd(h, g).is_one()) return false;
    }
    return true;
}

DegreeProfile distinct_degree_profile(const FqPoly& f) {
    if (f.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "factor profile of the zero polynomial");
    FqPoly rest = f.monic();
    if (rest.degree() == 0) return {};
    const FqPoly derivative = rest.derivative();
    if (derivative.is_zero() || !gcd(rest, derivative).is_one()) {
        throw Error(ErrorCode::NotSquarefree, rest.to_string() + " has a repeated factor");
    }

    DegreeProfile profile;
    const FqPoly x = FqPoly::x(rest.field_ptr());
    FqPoly h = x % rest;
    for (std::size_t d = 1; 2 * d <= static_cast<std::size_t>(rest.degree()); ++d) {
        h = frobenius(h, 1, rest);
        const FqPoly common = gcd(h - x, rest);
        if (common.degree() > 0) {
            profile[d] += static_cast<std::size_t>(common.degree()) / d;
            rest = divmod(rest, common).first;
            h = h % rest;
        }
    }
    if (rest.degree() > 0) profile[static_cast<std::size_t>(rest.degree())] += 1;
    return profile;
}

}  // namespace ktower
