#pragma once

#include <cstddef>
#include <map>

#include "ktower/finite_poly/fq_poly.hpp"

namespace ktower {

/// Rabin's test over the coefficient field of size Q: with n = deg f,
/// x^(Q^n) = x mod f and gcd(x^(Q^(n/r)) - x, f) = 1 for every prime r | n.
/// The input is normalized to monic first; constants are not irreducible.
/// Throws ZeroPolynomial.
bool is_irreducible(const FqPoly& f);

/// degree -> number of irreducible factors of that degree, by peeling
/// gcd(f, x^(Q^d) - x) for d = 1, 2, .... Requires gcd(f, f') = 1.
/// Throws NotSquarefree, ZeroPolynomial.
using DegreeProfile = std::map<std::size_t, std::size_t>;
DegreeProfile distinct_degree_profile(const FqPoly& f);

}  // namespace ktower
