#pragma once

#include <cstdint>
#include <vector>

#include "ktower/cyclotomic/int_poly.hpp"
#include "ktower/cyclotomic/splitting.hpp"
#include "ktower/finite_poly/finite_field.hpp"

namespace ktower {

struct RelativeInertness {
    SplittingData splitting;        // q in the cyclotomic base Q(zeta_m)
    FieldPtr residue_field;         // F_{q^f}
    std::vector<bool> per_prime;    // one entry per prime of the base above q

    bool all_inert() const noexcept;
};

/// For each prime of Q(zeta_m) above q, whether the extension generated by a
/// root of `defining_poly` is inert there, decided by irreducibility of the
/// reduction in the residue field F_{q^f}. Rational coefficients land in the
/// prime subfield, so every prime above q gets the same answer.
///
/// Only valid away from the discriminant: throws DiscriminantDivisible when
/// q | disc(defining_poly), RamifiedPrime when q | m, InvalidArgument when
/// the polynomial is not monic of degree >= 1.
RelativeInertness is_inert_in_relative_extension(const IntPoly& defining_poly, std::uint64_t q,
                                                 std::uint64_t m);

}  // namespace ktower
