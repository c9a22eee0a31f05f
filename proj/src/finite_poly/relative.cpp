#include "ktower/finite_poly/relative.hpp"

#include <algorithm>

#include "ktower/error.hpp"
#include "ktower/finite_poly/fq_poly.hpp"
#include "ktower/finite_poly/irreducibility.hpp"

namespace ktower {

bool RelativeInertness::all_inert() const noexcept {
    return std::all_of(per_prime.begin(), per_prime.end(), [](bool b) { return b; });
}

RelativeInertness is_inert_in_relative_extension(const IntPoly& defining_poly, std::uint64_t q,
                                                 std::uint64_t m) {
    if (defining_poly.degree() < 1 || !defining_poly.is_monic()) {
        throw Error(ErrorCode::InvalidArgument, "defining polynomial must be monic of degree >= 1");
    }
    const SplittingData splitting = splitting_data(q, m);
    const Integer disc = discriminant(defining_poly);
    if ((disc % Integer(q)).is_zero()) {
        throw Error(ErrorCode::DiscriminantDivisible,
                    std::to_string(q) + " divides disc(" + defining_poly.to_string() + ") = " + disc.to_string());
    }
    FieldPtr residue = build_extension_field(q, splitting.f);
    const bool inert = is_irreducible(FqPoly::reduce(defining_poly, residue));
    return RelativeInertness{splitting, residue, std::vector<bool>(splitting.g, inert)};
}

}  // namespace ktower
