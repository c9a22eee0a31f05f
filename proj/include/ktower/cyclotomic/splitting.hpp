#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace ktower {

/// Decomposition of a rational prime q in Q(zeta_m): e * f * g = phi(m).
struct SplittingData {
    std::uint64_t q = 0;
    std::uint64_t m = 0;
    std::uint64_t e = 1;
    std::uint64_t f = 1;
    std::uint64_t g = 1;

    bool splits_completely() const noexcept { return f == 1 && e == 1; }
    bool inert() const noexcept { return g == 1 && e == 1; }

    /// e.g. "e=1 f=1 g=6 (splits completely)".
    std::string describe() const;

    friend bool operator==(const SplittingData&, const SplittingData&) = default;
};

/// Unramified splitting law: f = ord_m(q), g = phi(m) / f.
/// Throws RamifiedPrime when q | m, InvalidArgument when q is not prime.
SplittingData splitting_data(std::uint64_t q, std::uint64_t m);

bool is_inert(std::uint64_t q, std::uint64_t m);

/// Two-generator description (q, zeta_m - root) of a degree-one prime.
struct PrimeIdealDescriptor {
    std::uint64_t q = 0;
    std::uint64_t m = 0;
    std::uint64_t root = 0;

    std::string to_string() const;

    friend bool operator==(const PrimeIdealDescriptor&, const PrimeIdealDescriptor&) = default;
};

/// The phi(m) primes above a totally split q, one per root of Phi_m mod q,
/// in ascending order of the root. Throws NotTotallySplit when f > 1.
std::vector<PrimeIdealDescriptor> primes_above(std::uint64_t q, std::uint64_t m);

}  // namespace ktower
