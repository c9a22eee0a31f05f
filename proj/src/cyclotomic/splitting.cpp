#include "ktower/cyclotomic/splitting.hpp"

#include "ktower/arith/number_theory.hpp"
#include "ktower/arith/primes.hpp"
#include "ktower/cyclotomic/cyclotomic.hpp"
#include "ktower/error.hpp"

namespace ktower {

std::string SplittingData::describe() const {
    std::string out = "e=" + std::to_string(e) + " f=" + std::to_string(f) + " g=" + std::to_string(g);
    if (f == 1 && g > 1) {
        out += " (splits completely)";
    } else if (g == 1 && f > 1) {
        out += " (inert)";
    } else if (g > 1) {
        out += " (splits into " + std::to_string(g) + " primes of degree " + std::to_string(f) + ")";
    }
    return out;
}

SplittingData splitting_data(std::uint64_t q, std::uint64_t m) {
    if (m == 0) throw Error(ErrorCode::InvalidArgument, "conductor must be >= 1");
    if (!is_prime_u64(q)) throw Error(ErrorCode::InvalidArgument, std::to_string(q) + " is not prime");
    if (m % q == 0) {
        throw Error(ErrorCode::RamifiedPrime, std::to_string(q) + " divides the conductor " + std::to_string(m));
    }
    const std::uint64_t phi = euler_phi(m);
    const std::uint64_t f = m <= 2 ? 1 : mult_order_u64(q, m);
    return SplittingData{q, m, 1, f, phi / f};
}

bool is_inert(std::uint64_t q, std::uint64_t m) { return splitting_data(q, m).inert(); }

std::string PrimeIdealDescriptor::to_string() const {
    return "(" + std::to_string(q) + ", zeta" + std::to_string(m) + " - " + std::to_string(root) + ")";
}

std::vector<PrimeIdealDescriptor> primes_above(std::uint64_t q, std::uint64_t m) {
    const SplittingData data = splitting_data(q, m);
    if (data.f != 1) {
        throw Error(ErrorCode::NotTotallySplit, std::to_string(q) + " has residue degree " +
                                                    std::to_string(data.f) + " in Q(zeta_" +
                                                    std::to_string(m) + ")");
    }
    const IntPoly phi_m = cyclotomic_polynomial(m).polynomial;
    std::vector<PrimeIdealDescriptor> out;
    for (std::uint64_t a = 0; a < q; ++a) {
        if (phi_m.evaluate_mod(a, q) == 0) out.push_back({q, m, a});
    }
    if (out.size() != data.g) {
        throw Error(ErrorCode::InvalidArgument, "root count disagrees with the splitting law");
    }
    return out;
}

}  // namespace ktower
