#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "ktower/tower/assumption.hpp"
#include "ktower/tower/gamma.hpp"

namespace ktower::fixtures {

/// The three worked examples, transcribed as printed. Nothing here is
/// recomputed; the reproduce command compares against these values.
struct Fixture {
    std::string id;
    std::uint64_t ell = 0;
    std::uint64_t p = 0;
    std::uint64_t N = 0;
    std::uint64_t d = 0;
    std::uint64_t m = 0;
    GammaFamily family = GammaFamily::Abelian;
    std::uint64_t s = 0;

    std::uint64_t base_conductor = 0;
    std::optional<std::string> relative_poly;
    std::optional<AssumptionChecklist> checklist;

    std::vector<std::string> expected_prime_list;
    std::string expected_alpha;
    std::uint64_t printed_t = 0;
    std::string printed_t_text;

    // The curve used for the fine-Selmer statement.
    std::string variety_label;
    std::uint64_t variety_dim = 1;
    std::set<std::uint64_t> variety_bad_primes;

    // Printed bound r_ℓ(Cl(L_n)) ≥ coefficient·base^n.
    std::uint64_t printed_class_coefficient = 0;
    std::uint64_t printed_class_base = 0;

    // Example 2.
    std::uint64_t printed_extension_dimension = 0;  // dimension named for L_∞/L

    // Example 3.
    std::uint64_t factored_prime = 0;
    std::vector<std::string> factors;
    std::uint64_t class_number = 0;
    std::uint64_t places_per_prime = 0;
};

const Fixture& example1();
const Fixture& example2();
const Fixture& example3();

const std::vector<const Fixture*>& all();
/// nullptr for unknown ids.
const Fixture* find(std::string_view id);

}  // namespace ktower::fixtures
