#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "ktower/tower/report.hpp"

namespace ktower {

enum class Provenance { Computed, ExternalDatabase, Asserted };

std::string_view to_string(Provenance provenance) noexcept;
std::optional<Provenance> parse_provenance(std::string_view text);

/// The four hypotheses on F/F_0 needed when m > 2.
struct AssumptionChecklist {
    std::uint64_t m = 3;
    std::string base_field_desc;
    bool f0_totally_imaginary = false;
    bool contains_mu_p = false;
    bool unique_prime_above_p = false;
    bool p_part_of_p_class_group_trivial = false;
    Provenance provenance = Provenance::Asserted;
};

struct AssumptionReport : ValidationReport {
    bool vacuous = false;     // m = 2: nothing to check
    bool p_rational = false;  // derived from items 2-4
};

AssumptionReport check_assumption(const AssumptionChecklist& checklist);

}  // namespace ktower
