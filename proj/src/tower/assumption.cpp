#include "ktower/tower/assumption.hpp"

namespace ktower {

std::string_view to_string(Provenance provenance) noexcept {
    switch (provenance) {
    case Provenance::Computed: return "computed";
    case Provenance::ExternalDatabase: return "external-database";
    case Provenance::Asserted: return "asserted";
    }
    return "unknown";
}

std::optional<Provenance> parse_provenance(std::string_view text) {
    if (text == "computed") return Provenance::Computed;
    if (text == "external-database") return Provenance::ExternalDatabase;
    if (text == "asserted") return Provenance::Asserted;
    return std::nullopt;
}

AssumptionReport check_assumption(const AssumptionChecklist& checklist) {
    AssumptionReport report;
    if (checklist.m <= 2) {
        report.vacuous = true;
        report.notes.push_back("m = " + std::to_string(checklist.m) + ": the F/F_0 hypotheses are only required for m > 2");
        return report;
    }
    if (!checklist.f0_totally_imaginary) report.fail("item 1: F_0 is not totally imaginary", "assumption.1");
    if (!checklist.contains_mu_p) report.fail("item 2: F does not contain μ_p", "assumption.2");
    if (!checklist.unique_prime_above_p) report.fail("item 3: more than one prime of F above p", "assumption.3");
    if (!checklist.p_part_of_p_class_group_trivial) {
        report.fail("item 4: p-part of the 𝔭-class group is nontrivial", "assumption.4");
    }
    report.p_rational =
        checklist.contains_mu_p && checklist.unique_prime_above_p && checklist.p_part_of_p_class_group_trivial;
    if (report.p_rational) report.notes.push_back("F is p-rational [p-rational]");
    report.notes.push_back("facts for " + checklist.base_field_desc + " have provenance " +
                           std::string(to_string(checklist.provenance)));
    return report;
}

}  // namespace ktower
