#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "ktower/tower/report.hpp"

namespace ktower {

enum class GammaFamily {
    Abelian,    // Z_p^d
    Nilpotent,  // Γ(s), dimension 3
    Custom,     // free-form presentation text
};

std::string_view to_string(GammaFamily family) noexcept;
std::optional<GammaFamily> parse_gamma_family(std::string_view text);

/// The uniform pro-p group Γ together with the order m of its
/// fixed-point-free automorphism.
struct GammaSpec {
    std::uint64_t p = 0;
    std::uint64_t d = 1;
    std::uint64_t m = 2;
    GammaFamily family = GammaFamily::Abelian;
    std::uint64_t s = 0;        // Nilpotent only
    std::string presentation;   // Custom only

    std::string describe() const;
};

/// Never throws; every violated constraint is a report entry.
ValidationReport validate_gamma(const GammaSpec& spec);

}  // namespace ktower
