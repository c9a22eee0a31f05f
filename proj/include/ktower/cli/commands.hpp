#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "ktower/bounds/certificate.hpp"
#include "ktower/cli/fixtures.hpp"
#include "ktower/cli/warnings.hpp"
#include "ktower/cyclotomic/cyclotomic.hpp"
#include "ktower/tower/plan.hpp"

namespace ktower::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;

struct GlobalOptions {
    bool json = false;
    std::uint64_t n_max = 3;
};

enum class CheckStatus { Pass, Warn, Fail };

std::string_view to_string(CheckStatus status) noexcept;

struct Check {
    std::string name;
    CheckStatus status = CheckStatus::Pass;
    std::string detail;
    std::string warning;  // code when status is Warn
};

struct Reproduction {
    const fixtures::Fixture* fixture = nullptr;
    std::vector<Check> checks;
    std::vector<Warning> warnings;
    TowerPlan plan;
    std::optional<BoundCertificate> certificate;
    std::optional<FactorizationCheck> factorization;

    bool passed() const;
};

/// Runs the full pipeline for one worked example and compares against the
/// transcribed values. Catalogued discrepancies are warnings.
Reproduction run_reproduction(const fixtures::Fixture& fixture, std::uint64_t n_max);

/// Index of the first differing character, or nullopt when equal.
std::optional<std::size_t> first_difference(std::string_view a, std::string_view b);

struct TowerOptions {
    std::uint64_t ell = 0;
    std::uint64_t p = 0;
    std::string N = "1";
    std::uint64_t d = 1;
    std::uint64_t m = 2;
    std::string family = "abelian";  // abelian | nilpotent | gamma<s> | custom
    std::uint64_t s = 1;
    std::string presentation;
    std::optional<std::uint64_t> base_conductor;
    std::optional<std::string> relative_poly;
    std::optional<std::string> checklist;  // four 0/1 flags, items 1..4
    std::string provenance = "asserted";

    std::optional<std::string> variety;
    std::uint64_t dim_a = 1;
    bool torsion = false;
    std::vector<std::uint64_t> bad_primes;
    std::optional<std::uint64_t> s0;
    bool inflate = false;
};

/// Turns the options into a request. For m = 2 without a conductor, the
/// smallest conductor passing the base-field checks is used; for m > 2
/// without a base, a catalogued F/F_0 with matching (m, p) is used.
TowerRequest make_request(const TowerOptions& options);

int cmd_reproduce(std::string_view example_id, const GlobalOptions& global, std::ostream& out, std::ostream& err);
int cmd_construct(const TowerOptions& options, const GlobalOptions& global, std::ostream& out, std::ostream& err);
/// Certificate for a worked example (when `example_id` is set) or for the
/// given tower options, which then must name a variety.
int cmd_certificate(const std::optional<std::string>& example_id, const TowerOptions& options,
                    const GlobalOptions& global, std::ostream& out, std::ostream& err);
int cmd_verify_factorization(std::uint64_t conductor, std::uint64_t prime, const std::vector<std::string>& factors,
                             const GlobalOptions& global, std::ostream& out, std::ostream& err);
int cmd_split(std::uint64_t q, std::uint64_t m, const GlobalOptions& global, std::ostream& out, std::ostream& err);
int cmd_inert_primes(std::uint64_t m, std::uint64_t count, const std::vector<std::uint64_t>& exclude,
                     const GlobalOptions& global, std::ostream& out, std::ostream& err);

}  // namespace ktower::cli
