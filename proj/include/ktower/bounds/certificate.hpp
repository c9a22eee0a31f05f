#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ktower/bounds/bounds.hpp"
#include "ktower/tower/serialize.hpp"

namespace ktower {

struct CertificateRow {
    std::uint64_t n = 0;
    Integer T_lower;
    Integer degree_lower;
    Integer ambiguous_lower;
    Integer class_rank_lower;
    Integer s_class_gap;
    Integer fine_selmer_conservative;
    Integer fine_selmer_paper;
};

/// One step of an inequality chain, with layer numbers substituted.
struct TraceEntry {
    std::optional<std::uint64_t> n;  // empty for chain-wide statements
    std::string citation;
    std::string text;
};

/// A step whose printed form does not follow from the arithmetic.
struct CertificateFlag {
    std::string code;
    std::string citation;
    std::string text;
};

struct BoundCertificate {
    TowerPlan plan;
    AbelianVarietyDesc variety;
    std::uint64_t s0 = 0;
    std::uint64_t q = 0;
    InflationPolicy policy = InflationPolicy::Require;
    std::vector<CertificateRow> rows;
    std::vector<TraceEntry> inequality_trace;
    std::vector<CertificateFlag> flags;
};

inline constexpr std::uint64_t kMaxCertificateLayers = 1000;

BoundCertificate build_certificate(const TowerPlan& plan, const AbelianVarietyDesc& A, std::uint64_t s0,
                                   std::uint64_t n_max, InflationPolicy policy = InflationPolicy::Require);

Json certificate_to_json(const BoundCertificate& certificate);

/// Fixed-width text table followed by the flags.
std::string certificate_table(const BoundCertificate& certificate);

}  // namespace ktower
