#pragma once

#include <cstdint>

#include <json.hpp>

#include "ktower/tower/plan.hpp"

namespace ktower {

inline constexpr int kSchemaVersion = 1;

using Json = nlohmann::ordered_json;

Json to_json(const ValidationReport& report);
Json to_json(const GammaSpec& gamma);
Json to_json(const FieldDiagram& diagram);

/// Versioned plan document; big integers are decimal strings and keys keep
/// a fixed order so identical plans serialize byte-identically.
Json plan_to_json(const TowerPlan& plan, std::uint64_t n_max);

}  // namespace ktower
