#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace ktower {

/// Catalogued discrepancies between printed example data and what the
/// arithmetic gives. Codes are stable; reports refer to them by code.
struct WarningInfo {
    std::string_view code;
    std::string_view summary;
};

const std::vector<WarningInfo>& warning_catalogue();
/// Throws InvalidArgument for unknown codes.
const WarningInfo& warning_info(std::string_view code);

struct Warning {
    std::string code;
    std::string detail;
};

}  // namespace ktower
