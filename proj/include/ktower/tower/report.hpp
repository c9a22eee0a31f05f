#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace ktower {

/// A stable tag naming the mathematical statement a check or inequality
/// relies on, with the statement itself in formula form.
struct Citation {
    std::string_view tag;
    std::string_view statement;
};

/// Looks up a tag from the built-in catalogue. Throws InvalidArgument for
/// unknown tags so every emitted citation is resolvable.
const Citation& cite(std::string_view tag);

const std::vector<Citation>& citation_catalogue();

struct Finding {
    std::string constraint;
    std::string citation;  // tag into the catalogue
};

struct ValidationReport {
    std::vector<Finding> failures;
    std::vector<std::string> notes;

    bool passed() const noexcept { return failures.empty(); }
    void fail(std::string constraint, std::string_view tag);
    /// One line per failure, "constraint [tag: statement]".
    std::string summary() const;
};

}  // namespace ktower
