#pragma once

#include <filesystem>
#include <map>
#include <string>
#include <vector>

#include "crosswash/aggregation.hpp"
#include "crosswash/core.hpp"
#include "crosswash/dataset.hpp"

namespace crosswash::reproduce {

/// The published result set regenerated from a data bundle: both scoring runs
/// and the four grouped aggregates.
struct PaperTables {
    core::ScoreTable table7;  // CapEx .3, Turnover .2, Link .3, Contribution .2
    core::ScoreTable table8;  // Link .3, Contribution .2
    aggregation::GroupedAggregate table2;  // full scope by link
    aggregation::GroupedAggregate table3;  // full scope by contribution
    aggregation::GroupedAggregate table4;  // merged by link
    aggregation::GroupedAggregate table5;  // merged by contribution
    std::map<std::string, std::string> names;
};

PaperTables regenerate(const dataset::Bundle& bundle);

/// Writes the golden snapshot (table2..table5, table7, table8, context) to a
/// directory, at display precision.
void write_goldens(const dataset::Bundle& bundle, const std::filesystem::path& out_dir);

struct Check {
    std::string name;  // "table7", ..., "context"
    bool ok = true;
    std::string detail;  // first differing cell when !ok
};

struct Result {
    std::vector<Check> checks;

    bool all_ok() const noexcept;
    const Check* first_mismatch() const noexcept;
};

/// Regenerates every table from the bundle in `data_dir` and diffs against the
/// golden snapshot. Tolerances: scores +/-0.01, shares +/-0.0005, monetary
/// millions exact. Check order: table7, table8, table2..table5, context.
Result run(const std::filesystem::path& data_dir, const std::filesystem::path& golden_dir);

}  // namespace crosswash::reproduce
