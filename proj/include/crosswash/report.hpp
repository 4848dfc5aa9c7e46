#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "crosswash/aggregation.hpp"
#include "crosswash/core.hpp"
#include "crosswash/sensitivity.hpp"

namespace crosswash::report {

enum class Format { markdown, csv, jsonl };

Format parse_format(std::string_view name);  // throws ValidationError on unknown names

struct Options {
    Format format = Format::markdown;
    // Mirrors the published tables: share-of-company as a fraction next to
    // share-of-selected as a percentage, with the original column headings.
    bool paper_compat = false;
};

using NameMap = std::map<std::string, std::string>;  // code -> activity name

NameMap name_map(std::span<const core::Activity> activities);

/// Markdown shows display-rounded values; csv/jsonl carry full precision.
std::string render_scores(const core::ScoreTable& table, const NameMap& names,
                          const Options& options,
                          std::optional<double> adjusted_env_score = std::nullopt);

std::string render_aggregate(const aggregation::GroupedAggregate& aggregate,
                             const Options& options);

std::string render_sweep(const sensitivity::SweepResult& sweep,
                         const std::vector<sensitivity::StabilityRow>& stability,
                         const Options& options);

}  // namespace crosswash::report
