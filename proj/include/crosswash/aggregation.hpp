#pragma once

#include <optional>
#include <set>
#include <span>

#include "crosswash/core.hpp"
#include "crosswash/dataset.hpp"

namespace crosswash::aggregation {

enum class LevelVariable { link, contribution };
enum class Scope { full, merged };
enum class Metric { capex, turnover };

std::string_view to_string(LevelVariable v);
std::string_view to_string(Scope s);

/// Per-level cells for one monetary metric. All three are absent when no
/// activity at the level carries the metric ("no activities" is distinct from
/// "sum is zero"). share_company is a fraction of the derived company total;
/// share_selected is a percentage of the selected activity set's total.
struct MetricCells {
    std::optional<double> musd;
    std::optional<double> share_company;
    std::optional<double> share_selected;
};

struct AggregateRow {
    int level = 0;
    MetricCells capex;
    MetricCells turnover;
};

/// CapEx/Turnover totals grouped by Link or Contribution level.
/// Rows are strictly increasing in level; levels with no data in either
/// metric are omitted.
struct GroupedAggregate {
    LevelVariable group_by = LevelVariable::link;
    Scope scope = Scope::full;
    std::vector<AggregateRow> rows;
    std::optional<double> capex_selected_total;
    std::optional<double> turnover_selected_total;

    const AggregateRow* find(int level) const noexcept;
};

/// Groups one activity set by level. Each metric is summed over the activities
/// that carry it; shares use CompanyContext-derived totals.
GroupedAggregate group_by_level(std::span<const core::Activity> activities, LevelVariable which,
                                const dataset::CompanyContext& context, Scope scope = Scope::full);

/// Same over the inner-join set; every activity must carry both figures.
GroupedAggregate group_merged(std::span<const core::Activity> activities, LevelVariable which,
                              const dataset::CompanyContext& context);

/// Outer-joins two aggregates on level, taking capex cells from `capex_side`
/// and turnover cells from `turnover_side`. This is how the full-scope table
/// combines the capex-only and turnover-only groupings.
GroupedAggregate merge_metrics(const GroupedAggregate& capex_side,
                               const GroupedAggregate& turnover_side);

/// Sum of share_selected over the requested levels for one metric. Levels
/// absent from the aggregate (or lacking the metric) contribute zero.
double concentration_summary(const GroupedAggregate& aggregate, const std::set<int>& levels,
                             Metric metric);

}  // namespace crosswash::aggregation
