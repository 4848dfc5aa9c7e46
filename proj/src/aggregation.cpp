#include "crosswash/aggregation.hpp"

#include <map>

#include "crosswash/errors.hpp"

namespace crosswash::aggregation {
namespace {

struct Accumulator {
    double sum = 0.0;
    bool present = false;
};

int level_of(const core::Activity& activity, LevelVariable which) {
    return which == LevelVariable::link ? activity.link : activity.contribution;
}

MetricCells make_cells(const Accumulator& acc, double company_total, double selected_total) {
    MetricCells cells;
    if (acc.present) {
        cells.musd = acc.sum;
        cells.share_company = acc.sum / company_total;
        cells.share_selected = 100.0 * acc.sum / selected_total;
    }
    return cells;
}

}  // namespace

std::string_view to_string(LevelVariable v) {
    return v == LevelVariable::link ? "link" : "contribution";
}

std::string_view to_string(Scope s) {
    return s == Scope::full ? "full" : "merged";
}

const AggregateRow* GroupedAggregate::find(int level) const noexcept {
    for (const AggregateRow& row : rows) {
        if (row.level == level) {
            return &row;
        }
    }
    return nullptr;
}

GroupedAggregate group_by_level(std::span<const core::Activity> activities, LevelVariable which,
                                const dataset::CompanyContext& context, Scope scope) {
    if (activities.empty()) {
        throw ValidationError("group_by_level: no activities");
    }
    core::validate(activities);

    std::map<int, Accumulator> capex_groups;
    std::map<int, Accumulator> turnover_groups;
    double capex_total = 0.0;
    double turnover_total = 0.0;
    bool any_capex = false;
    bool any_turnover = false;
    for (const core::Activity& activity : activities) {
        const int level = level_of(activity, which);
        if (activity.capex) {
            Accumulator& acc = capex_groups[level];
            acc.sum += *activity.capex;
            acc.present = true;
            capex_total += *activity.capex;
            any_capex = true;
        }
        if (activity.turnover) {
            Accumulator& acc = turnover_groups[level];
            acc.sum += *activity.turnover;
            acc.present = true;
            turnover_total += *activity.turnover;
            any_turnover = true;
        }
    }

    GroupedAggregate aggregate;
    aggregate.group_by = which;
    aggregate.scope = scope;
    if (any_capex) {
        aggregate.capex_selected_total = capex_total;
    }
    if (any_turnover) {
        aggregate.turnover_selected_total = turnover_total;
    }
    for (int level = core::kMinLevel; level <= core::kMaxLevel; ++level) {
        const auto capex_it = capex_groups.find(level);
        const auto turnover_it = turnover_groups.find(level);
        const bool has_capex = capex_it != capex_groups.end();
        const bool has_turnover = turnover_it != turnover_groups.end();
        if (!has_capex && !has_turnover) {
            continue;
        }
        AggregateRow row;
        row.level = level;
        if (has_capex) {
            row.capex = make_cells(capex_it->second, context.company_capex_total(), capex_total);
        }
        if (has_turnover) {
            row.turnover =
                make_cells(turnover_it->second, context.company_turnover_total(), turnover_total);
        }
        aggregate.rows.push_back(row);
    }
    return aggregate;
}

GroupedAggregate group_merged(std::span<const core::Activity> activities, LevelVariable which,
                              const dataset::CompanyContext& context) {
    for (const core::Activity& activity : activities) {
        if (!activity.capex || !activity.turnover) {
            throw ValidationError("group_merged: activity '" + activity.code +
                                  "' lacks a monetary figure (merged scope needs both)");
        }
    }
    return group_by_level(activities, which, context, Scope::merged);
}

GroupedAggregate merge_metrics(const GroupedAggregate& capex_side,
                               const GroupedAggregate& turnover_side) {
    if (capex_side.group_by != turnover_side.group_by) {
        throw ValidationError("merge_metrics: aggregates group by different level variables");
    }
    GroupedAggregate merged;
    merged.group_by = capex_side.group_by;
    merged.scope = Scope::full;
    merged.capex_selected_total = capex_side.capex_selected_total;
    merged.turnover_selected_total = turnover_side.turnover_selected_total;
    for (int level = core::kMinLevel; level <= core::kMaxLevel; ++level) {
        const AggregateRow* capex_row = capex_side.find(level);
        const AggregateRow* turnover_row = turnover_side.find(level);
        const bool has_capex = capex_row != nullptr && capex_row->capex.musd.has_value();
        const bool has_turnover =
            turnover_row != nullptr && turnover_row->turnover.musd.has_value();
        if (!has_capex && !has_turnover) {
            continue;
        }
        AggregateRow row;
        row.level = level;
        if (has_capex) {
            row.capex = capex_row->capex;
        }
        if (has_turnover) {
            row.turnover = turnover_row->turnover;
        }
        merged.rows.push_back(row);
    }
    return merged;
}

double concentration_summary(const GroupedAggregate& aggregate, const std::set<int>& levels,
                             Metric metric) {
    double total = 0.0;
    for (int level : levels) {
        const AggregateRow* row = aggregate.find(level);
        if (row == nullptr) {
            continue;
        }
        const MetricCells& cells = metric == Metric::capex ? row->capex : row->turnover;
        if (cells.share_selected) {
            total += *cells.share_selected;
        }
    }
    return total;
}

}  // namespace crosswash::aggregation
