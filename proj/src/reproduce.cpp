#include "crosswash/reproduce.hpp"

#include <cmath>
#include <cstdlib>
#include <optional>

#include "crosswash/csv.hpp"
#include "crosswash/errors.hpp"
#include "crosswash/format.hpp"

namespace crosswash::reproduce {
namespace {

using aggregation::GroupedAggregate;
using aggregation::LevelVariable;
using core::ScoreTable;

constexpr double kScoreTolerance = 0.01 + 1e-9;
constexpr double kShareTolerance = 0.0005 + 1e-12;

core::WeightVector paper_weights(bool with_financials) {
    if (with_financials) {
        return core::WeightVector{{"CapEx", 0.3}, {"Turnover", 0.2}, {"Link", 0.3},
                                  {"Contribution", 0.2}};
    }
    return core::WeightVector{{"Link", 0.3}, {"Contribution", 0.2}};
}

std::vector<core::Criterion> paper_criteria(bool with_financials) {
    if (with_financials) {
        return {{"CapEx", {}}, {"Turnover", {}}, {"Link", {}}, {"Contribution", {}}};
    }
    return {{"Link", {}}, {"Contribution", {}}};
}

csv::Table scores_to_golden(const ScoreTable& table,
                            const std::map<std::string, std::string>& names) {
    csv::Table out;
    out.header = {"code", "name", "weighted_sum", "normalized_pct"};
    for (const core::ScoreRow& row : table.rows) {
        const auto it = names.find(row.code);
        out.rows.push_back({row.code, it == names.end() ? "" : it->second,
                            format::fixed(row.weighted_sum, 2),
                            format::fixed(row.normalized_percent, 2)});
    }
    out.rows.push_back({"AVERAGE", "", "", format::fixed(table.average_percent, 2)});
    out.rows.push_back({"DETERIORATION", "", "", format::fixed(table.deterioration_percent, 2)});
    return out;
}

std::string opt_cell(const std::optional<double>& value, int decimals) {
    return value ? format::fixed(*value, decimals) : std::string();
}

csv::Table aggregate_to_golden(const GroupedAggregate& aggregate) {
    csv::Table out;
    out.header = {"level",         "capex_musd",    "capex_share_company",
                  "capex_share_selected_pct", "turnover_musd", "turnover_share_company",
                  "turnover_share_selected_pct"};
    for (const aggregation::AggregateRow& row : aggregate.rows) {
        out.rows.push_back({std::to_string(row.level), opt_cell(row.capex.musd, 0),
                            opt_cell(row.capex.share_company, 6),
                            opt_cell(row.capex.share_selected, 6), opt_cell(row.turnover.musd, 0),
                            opt_cell(row.turnover.share_company, 6),
                            opt_cell(row.turnover.share_selected, 6)});
    }
    return out;
}

csv::Table context_to_golden(const dataset::CompanyContext& context) {
    csv::Table out;
    out.header = {"company",
                  "period",
                  "eligible_capex_musd",
                  "eligible_capex_share",
                  "eligible_turnover_musd",
                  "eligible_turnover_share",
                  "aligned_capex_musd",
                  "aligned_turnover_musd"};
    out.rows.push_back({context.company, std::to_string(context.period),
                        format::shortest(context.eligible_capex_musd),
                        format::shortest(context.eligible_capex_share),
                        format::shortest(context.eligible_turnover_musd),
                        format::shortest(context.eligible_turnover_share),
                        format::shortest(context.aligned_capex_musd),
                        format::shortest(context.aligned_turnover_musd)});
    return out;
}

std::optional<double> parse_cell(const std::string& cell) {
    if (cell.empty()) {
        return std::nullopt;
    }
    return std::strtod(cell.c_str(), nullptr);
}

enum class Rule { exact_musd, exact_value, score, share, text };

// Compares two same-schema tables cell by cell; returns the first difference.
std::optional<std::string> diff_tables(const csv::Table& golden, const csv::Table& regenerated,
                                       const std::vector<Rule>& rules) {
    if (golden.rows.size() != regenerated.rows.size()) {
        return "golden has " + std::to_string(golden.rows.size()) + " rows, regenerated has " +
               std::to_string(regenerated.rows.size());
    }
    for (std::size_t i = 0; i < golden.rows.size(); ++i) {
        const csv::Row& g = golden.rows[i];
        const csv::Row& r = regenerated.rows[i];
        const std::string key = g.empty() ? "" : g[0];
        for (std::size_t c = 0; c < rules.size(); ++c) {
            const std::string& gc = g[c];
            const std::string& rc = r[c];
            if (rules[c] == Rule::text) {
                if (gc != rc) {
                    return "row '" + key + "' " + golden.header[c] + ": golden '" + gc +
                           "', regenerated '" + rc + "'";
                }
                continue;
            }
            const std::optional<double> gv = parse_cell(gc);
            const std::optional<double> rv = parse_cell(rc);
            if (gv.has_value() != rv.has_value()) {
                return "row '" + key + "' " + golden.header[c] + ": golden '" + gc +
                       "', regenerated '" + rc + "'";
            }
            if (!gv) {
                continue;
            }
            bool ok = true;
            switch (rules[c]) {
                case Rule::exact_musd:
                    ok = std::llround(*gv) == std::llround(*rv) && std::abs(*gv - *rv) < 0.5;
                    break;
                case Rule::exact_value:
                    ok = *gv == *rv;
                    break;
                case Rule::score:
                    ok = std::abs(*gv - *rv) <= kScoreTolerance;
                    break;
                case Rule::share:
                    ok = std::abs(*gv - *rv) <= kShareTolerance;
                    break;
                case Rule::text:
                    break;
            }
            if (!ok) {
                return "row '" + key + "' " + golden.header[c] + ": golden " + gc +
                       ", regenerated " + rc;
            }
        }
    }
    return std::nullopt;
}

csv::Table load_golden(const std::filesystem::path& golden_dir, const std::string& name,
                       const csv::Row& expected_header) {
    const std::filesystem::path path = golden_dir / (name + ".csv");
    if (!std::filesystem::exists(path)) {
        throw Error("golden file '" + path.string() + "' not found");
    }
    csv::Table table = csv::read_file(path);
    if (table.header != expected_header) {
        throw Error("golden file '" + path.string() + "' has an unexpected header");
    }
    return table;
}

Check check_table(const std::string& name, const csv::Table& regenerated,
                  const std::filesystem::path& golden_dir, const std::vector<Rule>& rules) {
    Check check;
    check.name = name;
    const csv::Table golden = load_golden(golden_dir, name, regenerated.header);
    if (auto diff = diff_tables(golden, regenerated, rules)) {
        check.ok = false;
        check.detail = *diff;
    }
    return check;
}

const std::vector<Rule> kScoreRules = {Rule::text, Rule::text, Rule::score, Rule::score};
const std::vector<Rule> kAggregateRules = {Rule::text,  Rule::exact_musd, Rule::share,
                                           Rule::share, Rule::exact_musd, Rule::share,
                                           Rule::share};
// The context figures are transcribed constants; any drift is a mismatch.
const std::vector<Rule> kContextRules = {Rule::text,        Rule::text,        Rule::exact_value,
                                         Rule::exact_value, Rule::exact_value, Rule::exact_value,
                                         Rule::exact_value, Rule::exact_value};

}  // namespace

PaperTables regenerate(const dataset::Bundle& bundle) {
    const std::vector<core::Activity> merged = dataset::assemble_activities(
        bundle.capex, bundle.turnover, bundle.attributes, dataset::JoinMode::inner);
    const std::vector<core::Activity> capex_set = dataset::assemble_activities(
        bundle.capex, bundle.turnover, bundle.attributes, dataset::JoinMode::capex_only);
    const std::vector<core::Activity> turnover_set = dataset::assemble_activities(
        bundle.capex, bundle.turnover, bundle.attributes, dataset::JoinMode::turnover_only);

    PaperTables tables;
    tables.table7 = core::score_run(merged, paper_criteria(true), paper_weights(true));
    tables.table8 = core::score_run(merged, paper_criteria(false), paper_weights(false));
    for (LevelVariable which : {LevelVariable::link, LevelVariable::contribution}) {
        const GroupedAggregate capex_agg =
            aggregation::group_by_level(capex_set, which, bundle.require_context());
        const GroupedAggregate turnover_agg =
            aggregation::group_by_level(turnover_set, which, bundle.require_context());
        const GroupedAggregate full = aggregation::merge_metrics(capex_agg, turnover_agg);
        const GroupedAggregate merged_agg =
            aggregation::group_merged(merged, which, bundle.require_context());
        if (which == LevelVariable::link) {
            tables.table2 = full;
            tables.table4 = merged_agg;
        } else {
            tables.table3 = full;
            tables.table5 = merged_agg;
        }
    }
    for (const core::Activity& activity : capex_set) {
        tables.names.emplace(activity.code, activity.name);
    }
    for (const core::Activity& activity : turnover_set) {
        tables.names.emplace(activity.code, activity.name);
    }
    return tables;
}

void write_goldens(const dataset::Bundle& bundle, const std::filesystem::path& out_dir) {
    const PaperTables tables = regenerate(bundle);
    std::filesystem::create_directories(out_dir);
    csv::write_file(out_dir / "table7.csv", scores_to_golden(tables.table7, tables.names));
    csv::write_file(out_dir / "table8.csv", scores_to_golden(tables.table8, tables.names));
    csv::write_file(out_dir / "table2.csv", aggregate_to_golden(tables.table2));
    csv::write_file(out_dir / "table3.csv", aggregate_to_golden(tables.table3));
    csv::write_file(out_dir / "table4.csv", aggregate_to_golden(tables.table4));
    csv::write_file(out_dir / "table5.csv", aggregate_to_golden(tables.table5));
    csv::write_file(out_dir / "context.csv", context_to_golden(bundle.require_context()));
}

bool Result::all_ok() const noexcept {
    for (const Check& check : checks) {
        if (!check.ok) {
            return false;
        }
    }
    return true;
}

const Check* Result::first_mismatch() const noexcept {
    for (const Check& check : checks) {
        if (!check.ok) {
            return &check;
        }
    }
    return nullptr;
}

Result run(const std::filesystem::path& data_dir, const std::filesystem::path& golden_dir) {
    const dataset::Bundle bundle = dataset::load_bundle(data_dir);
    const PaperTables tables = regenerate(bundle);

    Result result;
    result.checks.push_back(check_table("table7", scores_to_golden(tables.table7, tables.names),
                                        golden_dir, kScoreRules));
    result.checks.push_back(check_table("table8", scores_to_golden(tables.table8, tables.names),
                                        golden_dir, kScoreRules));
    result.checks.push_back(
        check_table("table2", aggregate_to_golden(tables.table2), golden_dir, kAggregateRules));
    result.checks.push_back(
        check_table("table3", aggregate_to_golden(tables.table3), golden_dir, kAggregateRules));
    result.checks.push_back(
        check_table("table4", aggregate_to_golden(tables.table4), golden_dir, kAggregateRules));
    result.checks.push_back(
        check_table("table5", aggregate_to_golden(tables.table5), golden_dir, kAggregateRules));
    result.checks.push_back(
        check_table("context", context_to_golden(bundle.require_context()), golden_dir, kContextRules));
    return result;
}

}  // namespace crosswash::reproduce
