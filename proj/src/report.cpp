#include "crosswash/report.hpp"


#include <json.hpp>

#include "crosswash/errors.hpp"
#include "crosswash/format.hpp"

namespace crosswash::report {
namespace {

using nlohmann::json;

std::string markdown_row(const std::vector<std::string>& cells) {
    std::string out = "|";
    for (const std::string& cell : cells) {
        out += " " + cell + " |";
    }
    out += "\n";
    return out;
}

std::string markdown_rule(std::size_t columns) {
    std::string out = "|";
    for (std::size_t i = 0; i < columns; ++i) {
        out += " --- |";
    }
    out += "\n";
    return out;
}

std::string csv_line(const std::vector<std::string>& cells) {
    std::string out;
    for (std::size_t i = 0; i < cells.size(); ++i) {
        if (i > 0) {
            out += ",";
        }
        // Report cells are codes, names, and plain numbers; quote the names.
        const bool needs_quotes = cells[i].find_first_of(",\"\n") != std::string::npos;
        if (needs_quotes) {
            std::string quoted = "\"";
            for (char c : cells[i]) {
                if (c == '"') {
                    quoted += '"';
                }
                quoted += c;
            }
            quoted += '"';
            out += quoted;
        } else {
            out += cells[i];
        }
    }
    out += "\n";
    return out;
}

std::string opt_fixed(const std::optional<double>& value, int decimals) {
    return value ? format::fixed(*value, decimals) : std::string();
}

std::string opt_full(const std::optional<double>& value) {
    return value ? format::shortest(*value) : std::string();
}

json opt_json(const std::optional<double>& value) {
    return value ? json(*value) : json(nullptr);
}

std::string lookup_name(const NameMap& names, const std::string& code) {
    const auto it = names.find(code);
    return it == names.end() ? std::string() : it->second;
}

std::string weights_cell(const core::WeightVector& weights, bool display) {
    std::string out;
    for (const auto& [id, value] : weights.entries()) {
        if (!out.empty()) {
            out += " ";
        }
        out += id + "=" + (display ? format::fixed(value, 4) : format::shortest(value));
    }
    return out;
}

std::string ranking_cell(const std::vector<std::string>& ranking) {
    std::string out;
    for (const std::string& code : ranking) {
        if (!out.empty()) {
            out += " > ";
        }
        out += code;
    }
    return out;
}

}  // namespace

Format parse_format(std::string_view name) {
    if (name == "markdown" || name == "md") {
        return Format::markdown;
    }
    if (name == "csv") {
        return Format::csv;
    }
    if (name == "jsonl" || name == "json-lines") {
        return Format::jsonl;
    }
    throw ValidationError("unknown format '" + std::string(name) +
                          "' (expected markdown, csv or jsonl)");
}

NameMap name_map(std::span<const core::Activity> activities) {
    NameMap names;
    for (const core::Activity& activity : activities) {
        names.emplace(activity.code, activity.name);
    }
    return names;
}

std::string render_scores(const core::ScoreTable& table, const NameMap& names,
                          const Options& options, std::optional<double> adjusted_env_score) {
    std::string out;
    switch (options.format) {
        case Format::markdown: {
            out += markdown_row({"Activity", "Code", "Weighted Sum", "Normalised Weighted Sum (%)"});
            out += markdown_rule(4);
            for (const core::ScoreRow& row : table.rows) {
                out += markdown_row({lookup_name(names, row.code), row.code,
                                     format::fixed(row.weighted_sum, 2),
                                     format::fixed(row.normalized_percent, 2)});
            }
            out += "\n";
            out += "Average Normalised Weighted Sum (%): " +
                   format::fixed(table.average_percent, 2) + "\n";
            out += "Deterioration (%): " + format::fixed(table.deterioration_percent, 2) + "\n";
            if (adjusted_env_score) {
                out += "Adjusted environmental score: " + format::fixed(*adjusted_env_score, 2) +
                       "\n";
            }
            break;
        }
        case Format::csv: {
            out += csv_line({"code", "name", "weighted_sum", "normalized_pct"});
            for (const core::ScoreRow& row : table.rows) {
                out += csv_line({row.code, lookup_name(names, row.code),
                                 format::shortest(row.weighted_sum),
                                 format::shortest(row.normalized_percent)});
            }
            out += csv_line({"AVERAGE", "", "", format::shortest(table.average_percent)});
            out += csv_line({"DETERIORATION", "", "", format::shortest(table.deterioration_percent)});
            if (adjusted_env_score) {
                out += csv_line({"ADJUSTED_ENV_SCORE", "", "", format::shortest(*adjusted_env_score)});
            }
            break;
        }
        case Format::jsonl: {
            for (const core::ScoreRow& row : table.rows) {
                json line;
                line["code"] = row.code;
                line["name"] = lookup_name(names, row.code);
                line["weighted_sum"] = row.weighted_sum;
                line["normalized_pct"] = row.normalized_percent;
                out += line.dump() + "\n";
            }
            json summary;
            summary["average_pct"] = table.average_percent;
            summary["deterioration_pct"] = table.deterioration_percent;
            if (adjusted_env_score) {
                summary["adjusted_env_score"] = *adjusted_env_score;
            }
            out += summary.dump() + "\n";
            break;
        }
    }
    return out;
}

std::string render_aggregate(const aggregation::GroupedAggregate& aggregate,
                             const Options& options) {
    const std::string level_name =
        aggregate.group_by == aggregation::LevelVariable::link ? "Link" : "Contribution";
    std::string out;
    switch (options.format) {
        case Format::markdown: {
            if (options.paper_compat) {
                // Published layout: share-of-company as a fraction ("Perc"),
                // share-of-selected as a percentage ("Perc2"); the merged
                // tables put both Perc2 columns last.
                const bool merged = aggregate.scope == aggregation::Scope::merged;
                if (merged) {
                    out += markdown_row({level_name, "CapEx M$", "CapEx Perc", "Turnover M$",
                                         "Turnover Perc", "CapEx Perc2", "Turnover Perc2"});
                } else {
                    out += markdown_row({level_name, "CapEx M$", "CapEx Perc", "CapEx Perc2",
                                         "Turnover M$", "Turnover Perc", "Turnover Perc2"});
                }
                out += markdown_rule(7);
                for (const aggregation::AggregateRow& row : aggregate.rows) {
                    const std::string level = std::to_string(row.level);
                    const std::string c_musd = opt_fixed(row.capex.musd, 0);
                    const std::string c_frac = opt_fixed(row.capex.share_company, 6);
                    const std::string c_pct = opt_fixed(row.capex.share_selected, 6);
                    const std::string t_musd = opt_fixed(row.turnover.musd, 0);
                    const std::string t_frac = opt_fixed(row.turnover.share_company, 6);
                    const std::string t_pct = opt_fixed(row.turnover.share_selected, 6);
                    if (merged) {
                        out += markdown_row({level, c_musd, c_frac, t_musd, t_frac, c_pct, t_pct});
                    } else {
                        out += markdown_row({level, c_musd, c_frac, c_pct, t_musd, t_frac, t_pct});
                    }
                }
            } else {
                out += markdown_row({level_name, "CapEx (M$)", "CapEx share of company",
                                     "CapEx share of selected (%)", "Turnover (M$)",
                                     "Turnover share of company", "Turnover share of selected (%)"});
                out += markdown_rule(7);
                for (const aggregation::AggregateRow& row : aggregate.rows) {
                    out += markdown_row({std::to_string(row.level), opt_fixed(row.capex.musd, 0),
                                         opt_fixed(row.capex.share_company, 6),
                                         opt_fixed(row.capex.share_selected, 6),
                                         opt_fixed(row.turnover.musd, 0),
                                         opt_fixed(row.turnover.share_company, 6),
                                         opt_fixed(row.turnover.share_selected, 6)});
                }
            }
            break;
        }
        case Format::csv: {
            out += csv_line({"level", "capex_musd", "capex_share_company",
                             "capex_share_selected_pct", "turnover_musd",
                             "turnover_share_company", "turnover_share_selected_pct"});
            for (const aggregation::AggregateRow& row : aggregate.rows) {
                out += csv_line({std::to_string(row.level), opt_full(row.capex.musd),
                                 opt_full(row.capex.share_company),
                                 opt_full(row.capex.share_selected), opt_full(row.turnover.musd),
                                 opt_full(row.turnover.share_company),
                                 opt_full(row.turnover.share_selected)});
            }
            break;
        }
        case Format::jsonl: {
            for (const aggregation::AggregateRow& row : aggregate.rows) {
                json line;
                line["level"] = row.level;
                line["capex_musd"] = opt_json(row.capex.musd);
                line["capex_share_company"] = opt_json(row.capex.share_company);
                line["capex_share_selected_pct"] = opt_json(row.capex.share_selected);
                line["turnover_musd"] = opt_json(row.turnover.musd);
                line["turnover_share_company"] = opt_json(row.turnover.share_company);
                line["turnover_share_selected_pct"] = opt_json(row.turnover.share_selected);
                out += line.dump() + "\n";
            }
            break;
        }
    }
    return out;
}

std::string render_sweep(const sensitivity::SweepResult& sweep,
                         const std::vector<sensitivity::StabilityRow>& stability,
                         const Options& options) {
    std::string out;
    switch (options.format) {
        case Format::markdown: {
            out += markdown_row({"Point", "Weights", "Average (%)", "Deterioration (%)", "Ranking"});
            out += markdown_rule(5);
            for (std::size_t i = 0; i < sweep.grid.size(); ++i) {
                const sensitivity::SweepPoint& point = sweep.grid[i];
                out += markdown_row({std::to_string(i), weights_cell(point.weights, true),
                                     format::fixed(point.average_percent, 2),
                                     format::fixed(point.deterioration_percent, 2),
                                     ranking_cell(point.ranking)});
            }
            out += "\n";
            out += markdown_row({"Code", "Stable Rank Fraction"});
            out += markdown_rule(2);
            for (const sensitivity::StabilityRow& row : stability) {
                out += markdown_row({row.code, format::fixed(row.fraction, 4)});
            }
            break;
        }
        case Format::csv: {
            out += csv_line({"point", "weights", "average_pct", "deterioration_pct", "ranking"});
            for (std::size_t i = 0; i < sweep.grid.size(); ++i) {
                const sensitivity::SweepPoint& point = sweep.grid[i];
                out += csv_line({std::to_string(i), weights_cell(point.weights, false),
                                 format::shortest(point.average_percent),
                                 format::shortest(point.deterioration_percent),
                                 ranking_cell(point.ranking)});
            }
            out += "\n";
            out += csv_line({"code", "stable_rank_fraction"});
            for (const sensitivity::StabilityRow& row : stability) {
                out += csv_line({row.code, format::shortest(row.fraction)});
            }
            break;
        }
        case Format::jsonl: {
            for (std::size_t i = 0; i < sweep.grid.size(); ++i) {
                const sensitivity::SweepPoint& point = sweep.grid[i];
                json line;
                line["point"] = i;
                json weights = json::object();
                for (const auto& [id, value] : point.weights.entries()) {
                    weights[id] = value;
                }
                line["weights"] = weights;
                line["average_pct"] = point.average_percent;
                line["deterioration_pct"] = point.deterioration_percent;
                line["ranking"] = point.ranking;
                out += line.dump() + "\n";
            }
            for (const sensitivity::StabilityRow& row : stability) {
                json line;
                line["code"] = row.code;
                line["stable_rank_fraction"] = row.fraction;
                out += line.dump() + "\n";
            }
            break;
        }
    }
    return out;
}

}  // namespace crosswash::report
