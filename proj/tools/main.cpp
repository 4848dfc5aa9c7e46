#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "crosswash/aggregation.hpp"
#include "crosswash/core.hpp"
#include "crosswash/csv.hpp"
#include "crosswash/dataset.hpp"
#include "crosswash/errors.hpp"
#include "crosswash/format.hpp"
#include "crosswash/report.hpp"
#include "crosswash/reproduce.hpp"
#include "crosswash/sensitivity.hpp"

#ifndef CROSSWASH_DEFAULT_DATA_DIR
#define CROSSWASH_DEFAULT_DATA_DIR ""
#endif
#ifndef CROSSWASH_DEFAULT_GOLDEN_DIR
#define CROSSWASH_DEFAULT_GOLDEN_DIR ""
#endif

namespace {

using namespace crosswash;

std::string default_data_dir() {
    if (const char* env = std::getenv("CROSSWASH_DATA_DIR")) {
        return env;
    }
    return CROSSWASH_DEFAULT_DATA_DIR;
}

struct CommonOptions {
    std::string data_dir = default_data_dir();
    std::string format_name = "markdown";
    bool paper_compat = false;
    bool renormalize_weights = false;
    std::string output_path;

    report::Options report_options() const {
        return {report::parse_format(format_name), paper_compat};
    }
};

void add_common(CLI::App* cmd, CommonOptions& common) {
    cmd->add_option("--data-dir", common.data_dir,
                    "Data directory with capex.csv, turnover.csv, attributes.csv, context.csv "
                    "(env CROSSWASH_DATA_DIR overrides the built-in default)");
    cmd->add_option("--format", common.format_name, "Report format: markdown, csv or jsonl")
        ->default_str("markdown");
    cmd->add_flag("--paper-compat", common.paper_compat,
                  "Mirror the published table layout (mixed fraction/percent share columns)");
    cmd->add_flag("--renormalize-weights", common.renormalize_weights,
                  "Divide the weights by their sum before scoring");
    cmd->add_option("--output", common.output_path, "Write the report to a file instead of stdout");
}

struct SelectionOptions {
    std::string criteria_list = "capex,turnover,link,contribution";
    std::string weights_list;
    std::string weights_file;
    std::string join_name = "inner";
};

void add_selection(CLI::App* cmd, SelectionOptions& selection) {
    cmd->add_option("--criteria", selection.criteria_list,
                    "Comma-separated criteria (capex, turnover, link, contribution)")
        ->default_str("capex,turnover,link,contribution");
    cmd->add_option("--weights", selection.weights_list,
                    "Comma-separated weights matching --criteria order");
    cmd->add_option("--weights-file", selection.weights_file,
                    "Weights CSV with header criterion,weight,direction");
    cmd->add_option("--join", selection.join_name,
                    "Activity set: inner, capex-only or turnover-only")
        ->default_str("inner");
}

std::vector<std::string> split_list(const std::string& text) {
    std::vector<std::string> parts;
    std::istringstream stream(text);
    std::string part;
    while (std::getline(stream, part, ',')) {
        parts.push_back(part);
    }
    return parts;
}

dataset::JoinMode parse_join(const std::string& name) {
    if (name == "inner") {
        return dataset::JoinMode::inner;
    }
    if (name == "capex-only" || name == "capex_only") {
        return dataset::JoinMode::capex_only;
    }
    if (name == "turnover-only" || name == "turnover_only") {
        return dataset::JoinMode::turnover_only;
    }
    throw ValidationError("unknown join mode '" + name + "'");
}

double default_weight(const std::string& canonical_id) {
    if (canonical_id == core::criteria::kCapEx || canonical_id == core::criteria::kLink) {
        return 0.3;
    }
    if (canonical_id == core::criteria::kTurnover ||
        canonical_id == core::criteria::kContribution) {
        return 0.2;
    }
    throw ValidationError("no default weight for criterion '" + canonical_id +
                          "'; pass --weights or --weights-file");
}

struct Selection {
    std::vector<core::Criterion> criteria;
    core::WeightVector weights;
    dataset::JoinMode join = dataset::JoinMode::inner;
};

core::Direction parse_direction(const std::string& name, const std::string& origin,
                                std::size_t line) {
    if (name.empty() || name == "benefit") {
        return core::Direction::benefit;
    }
    if (name == "cost") {
        return core::Direction::cost;
    }
    throw ParseError(origin, line, 3, "direction must be 'benefit' or 'cost', got '" + name + "'");
}

Selection resolve_selection(const SelectionOptions& options, bool renormalize) {
    Selection selection;
    selection.join = parse_join(options.join_name);

    const std::vector<std::string> ids = split_list(options.criteria_list);
    if (ids.empty()) {
        throw ValidationError("criteria selection must be non-empty");
    }
    if (!options.weights_list.empty() && !options.weights_file.empty()) {
        throw ValidationError("pass either --weights or --weights-file, not both");
    }

    std::vector<core::WeightVector::Entry> entries;
    if (!options.weights_file.empty()) {
        // criterion,weight,direction; direction may be empty (= benefit).
        const csv::Table table = csv::read_file(options.weights_file);
        if (table.header != csv::Row{"criterion", "weight", "direction"}) {
            throw ParseError(options.weights_file, 1, 1,
                             "header must be exactly 'criterion,weight,direction'");
        }
        std::map<std::string, std::pair<double, core::Direction>> file_weights;
        for (std::size_t i = 0; i < table.rows.size(); ++i) {
            const csv::Row& row = table.rows[i];
            const std::string id = core::canonical_criterion_id(row[0]);
            const double weight = csv::parse_double(row[1], options.weights_file, i + 2, 2);
            const core::Direction direction = parse_direction(row[2], options.weights_file, i + 2);
            if (!file_weights.emplace(id, std::pair{weight, direction}).second) {
                throw ValidationError("duplicate criterion '" + id + "' in weights file");
            }
        }
        for (const std::string& raw_id : ids) {
            const std::string id = core::canonical_criterion_id(raw_id);
            const auto it = file_weights.find(id);
            if (it == file_weights.end()) {
                throw ValidationError("weights file has no entry for criterion '" + id + "'");
            }
            selection.criteria.push_back({id, it->second.second});
            entries.emplace_back(id, it->second.first);
        }
    } else if (!options.weights_list.empty()) {
        const std::vector<std::string> raw = split_list(options.weights_list);
        if (raw.size() != ids.size()) {
            throw ValidationError("--weights has " + std::to_string(raw.size()) +
                                  " values for " + std::to_string(ids.size()) + " criteria");
        }
        for (std::size_t i = 0; i < ids.size(); ++i) {
            const std::string id = core::canonical_criterion_id(ids[i]);
            selection.criteria.push_back({id, core::Direction::benefit});
            entries.emplace_back(id, csv::parse_double(raw[i], "--weights", 1, i + 1));
        }
    } else {
        for (const std::string& raw_id : ids) {
            const std::string id = core::canonical_criterion_id(raw_id);
            selection.criteria.push_back({id, core::Direction::benefit});
            entries.emplace_back(id, default_weight(id));
        }
    }
    selection.weights = core::WeightVector(std::move(entries));
    if (renormalize) {
        selection.weights = selection.weights.renormalized();
    }
    return selection;
}

std::vector<core::Activity> load_activities(const CommonOptions& common,
                                            const Selection& selection, dataset::Bundle* out) {
    dataset::Bundle bundle = dataset::load_bundle(common.data_dir);
    std::vector<core::Activity> activities = dataset::assemble_activities(
        bundle.capex, bundle.turnover, bundle.attributes, selection.join);
    if (out != nullptr) {
        *out = std::move(bundle);
    }
    return activities;
}

void emit(const CommonOptions& common, const std::string& text) {
    if (common.output_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(common.output_path, std::ios::binary);
    if (!out) {
        throw Error("cannot write '" + common.output_path + "'");
    }
    out << text;
}

int cmd_score(const CommonOptions& common, const SelectionOptions& selection_options,
              std::optional<double> base_env_score) {
    const Selection selection = resolve_selection(selection_options, common.renormalize_weights);
    const std::vector<core::Activity> activities = load_activities(common, selection, nullptr);
    const core::ScoreTable table =
        core::score_run(activities, selection.criteria, selection.weights);
    std::optional<double> adjusted;
    if (base_env_score) {
        adjusted = core::apply_deterioration(*base_env_score, table.deterioration_percent);
    }
    emit(common, report::render_scores(table, report::name_map(activities),
                                       common.report_options(), adjusted));
    return 0;
}

int cmd_aggregate(const CommonOptions& common, const std::string& by_name,
                  const std::string& scope_name) {
    aggregation::LevelVariable which;
    if (by_name == "link") {
        which = aggregation::LevelVariable::link;
    } else if (by_name == "contribution") {
        which = aggregation::LevelVariable::contribution;
    } else {
        throw ValidationError("--by must be 'link' or 'contribution', got '" + by_name + "'");
    }

    const dataset::Bundle bundle = dataset::load_bundle(common.data_dir);
    aggregation::GroupedAggregate aggregate;
    if (scope_name == "full") {
        const auto capex_set = dataset::assemble_activities(
            bundle.capex, bundle.turnover, bundle.attributes, dataset::JoinMode::capex_only);
        const auto turnover_set = dataset::assemble_activities(
            bundle.capex, bundle.turnover, bundle.attributes, dataset::JoinMode::turnover_only);
        aggregate = aggregation::merge_metrics(
            aggregation::group_by_level(capex_set, which, bundle.require_context()),
            aggregation::group_by_level(turnover_set, which, bundle.require_context()));
    } else if (scope_name == "merged") {
        const auto merged = dataset::assemble_activities(bundle.capex, bundle.turnover,
                                                         bundle.attributes,
                                                         dataset::JoinMode::inner);
        aggregate = aggregation::group_merged(merged, which, bundle.require_context());
    } else {
        throw ValidationError("--scope must be 'full' or 'merged', got '" + scope_name + "'");
    }
    emit(common, report::render_aggregate(aggregate, common.report_options()));
    return 0;
}

int cmd_sweep(const CommonOptions& common, const SelectionOptions& selection_options, double step,
              int radius) {
    const Selection selection = resolve_selection(selection_options, common.renormalize_weights);
    const std::vector<core::Activity> activities = load_activities(common, selection, nullptr);
    const sensitivity::SweepResult sweep = sensitivity::sweep_weights(
        activities, selection.criteria, selection.weights, {step, radius});
    const std::vector<sensitivity::StabilityRow> stability = sensitivity::rank_stability(sweep);
    emit(common, report::render_sweep(sweep, stability, common.report_options()));
    return 0;
}

int cmd_reproduce(const CommonOptions& common, const std::string& golden_dir) {
    const reproduce::Result result = reproduce::run(common.data_dir, golden_dir);
    std::string out;
    for (const reproduce::Check& check : result.checks) {
        out += check.name + ": " + (check.ok ? "OK" : "MISMATCH (" + check.detail + ")") + "\n";
    }
    if (result.all_ok()) {
        out += "all tables matched\n";
        emit(common, out);
        return 0;
    }
    const reproduce::Check* first = result.first_mismatch();
    out += "first mismatch: " + first->name + " (" + first->detail + ")\n";
    emit(common, out);
    return 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"crosswash — quantify ESG score inflation from weakly linked sustainable "
                 "activities"};
    app.require_subcommand(1);

    CommonOptions score_common;
    SelectionOptions score_selection;
    std::optional<double> base_env_score;
    CLI::App* score = app.add_subcommand(
        "score", "Score activities with the weighted-sum model and report the deterioration");
    add_common(score, score_common);
    add_selection(score, score_selection);
    double base_env_value = 0.0;
    CLI::Option* base_opt =
        score->add_option("--base-env-score", base_env_value,
                          "Environmental score in [0,100] to adjust by the run's deterioration");

    CommonOptions aggregate_common;
    std::string by_name;
    std::string scope_name = "full";
    CLI::App* aggregate =
        app.add_subcommand("aggregate", "Group CapEx/Turnover by Link or Contribution level");
    add_common(aggregate, aggregate_common);
    aggregate->add_option("--by", by_name, "Level variable: link or contribution")->required();
    aggregate->add_option("--scope", scope_name, "full (each source table) or merged (inner join)")
        ->default_str("full");

    CommonOptions sweep_common;
    SelectionOptions sweep_selection;
    double step = 0.0;
    int radius = 1;
    CLI::App* sweep =
        app.add_subcommand("sweep", "Perturb weights around the baseline and report rank stability");
    add_common(sweep, sweep_common);
    add_selection(sweep, sweep_selection);
    sweep->add_option("--step", step, "Perturbation step in weight units")->required();
    sweep->add_option("--radius", radius, "Number of steps in each direction")->default_str("1");

    CommonOptions reproduce_common;
    std::string golden_dir = CROSSWASH_DEFAULT_GOLDEN_DIR;
    CLI::App* reproduce_cmd = app.add_subcommand(
        "reproduce-paper", "Regenerate the published tables and diff against the golden snapshot");
    add_common(reproduce_cmd, reproduce_common);
    reproduce_cmd->add_option("--golden-dir", golden_dir, "Directory with the golden tables");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (score->parsed()) {
            if (base_opt->count() > 0) {
                base_env_score = base_env_value;
            }
            return cmd_score(score_common, score_selection, base_env_score);
        }
        if (aggregate->parsed()) {
            return cmd_aggregate(aggregate_common, by_name, scope_name);
        }
        if (sweep->parsed()) {
            return cmd_sweep(sweep_common, sweep_selection, step, radius);
        }
        if (reproduce_cmd->parsed()) {
            return cmd_reproduce(reproduce_common, golden_dir);
        }
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
