#include "crosswash/dataset.hpp"

#include <cmath>
#include <set>
#include <utility>

#include "crosswash/csv.hpp"
#include "crosswash/errors.hpp"
#include "crosswash/format.hpp"
#include "crosswash/log.hpp"

namespace crosswash::dataset {
namespace {

const csv::Row kSourceHeader = {"code", "name", "amount_musd", "share_of_company"};
const csv::Row kAttributeHeader = {"code",          "name",
                                   "link",          "contribution",
                                   "link_rationale", "contribution_rationale"};
const csv::Row kContextHeader = {"company",
                                 "period",
                                 "eligible_capex_musd",
                                 "eligible_capex_share",
                                 "eligible_turnover_musd",
                                 "eligible_turnover_share",
                                 "aligned_capex_musd",
                                 "aligned_turnover_musd"};

void require_header(const csv::Table& table, const csv::Row& expected, const std::string& origin) {
    if (table.header != expected) {
        std::string want;
        for (std::size_t i = 0; i < expected.size(); ++i) {
            if (i > 0) {
                want += ',';
            }
            want += expected[i];
        }
        throw ParseError(origin, 1, 1, "header must be exactly '" + want + "'");
    }
}

// Data row i sits on file line i+2 (header on line 1); good enough for
// messages as long as the file has no blank lines.
std::size_t line_of(std::size_t row_index) {
    return row_index + 2;
}

int parse_level(const std::string& field, const char* what, const std::string& origin,
                std::size_t line, std::size_t column) {
    const long long value = csv::parse_int(field, origin, line, column);
    if (value < core::kMinLevel || value > core::kMaxLevel) {
        throw OutOfRangeLevel(what, value);
    }
    return static_cast<int>(value);
}

}  // namespace

std::string_view to_string(SourceKind kind) {
    return kind == SourceKind::capex ? "capex" : "turnover";
}

double SourceTable::total_amount() const noexcept {
    double sum = 0.0;
    for (const SourceRow& row : rows) {
        sum += row.amount_musd;
    }
    return sum;
}

const SourceRow* SourceTable::find(std::string_view code) const noexcept {
    for (const SourceRow& row : rows) {
        if (row.code == code) {
            return &row;
        }
    }
    return nullptr;
}

const AttributeRow* AttributeTable::find(std::string_view code) const noexcept {
    for (const AttributeRow& row : rows) {
        if (row.code == code) {
            return &row;
        }
    }
    return nullptr;
}

SourceTable load_source_table(const std::filesystem::path& path, SourceKind kind) {
    const std::string origin = path.string();
    const csv::Table raw = csv::read_file(path);
    require_header(raw, kSourceHeader, origin);

    SourceTable table;
    table.kind = kind;
    std::set<std::string> codes;
    for (std::size_t i = 0; i < raw.rows.size(); ++i) {
        const csv::Row& row = raw.rows[i];
        const std::size_t line = line_of(i);
        SourceRow parsed;
        parsed.code = row[0];
        parsed.name = row[1];
        parsed.amount_musd = csv::parse_double(row[2], origin, line, 3);
        parsed.share_of_company = csv::parse_double(row[3], origin, line, 4);
        if (parsed.code.empty()) {
            throw ValidationError(origin + ":" + std::to_string(line) + ": empty activity code");
        }
        if (!codes.insert(parsed.code).second) {
            throw DuplicateCode(parsed.code);
        }
        if (parsed.amount_musd < 0.0) {
            throw ValidationError(origin + ":" + std::to_string(line) + ": amount for '" +
                                  parsed.code + "' must be >= 0");
        }
        if (parsed.share_of_company < 0.0 || parsed.share_of_company > 1.0) {
            throw ValidationError(origin + ":" + std::to_string(line) + ": share for '" +
                                  parsed.code + "' must lie in [0,1]");
        }
        table.rows.push_back(std::move(parsed));
    }
    return table;
}

AttributeTable load_attributes(const std::filesystem::path& path) {
    const std::string origin = path.string();
    const csv::Table raw = csv::read_file(path);
    require_header(raw, kAttributeHeader, origin);

    AttributeTable table;
    std::set<std::string> codes;
    for (std::size_t i = 0; i < raw.rows.size(); ++i) {
        const csv::Row& row = raw.rows[i];
        const std::size_t line = line_of(i);
        AttributeRow parsed;
        parsed.code = row[0];
        parsed.name = row[1];
        parsed.link = parse_level(row[2], "link", origin, line, 3);
        parsed.contribution = parse_level(row[3], "contribution", origin, line, 4);
        parsed.link_rationale = row[4];
        parsed.contribution_rationale = row[5];
        if (parsed.code.empty()) {
            throw ValidationError(origin + ":" + std::to_string(line) + ": empty activity code");
        }
        if (!codes.insert(parsed.code).second) {
            throw DuplicateCode(parsed.code);
        }
        table.rows.push_back(std::move(parsed));
    }
    return table;
}

CompanyContext load_context(const std::filesystem::path& path) {
    const std::string origin = path.string();
    const csv::Table raw = csv::read_file(path);
    require_header(raw, kContextHeader, origin);
    if (raw.rows.size() != 1) {
        throw ValidationError(origin + ": expected exactly one data row, got " +
                              std::to_string(raw.rows.size()));
    }
    const csv::Row& row = raw.rows[0];
    CompanyContext context;
    context.company = row[0];
    context.period = static_cast<int>(csv::parse_int(row[1], origin, 2, 2));
    context.eligible_capex_musd = csv::parse_double(row[2], origin, 2, 3);
    context.eligible_capex_share = csv::parse_double(row[3], origin, 2, 4);
    context.eligible_turnover_musd = csv::parse_double(row[4], origin, 2, 5);
    context.eligible_turnover_share = csv::parse_double(row[5], origin, 2, 6);
    context.aligned_capex_musd = csv::parse_double(row[6], origin, 2, 7);
    context.aligned_turnover_musd = csv::parse_double(row[7], origin, 2, 8);

    if (context.company.empty()) {
        throw ValidationError(origin + ": company must be non-empty");
    }
    for (auto [share, what] : {std::pair{context.eligible_capex_share, "eligible_capex_share"},
                               std::pair{context.eligible_turnover_share, "eligible_turnover_share"}}) {
        if (!(share > 0.0 && share <= 1.0)) {
            throw ValidationError(origin + ": " + what + " must lie in (0,1]");
        }
    }
    for (auto [amount, what] : {std::pair{context.eligible_capex_musd, "eligible_capex_musd"},
                                std::pair{context.eligible_turnover_musd, "eligible_turnover_musd"},
                                std::pair{context.aligned_capex_musd, "aligned_capex_musd"},
                                std::pair{context.aligned_turnover_musd, "aligned_turnover_musd"}}) {
        if (amount < 0.0) {
            throw ValidationError(origin + ": " + what + " must be >= 0");
        }
    }
    if (context.aligned_capex_musd > context.eligible_capex_musd ||
        context.aligned_turnover_musd > context.eligible_turnover_musd) {
        throw ValidationError(origin + ": aligned amounts cannot exceed eligible amounts");
    }
    log::warn("company totals derived from context: capex " +
              format::fixed(context.company_capex_total(), 0) + " M$, turnover " +
              format::fixed(context.company_turnover_total(), 0) + " M$");
    return context;
}

void write_source_table(const SourceTable& table, const std::filesystem::path& path) {
    csv::Table out;
    out.header = kSourceHeader;
    for (const SourceRow& row : table.rows) {
        out.rows.push_back({row.code, row.name, format::shortest(row.amount_musd),
                            format::shortest(row.share_of_company)});
    }
    csv::write_file(path, out);
}

std::vector<core::Activity> assemble_activities(const SourceTable& capex,
                                                const SourceTable& turnover,
                                                const AttributeTable& attributes, JoinMode join) {
    const SourceTable& driver = join == JoinMode::turnover_only ? turnover : capex;

    std::vector<core::Activity> activities;
    for (const SourceRow& row : driver.rows) {
        const SourceRow* other =
            join == JoinMode::inner ? turnover.find(row.code) : nullptr;
        if (join == JoinMode::inner && other == nullptr) {
            continue;
        }
        const AttributeRow* attr = attributes.find(row.code);
        if (attr == nullptr) {
            throw MissingAttribute(row.code);
        }
        core::Activity activity;
        activity.code = row.code;
        activity.name = row.name;
        activity.link = attr->link;
        activity.contribution = attr->contribution;
        switch (join) {
            case JoinMode::inner:
                activity.capex = row.amount_musd;
                activity.turnover = other->amount_musd;
                break;
            case JoinMode::capex_only:
                activity.capex = row.amount_musd;
                break;
            case JoinMode::turnover_only:
                activity.turnover = row.amount_musd;
                break;
        }
        activities.push_back(std::move(activity));
    }
    core::validate(activities);
    return activities;
}

const CompanyContext& Bundle::require_context() const {
    if (!context) {
        throw ValidationError("this dataset has no context.csv (required for aggregation)");
    }
    return *context;
}

Bundle load_bundle(const std::filesystem::path& dir) {
    if (!std::filesystem::is_directory(dir)) {
        throw Error("data directory '" + dir.string() + "' does not exist");
    }
    Bundle bundle;
    bundle.capex = load_source_table(dir / "capex.csv", SourceKind::capex);
    bundle.turnover = load_source_table(dir / "turnover.csv", SourceKind::turnover);
    bundle.attributes = load_attributes(dir / "attributes.csv");
    if (std::filesystem::exists(dir / "context.csv")) {
        bundle.context = load_context(dir / "context.csv");
    }
    if (!bundle.context) {
        return bundle;
    }

    const double capex_total = bundle.capex.total_amount();
    if (std::abs(capex_total - bundle.context->aligned_capex_musd) > 0.5) {
        log::warn("capex amounts sum to " + format::fixed(capex_total, 0) +
                  " M$ but context says aligned capex is " +
                  format::fixed(bundle.context->aligned_capex_musd, 0) + " M$");
    }
    const double turnover_total = bundle.turnover.total_amount();
    if (std::abs(turnover_total - bundle.context->aligned_turnover_musd) > 0.5) {
        log::warn("turnover amounts sum to " + format::fixed(turnover_total, 0) +
                  " M$ but context says aligned turnover is " +
                  format::fixed(bundle.context->aligned_turnover_musd, 0) + " M$");
    }
    return bundle;
}

}  // namespace crosswash::dataset
