#pragma once

#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "crosswash/core.hpp"

namespace crosswash::dataset {

enum class SourceKind { capex, turnover };

std::string_view to_string(SourceKind kind);

/// One row of a CapEx or Turnover disclosure table: taxonomy code, label,
/// amount in millions USD, and the disclosed share of the company total
/// (a fraction in [0,1], carried as transcribed, not recomputed).
struct SourceRow {
    std::string code;
    std::string name;
    double amount_musd = 0.0;
    double share_of_company = 0.0;
};

struct SourceTable {
    SourceKind kind = SourceKind::capex;
    std::vector<SourceRow> rows;

    double total_amount() const noexcept;
    const SourceRow* find(std::string_view code) const noexcept;
};

/// Analyst-assigned Link/Contribution levels with their rationales.
struct AttributeRow {
    std::string code;
    std::string name;
    int link = 0;
    int contribution = 0;
    std::string link_rationale;
    std::string contribution_rationale;
};

struct AttributeTable {
    std::vector<AttributeRow> rows;

    const AttributeRow* find(std::string_view code) const noexcept;
};

/// Company-level disclosure figures for one fiscal period. Company totals are
/// derived as eligible amount / eligible share.
struct CompanyContext {
    std::string company;
    int period = 0;
    double eligible_capex_musd = 0.0;
    double eligible_capex_share = 0.0;
    double eligible_turnover_musd = 0.0;
    double eligible_turnover_share = 0.0;
    double aligned_capex_musd = 0.0;
    double aligned_turnover_musd = 0.0;

    double company_capex_total() const { return eligible_capex_musd / eligible_capex_share; }
    double company_turnover_total() const { return eligible_turnover_musd / eligible_turnover_share; }
};

// CSV schemas (UTF-8, header required, comma delimiter, decimal point, no
// thousands separators):
//   source:     code,name,amount_musd,share_of_company
//   attributes: code,name,link,contribution,link_rationale,contribution_rationale
//   context:    company,period,eligible_capex_musd,eligible_capex_share,
//               eligible_turnover_musd,eligible_turnover_share,
//               aligned_capex_musd,aligned_turnover_musd
SourceTable load_source_table(const std::filesystem::path& path, SourceKind kind);
AttributeTable load_attributes(const std::filesystem::path& path);
CompanyContext load_context(const std::filesystem::path& path);

/// Serialization (round-trips with load_source_table).
void write_source_table(const SourceTable& table, const std::filesystem::path& path);

enum class JoinMode { inner, capex_only, turnover_only };

/// Joins the source tables on taxonomy code and attaches Link/Contribution.
/// inner: activities present in both tables, both monetary fields set.
/// capex_only / turnover_only: that table's activities, one field set.
/// Row order follows the driving table. Throws MissingAttribute when a source
/// row has no attribute row.
std::vector<core::Activity> assemble_activities(const SourceTable& capex,
                                                const SourceTable& turnover,
                                                const AttributeTable& attributes, JoinMode join);

/// A data directory holding capex.csv, turnover.csv, attributes.csv and an
/// optional context.csv (required only by the aggregation reports).
struct Bundle {
    SourceTable capex;
    SourceTable turnover;
    AttributeTable attributes;
    std::optional<CompanyContext> context;

    const CompanyContext& require_context() const;  // ValidationError when absent
};

Bundle load_bundle(const std::filesystem::path& dir);

}  // namespace crosswash::dataset
