#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace crosswash::core {

inline constexpr int kMinLevel = 0;
inline constexpr int kMaxLevel = 5;

/// One taxonomy-aligned corporate activity. Monetary figures are millions USD
/// and optional: an activity may appear in only one of the two source tables.
/// Link and Contribution are analyst-assigned integer levels on 0-5.
struct Activity {
    std::string code;
    std::string name;
    std::optional<double> capex;
    std::optional<double> turnover;
    int link = 0;
    int contribution = 0;
};

/// Throws ValidationError / OutOfRangeLevel on range or emptiness violations.
void validate(const Activity& activity);
/// Additionally enforces code uniqueness across the set.
void validate(std::span<const Activity> activities);

enum class Direction { benefit, cost };

struct Criterion {
    std::string id;
    Direction direction = Direction::benefit;
};

// Canonical ids of the four built-in criteria; matching is case-insensitive.
namespace criteria {
inline constexpr std::string_view kCapEx = "CapEx";
inline constexpr std::string_view kTurnover = "Turnover";
inline constexpr std::string_view kLink = "Link";
inline constexpr std::string_view kContribution = "Contribution";
}  // namespace criteria

/// True if `id` names one of the four built-in criteria (any casing).
bool is_builtin_criterion(std::string_view id);
/// Canonical spelling for built-in ids; user-defined ids pass through unchanged.
std::string canonical_criterion_id(std::string_view id);

/// Value an activity supplies for a criterion. Throws MissingValue when the
/// monetary figure is absent or the id names no built-in criterion.
double criterion_value(const Activity& activity, const Criterion& criterion);

/// Ordered (criterion id, weight) pairs. Weights are nonnegative, at least one
/// positive, ids distinct. Deliberately NOT required to sum to 1.
class WeightVector {
public:
    using Entry = std::pair<std::string, double>;

    WeightVector() = default;
    explicit WeightVector(std::vector<Entry> entries);
    WeightVector(std::initializer_list<Entry> entries);

    const std::vector<Entry>& entries() const noexcept { return entries_; }
    std::size_t size() const noexcept { return entries_.size(); }
    double total() const noexcept;
    const double* find(std::string_view id) const noexcept;

    WeightVector scaled(double factor) const;
    WeightVector renormalized() const;  // divides by total so weights sum to 1

private:
    std::vector<Entry> entries_;
};

/// Alternatives x criteria grid of raw (or normalized) values, row-major.
/// Construction rejects dimension mismatches and non-finite entries.
class DecisionMatrix {
public:
    DecisionMatrix(std::vector<std::string> alternatives, std::vector<Criterion> criteria,
                   std::vector<double> values_row_major);

    std::size_t alternative_count() const noexcept { return alternatives_.size(); }
    std::size_t criterion_count() const noexcept { return criteria_.size(); }
    const std::vector<std::string>& alternatives() const noexcept { return alternatives_; }
    const std::vector<Criterion>& criteria() const noexcept { return criteria_; }
    double at(std::size_t row, std::size_t col) const { return values_[row * criteria_.size() + col]; }
    const std::vector<double>& values() const noexcept { return values_; }

private:
    std::vector<std::string> alternatives_;
    std::vector<Criterion> criteria_;
    std::vector<double> values_;
};

/// Builds the raw decision matrix for the requested criteria.
/// Throws MissingValue(code, criterion) when an activity lacks a value.
DecisionMatrix build_matrix(std::span<const Activity> activities,
                            std::span<const Criterion> criteria);

/// Column-wise min-max normalization onto [0,1]. Benefit columns map larger
/// raw values higher; cost columns invert. A degenerate column (max == min)
/// normalizes to all zeros and emits a warning.
DecisionMatrix normalize_matrix(const DecisionMatrix& matrix);

struct Scored {
    std::string code;
    double value = 0.0;
};

/// Per-alternative weighted sum over an already normalized matrix. Weight ids
/// must cover exactly the matrix criteria (CriteriaMismatch otherwise).
/// Result order matches matrix row order.
std::vector<Scored> weighted_sum(const DecisionMatrix& normalized, const WeightVector& weights);

/// Min-max rescale of the weighted sums onto [0,100]. When all sums are equal
/// every entry maps to 100 (equal evidence is not presented as ranked).
std::vector<Scored> rescale_scores(std::span<const Scored> sums);

struct ScoreRow {
    std::string code;
    double weighted_sum = 0.0;
    double normalized_percent = 0.0;
};

/// Scoring result, rows ordered by normalized percent descending, ties broken
/// by activity code ascending. deterioration_percent == 100 - average_percent.
struct ScoreTable {
    std::vector<ScoreRow> rows;
    double average_percent = 0.0;
    double deterioration_percent = 0.0;

    const ScoreRow* find(std::string_view code) const noexcept;
};

/// Full pipeline: build matrix, normalize, weighted sum, rescale, sort, average.
ScoreTable score_run(std::span<const Activity> activities, std::span<const Criterion> criteria,
                     const WeightVector& weights);

/// Downward adjustment of an environmental rating: base * (1 - det/100).
/// Both inputs must lie in [0,100].
double apply_deterioration(double base_env_score, double deterioration_percent);

}  // namespace crosswash::core
