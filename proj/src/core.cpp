#include "crosswash/core.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <set>

#include "crosswash/errors.hpp"
#include "crosswash/format.hpp"
#include "crosswash/log.hpp"

namespace crosswash::core {
namespace {

bool iequals(std::string_view a, std::string_view b) {
    if (a.size() != b.size()) {
        return false;
    }
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (std::tolower(static_cast<unsigned char>(a[i])) !=
            std::tolower(static_cast<unsigned char>(b[i]))) {
            return false;
        }
    }
    return true;
}

void check_level(const std::string& code, const char* field, int value) {
    if (value < kMinLevel || value > kMaxLevel) {
        throw OutOfRangeLevel("activity '" + code + "' " + field, value);
    }
}

}  // namespace

void validate(const Activity& activity) {
    if (activity.code.empty()) {
        throw ValidationError("activity code must be non-empty");
    }
    check_level(activity.code, "link", activity.link);
    check_level(activity.code, "contribution", activity.contribution);
    if (activity.capex && (!std::isfinite(*activity.capex) || *activity.capex < 0.0)) {
        throw ValidationError("activity '" + activity.code + "' capex must be >= 0");
    }
    if (activity.turnover && (!std::isfinite(*activity.turnover) || *activity.turnover < 0.0)) {
        throw ValidationError("activity '" + activity.code + "' turnover must be >= 0");
    }
}

void validate(std::span<const Activity> activities) {
    std::set<std::string_view> seen;
    for (const Activity& activity : activities) {
        validate(activity);
        if (!seen.insert(activity.code).second) {
            throw DuplicateCode(activity.code);
        }
    }
}

bool is_builtin_criterion(std::string_view id) {
    return iequals(id, criteria::kCapEx) || iequals(id, criteria::kTurnover) ||
           iequals(id, criteria::kLink) || iequals(id, criteria::kContribution);
}

std::string canonical_criterion_id(std::string_view id) {
    for (std::string_view canonical :
         {criteria::kCapEx, criteria::kTurnover, criteria::kLink, criteria::kContribution}) {
        if (iequals(id, canonical)) {
            return std::string(canonical);
        }
    }
    return std::string(id);
}

double criterion_value(const Activity& activity, const Criterion& criterion) {
    if (iequals(criterion.id, criteria::kLink)) {
        return activity.link;
    }
    if (iequals(criterion.id, criteria::kContribution)) {
        return activity.contribution;
    }
    if (iequals(criterion.id, criteria::kCapEx)) {
        if (!activity.capex) {
            throw MissingValue(activity.code, canonical_criterion_id(criterion.id));
        }
        return *activity.capex;
    }
    if (iequals(criterion.id, criteria::kTurnover)) {
        if (!activity.turnover) {
            throw MissingValue(activity.code, canonical_criterion_id(criterion.id));
        }
        return *activity.turnover;
    }
    throw MissingValue(activity.code, criterion.id);
}

WeightVector::WeightVector(std::vector<Entry> entries) : entries_(std::move(entries)) {
    std::set<std::string_view> ids;
    bool any_positive = false;
    for (const Entry& entry : entries_) {
        if (!ids.insert(entry.first).second) {
            throw ValidationError("duplicate weight for criterion '" + entry.first + "'");
        }
        if (!std::isfinite(entry.second) || entry.second < 0.0) {
            throw ValidationError("weight for '" + entry.first + "' must be >= 0");
        }
        any_positive = any_positive || entry.second > 0.0;
    }
    if (entries_.empty()) {
        throw ValidationError("weight vector must not be empty");
    }
    if (!any_positive) {
        throw ValidationError("at least one weight must be > 0");
    }
}

WeightVector::WeightVector(std::initializer_list<Entry> entries)
    : WeightVector(std::vector<Entry>(entries)) {}

double WeightVector::total() const noexcept {
    double sum = 0.0;
    for (const Entry& entry : entries_) {
        sum += entry.second;
    }
    return sum;
}

const double* WeightVector::find(std::string_view id) const noexcept {
    for (const Entry& entry : entries_) {
        if (entry.first == id) {
            return &entry.second;
        }
    }
    return nullptr;
}

WeightVector WeightVector::scaled(double factor) const {
    std::vector<Entry> scaled_entries = entries_;
    for (Entry& entry : scaled_entries) {
        entry.second *= factor;
    }
    return WeightVector(std::move(scaled_entries));
}

WeightVector WeightVector::renormalized() const {
    return scaled(1.0 / total());
}

DecisionMatrix::DecisionMatrix(std::vector<std::string> alternatives,
                               std::vector<Criterion> criteria,
                               std::vector<double> values_row_major)
    : alternatives_(std::move(alternatives)),
      criteria_(std::move(criteria)),
      values_(std::move(values_row_major)) {
    if (values_.size() != alternatives_.size() * criteria_.size()) {
        throw ValidationError("decision matrix: " + std::to_string(values_.size()) +
                              " values for " + std::to_string(alternatives_.size()) + "x" +
                              std::to_string(criteria_.size()) + " grid");
    }
    for (double v : values_) {
        if (!std::isfinite(v)) {
            throw ValidationError("decision matrix: entries must be finite");
        }
    }
    std::set<std::string_view> ids;
    for (const Criterion& criterion : criteria_) {
        if (criterion.id.empty()) {
            throw ValidationError("criterion id must be non-empty");
        }
        if (!ids.insert(criterion.id).second) {
            throw ValidationError("duplicate criterion '" + criterion.id + "'");
        }
    }
}

DecisionMatrix build_matrix(std::span<const Activity> activities,
                            std::span<const Criterion> criteria) {
    validate(activities);
    std::vector<std::string> codes;
    codes.reserve(activities.size());
    std::vector<double> values;
    values.reserve(activities.size() * criteria.size());
    for (const Activity& activity : activities) {
        codes.push_back(activity.code);
        for (const Criterion& criterion : criteria) {
            values.push_back(criterion_value(activity, criterion));
        }
    }
    return DecisionMatrix(std::move(codes),
                          std::vector<Criterion>(criteria.begin(), criteria.end()),
                          std::move(values));
}

DecisionMatrix normalize_matrix(const DecisionMatrix& matrix) {
    const std::size_t rows = matrix.alternative_count();
    const std::size_t cols = matrix.criterion_count();
    if (rows == 0) {
        throw ValidationError("normalize_matrix: matrix has no alternatives");
    }
    std::vector<double> normalized(rows * cols, 0.0);
    for (std::size_t j = 0; j < cols; ++j) {
        double lo = matrix.at(0, j);
        double hi = lo;
        for (std::size_t i = 1; i < rows; ++i) {
            lo = std::min(lo, matrix.at(i, j));
            hi = std::max(hi, matrix.at(i, j));
        }
        if (hi == lo) {
            // Degenerate column: contributes nothing to any score.
            log::warn("criterion '" + matrix.criteria()[j].id + "': all values equal (" +
                      format::shortest(lo) + "); column normalized to 0");
            continue;
        }
        const double range = hi - lo;
        const bool benefit = matrix.criteria()[j].direction == Direction::benefit;
        for (std::size_t i = 0; i < rows; ++i) {
            const double v = matrix.at(i, j);
            const double ratio = benefit ? (v - lo) / range : (hi - v) / range;
            // The extremes are exact; interior values may spill a ulp.
            normalized[i * cols + j] = std::clamp(ratio, 0.0, 1.0);
        }
    }
    return DecisionMatrix(matrix.alternatives(), matrix.criteria(), std::move(normalized));
}

std::vector<Scored> weighted_sum(const DecisionMatrix& normalized, const WeightVector& weights) {
    const std::vector<Criterion>& criteria = normalized.criteria();
    if (weights.size() != criteria.size()) {
        throw CriteriaMismatch("weight count " + std::to_string(weights.size()) +
                               " != criterion count " + std::to_string(criteria.size()));
    }
    std::vector<double> ordered(criteria.size(), 0.0);
    for (std::size_t j = 0; j < criteria.size(); ++j) {
        const double* w = weights.find(criteria[j].id);
        if (w == nullptr) {
            throw CriteriaMismatch("no weight for criterion '" + criteria[j].id + "'");
        }
        ordered[j] = *w;
    }
    std::vector<Scored> sums;
    sums.reserve(normalized.alternative_count());
    for (std::size_t i = 0; i < normalized.alternative_count(); ++i) {
        double sum = 0.0;
        for (std::size_t j = 0; j < criteria.size(); ++j) {
            sum += ordered[j] * normalized.at(i, j);
        }
        sums.push_back({normalized.alternatives()[i], sum});
    }
    return sums;
}

std::vector<Scored> rescale_scores(std::span<const Scored> sums) {
    if (sums.empty()) {
        throw ValidationError("rescale_scores: empty input");
    }
    double lo = sums[0].value;
    double hi = lo;
    for (const Scored& s : sums) {
        lo = std::min(lo, s.value);
        hi = std::max(hi, s.value);
    }
    std::vector<Scored> percents;
    percents.reserve(sums.size());
    for (const Scored& s : sums) {
        // Equal sums carry no ranking evidence: everything maps to 100.
        // The ratio is formed first so the extreme rows land exactly on 0/100.
        const double ratio = hi == lo ? 1.0 : std::clamp((s.value - lo) / (hi - lo), 0.0, 1.0);
        percents.push_back({s.code, 100.0 * ratio});
    }
    return percents;
}

const ScoreRow* ScoreTable::find(std::string_view code) const noexcept {
    for (const ScoreRow& row : rows) {
        if (row.code == code) {
            return &row;
        }
    }
    return nullptr;
}

ScoreTable score_run(std::span<const Activity> activities, std::span<const Criterion> criteria,
                     const WeightVector& weights) {
    const DecisionMatrix normalized = normalize_matrix(build_matrix(activities, criteria));
    const std::vector<Scored> sums = weighted_sum(normalized, weights);
    const std::vector<Scored> percents = rescale_scores(sums);

    ScoreTable table;
    table.rows.reserve(sums.size());
    for (std::size_t i = 0; i < sums.size(); ++i) {
        table.rows.push_back({sums[i].code, sums[i].value, percents[i].value});
    }
    std::sort(table.rows.begin(), table.rows.end(), [](const ScoreRow& a, const ScoreRow& b) {
        if (a.normalized_percent != b.normalized_percent) {
            return a.normalized_percent > b.normalized_percent;
        }
        return a.code < b.code;
    });

    double total = 0.0;
    for (const ScoreRow& row : table.rows) {
        total += row.normalized_percent;
    }
    table.average_percent = total / static_cast<double>(table.rows.size());
    table.deterioration_percent = 100.0 - table.average_percent;
    return table;
}

double apply_deterioration(double base_env_score, double deterioration_percent) {
    if (!(base_env_score >= 0.0 && base_env_score <= 100.0)) {
        throw ValidationError("base environmental score must lie in [0,100]");
    }
    if (!(deterioration_percent >= 0.0 && deterioration_percent <= 100.0)) {
        throw ValidationError("deterioration percent must lie in [0,100]");
    }
    return base_env_score * (1.0 - deterioration_percent / 100.0);
}

}  // namespace crosswash::core
