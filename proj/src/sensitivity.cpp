#include "crosswash/sensitivity.hpp"

#include <algorithm>
#include <map>

#include "crosswash/errors.hpp"

namespace crosswash::sensitivity {
namespace {

SweepPoint evaluate(std::span<const core::Activity> activities,
                    std::span<const core::Criterion> criteria, core::WeightVector weights) {
    const core::ScoreTable table = core::score_run(activities, criteria, weights);
    SweepPoint point;
    point.weights = std::move(weights);
    point.average_percent = table.average_percent;
    point.deterioration_percent = table.deterioration_percent;
    point.ranking.reserve(table.rows.size());
    for (const core::ScoreRow& row : table.rows) {
        point.ranking.push_back(row.code);
    }
    return point;
}

std::map<std::string, int> rank_index(const std::vector<std::string>& ranking) {
    std::map<std::string, int> index;
    for (std::size_t i = 0; i < ranking.size(); ++i) {
        index[ranking[i]] = static_cast<int>(i) + 1;
    }
    return index;
}

}  // namespace

SweepResult sweep_weights(std::span<const core::Activity> activities,
                          std::span<const core::Criterion> criteria,
                          const core::WeightVector& baseline, SweepDeltas deltas) {
    if (!(deltas.step > 0.0)) {
        throw ValidationError("sweep step must be > 0");
    }
    if (deltas.radius < 0) {
        throw ValidationError("sweep radius must be >= 0");
    }

    SweepResult result;
    result.baseline = baseline;
    result.grid.push_back(evaluate(activities, criteria, baseline));

    const auto& entries = baseline.entries();
    for (std::size_t j = 0; j < entries.size(); ++j) {
        for (int k = 1; k <= deltas.radius; ++k) {
            for (double sign : {-1.0, 1.0}) {
                std::vector<core::WeightVector::Entry> perturbed = entries;
                perturbed[j].second =
                    std::max(0.0, perturbed[j].second + sign * k * deltas.step);
                const bool all_zero = std::all_of(
                    perturbed.begin(), perturbed.end(),
                    [](const core::WeightVector::Entry& e) { return e.second == 0.0; });
                if (all_zero) {
                    continue;  // not a valid weight vector
                }
                result.grid.push_back(evaluate(activities, criteria,
                                               core::WeightVector(std::move(perturbed))));
            }
        }
    }
    return result;
}

CriteriaComparison compare_criteria_sets(std::span<const core::Activity> activities,
                                         const CriteriaSet& set_a, const CriteriaSet& set_b) {
    CriteriaComparison comparison;
    comparison.table_a = core::score_run(activities, set_a.criteria, set_a.weights);
    comparison.table_b = core::score_run(activities, set_b.criteria, set_b.weights);

    std::map<std::string, int> ranks_a;
    for (std::size_t i = 0; i < comparison.table_a.rows.size(); ++i) {
        ranks_a[comparison.table_a.rows[i].code] = static_cast<int>(i) + 1;
    }
    for (std::size_t i = 0; i < comparison.table_b.rows.size(); ++i) {
        const std::string& code = comparison.table_b.rows[i].code;
        RankShift shift;
        shift.code = code;
        shift.rank_a = ranks_a.at(code);
        shift.rank_b = static_cast<int>(i) + 1;
        shift.delta = shift.rank_b - shift.rank_a;
        comparison.shifts.push_back(std::move(shift));
    }
    std::sort(comparison.shifts.begin(), comparison.shifts.end(),
              [](const RankShift& a, const RankShift& b) { return a.code < b.code; });
    return comparison;
}

std::vector<StabilityRow> rank_stability(const SweepResult& sweep) {
    if (sweep.grid.empty()) {
        throw ValidationError("rank_stability: empty sweep");
    }
    const std::map<std::string, int> baseline = rank_index(sweep.grid.front().ranking);
    std::vector<std::map<std::string, int>> per_point;
    per_point.reserve(sweep.grid.size());
    for (const SweepPoint& point : sweep.grid) {
        per_point.push_back(rank_index(point.ranking));
    }

    std::vector<StabilityRow> stability;
    stability.reserve(baseline.size());
    for (const auto& [code, base_rank] : baseline) {
        int unchanged = 0;
        for (const auto& ranks : per_point) {
            const auto it = ranks.find(code);
            if (it != ranks.end() && it->second == base_rank) {
                ++unchanged;
            }
        }
        stability.push_back(
            {code, static_cast<double>(unchanged) / static_cast<double>(sweep.grid.size())});
    }
    return stability;
}

}  // namespace crosswash::sensitivity
