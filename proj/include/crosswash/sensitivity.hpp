#pragma once

#include <span>
#include <string>
#include <vector>

#include "crosswash/core.hpp"

namespace crosswash::sensitivity {

/// One evaluated weight assignment: the run's average/deterioration plus the
/// induced ranking (codes by normalized percent descending, code ascending).
struct SweepPoint {
    core::WeightVector weights;
    double average_percent = 0.0;
    double deterioration_percent = 0.0;
    std::vector<std::string> ranking;
};

struct SweepResult {
    core::WeightVector baseline;
    std::vector<SweepPoint> grid;  // grid.front() is the baseline point
};

struct SweepDeltas {
    double step = 0.0;
    int radius = 0;
};

/// Evaluates score_run over per-criterion additive perturbations of the
/// baseline weights: for each criterion, each k in 1..radius and both signs,
/// one grid point with that weight moved by k*step and clamped at 0. Points
/// whose clamped weights are all zero are skipped. Grid order is
/// deterministic: baseline, then criteria in order, k ascending, minus before
/// plus.
SweepResult sweep_weights(std::span<const core::Activity> activities,
                          std::span<const core::Criterion> criteria,
                          const core::WeightVector& baseline, SweepDeltas deltas);

struct CriteriaSet {
    std::vector<core::Criterion> criteria;
    core::WeightVector weights;
};

struct RankShift {
    std::string code;
    int rank_a = 0;  // 1-based position in set A's score table
    int rank_b = 0;
    int delta = 0;  // rank_b - rank_a; positive means the activity fell
};

struct CriteriaComparison {
    core::ScoreTable table_a;
    core::ScoreTable table_b;
    std::vector<RankShift> shifts;  // ordered by code ascending
};

/// Scores the same activities under two criteria/weight sets and reports the
/// per-activity rank movement between them.
CriteriaComparison compare_criteria_sets(std::span<const core::Activity> activities,
                                         const CriteriaSet& set_a, const CriteriaSet& set_b);

struct StabilityRow {
    std::string code;
    double fraction = 0.0;  // share of grid points where the rank equals baseline
};

/// Rank stability across a sweep, ordered by code ascending.
std::vector<StabilityRow> rank_stability(const SweepResult& sweep);

}  // namespace crosswash::sensitivity
