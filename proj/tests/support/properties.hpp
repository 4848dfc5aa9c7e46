// Property battery shared by the unit suite and the acceptance suite.
// Every generator uses a fixed seed; each function returns failure messages
// (empty == pass).
#pragma once

#include <cmath>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "crosswash/core.hpp"
#include "crosswash/log.hpp"

#include "oracle.hpp"

namespace properties {

using crosswash::core::Activity;
using crosswash::core::Criterion;
using crosswash::core::DecisionMatrix;
using crosswash::core::Direction;
using crosswash::core::ScoreTable;
using crosswash::core::WeightVector;

struct Silence {
    Silence() { crosswash::log::set_warning_handler([](const std::string&) {}); }
    ~Silence() { crosswash::log::set_warning_handler({}); }
};

inline std::vector<Activity> random_activities(std::mt19937& rng) {
    std::uniform_int_distribution<int> count_dist(1, 6);
    std::uniform_real_distribution<double> money(0.0, 2000.0);
    std::uniform_int_distribution<int> level(0, 5);
    const int count = count_dist(rng);
    std::vector<Activity> activities;
    for (int i = 0; i < count; ++i) {
        Activity a;
        a.code = "a" + std::to_string(i);
        a.name = "activity " + std::to_string(i);
        a.capex = money(rng);
        a.turnover = money(rng);
        a.link = level(rng);
        a.contribution = level(rng);
        activities.push_back(std::move(a));
    }
    return activities;
}

inline WeightVector random_weights(std::mt19937& rng, const std::vector<Criterion>& criteria) {
    std::uniform_real_distribution<double> weight(0.0, 2.0);
    std::vector<WeightVector::Entry> entries;
    for (const Criterion& criterion : criteria) {
        entries.emplace_back(criterion.id, weight(rng));
    }
    entries.front().second += 0.05;  // keep at least one weight positive
    return WeightVector(std::move(entries));
}

inline std::vector<Criterion> builtin_criteria() {
    return {{"CapEx", Direction::benefit},
            {"Turnover", Direction::benefit},
            {"Link", Direction::benefit},
            {"Contribution", Direction::benefit}};
}

// score_run against the straight-line oracle on random activity sets.
inline std::vector<std::string> oracle_equivalence_activities(int cases, double tol = 1e-9) {
    Silence quiet;
    std::mt19937 rng(20240601);
    std::vector<std::string> failures;
    const std::vector<Criterion> criteria = builtin_criteria();
    for (int c = 0; c < cases && failures.size() < 5; ++c) {
        const std::vector<Activity> activities = random_activities(rng);
        const WeightVector weights = random_weights(rng, criteria);

        std::vector<std::string> codes;
        std::vector<std::vector<double>> columns(4);
        for (const Activity& a : activities) {
            codes.push_back(a.code);
            columns[0].push_back(*a.capex);
            columns[1].push_back(*a.turnover);
            columns[2].push_back(a.link);
            columns[3].push_back(a.contribution);
        }
        std::vector<double> weight_values;
        for (const auto& [id, value] : weights.entries()) {
            weight_values.push_back(value);
        }
        const oracle::Output expected =
            oracle::score(codes, columns, {false, false, false, false}, weight_values);
        const ScoreTable actual = crosswash::core::score_run(activities, criteria, weights);

        bool ok = actual.rows.size() == expected.rows.size() &&
                  std::abs(actual.average_percent - expected.average) <= tol &&
                  std::abs(actual.deterioration_percent - expected.deterioration) <= tol;
        for (std::size_t i = 0; ok && i < actual.rows.size(); ++i) {
            ok = actual.rows[i].code == expected.rows[i].code &&
                 std::abs(actual.rows[i].weighted_sum - expected.rows[i].sum) <= tol &&
                 std::abs(actual.rows[i].normalized_percent - expected.rows[i].pct) <= tol;
        }
        if (!ok) {
            failures.push_back("case " + std::to_string(c) + ": score_run diverges from oracle");
        }
    }
    return failures;
}

// The matrix pipeline (build/normalize/weighted_sum/rescale) against the
// oracle, including cost-direction columns.
inline std::vector<std::string> oracle_equivalence_matrix(int cases, double tol = 1e-9) {
    Silence quiet;
    std::mt19937 rng(20240602);
    std::vector<std::string> failures;
    std::uniform_int_distribution<int> rows_dist(1, 6);
    std::uniform_int_distribution<int> cols_dist(1, 4);
    std::uniform_real_distribution<double> value(-50.0, 50.0);
    std::uniform_int_distribution<int> coin(0, 1);
    for (int c = 0; c < cases && failures.size() < 5; ++c) {
        const int n = rows_dist(rng);
        const int m = cols_dist(rng);
        std::vector<std::string> codes;
        for (int i = 0; i < n; ++i) {
            codes.push_back("r" + std::to_string(i));
        }
        std::vector<Criterion> criteria;
        std::vector<bool> is_cost;
        for (int j = 0; j < m; ++j) {
            const bool cost = coin(rng) == 1;
            criteria.push_back({"c" + std::to_string(j),
                                cost ? Direction::cost : Direction::benefit});
            is_cost.push_back(cost);
        }
        std::vector<std::vector<double>> columns(m);
        std::vector<double> raw(n * m, 0.0);
        for (int j = 0; j < m; ++j) {
            const bool degenerate = coin(rng) == 1 && coin(rng) == 1;
            const double fill = value(rng);
            for (int i = 0; i < n; ++i) {
                const double v = degenerate ? fill : value(rng);
                columns[j].push_back(v);
                raw[i * m + j] = v;
            }
        }
        const WeightVector weights = random_weights(rng, criteria);
        std::vector<double> weight_values;
        for (const auto& [id, w] : weights.entries()) {
            weight_values.push_back(w);
        }

        const oracle::Output expected = oracle::score(codes, columns, is_cost, weight_values);

        const DecisionMatrix matrix(codes, criteria, raw);
        const DecisionMatrix normalized = crosswash::core::normalize_matrix(matrix);
        const auto sums = crosswash::core::weighted_sum(normalized, weights);
        const auto percents = crosswash::core::rescale_scores(sums);

        bool ok = true;
        for (int i = 0; i < n && ok; ++i) {
            const oracle::Row* expected_row = nullptr;
            for (const oracle::Row& row : expected.rows) {
                if (row.code == codes[i]) {
                    expected_row = &row;
                    break;
                }
            }
            ok = expected_row != nullptr &&
                 std::abs(sums[i].value - expected_row->sum) <= tol &&
                 std::abs(percents[i].value - expected_row->pct) <= tol;
        }
        if (!ok) {
            failures.push_back("case " + std::to_string(c) + ": matrix pipeline diverges");
        }
    }
    return failures;
}

// Replacing a benefit column v with a*v+b (a>0) leaves normalization
// unchanged; with a<0 it equals the cost normalization of the original.
inline std::vector<std::string> affine_invariance(int cases, double tol = 1e-9) {
    Silence quiet;
    std::mt19937 rng(20240603);
    std::vector<std::string> failures;
    std::uniform_int_distribution<int> rows_dist(2, 6);
    std::uniform_real_distribution<double> value(-50.0, 50.0);
    std::uniform_real_distribution<double> scale(0.1, 5.0);
    for (int c = 0; c < cases && failures.size() < 5; ++c) {
        const int n = rows_dist(rng);
        std::vector<std::string> codes;
        std::vector<double> column;
        for (int i = 0; i < n; ++i) {
            codes.push_back("r" + std::to_string(i));
            column.push_back(value(rng));
        }
        const double a = scale(rng);
        const double b = value(rng);

        const std::vector<Criterion> benefit = {{"c", Direction::benefit}};
        const std::vector<Criterion> cost = {{"c", Direction::cost}};

        const DecisionMatrix base(codes, benefit, column);
        std::vector<double> scaled_up;
        std::vector<double> scaled_down;
        for (double v : column) {
            scaled_up.push_back(a * v + b);
            scaled_down.push_back(-a * v + b);
        }
        const DecisionMatrix up(codes, benefit, scaled_up);
        const DecisionMatrix down(codes, benefit, scaled_down);

        const auto norm_base = crosswash::core::normalize_matrix(base).values();
        const auto norm_up = crosswash::core::normalize_matrix(up).values();
        const auto norm_down = crosswash::core::normalize_matrix(down).values();
        const auto norm_cost = crosswash::core::normalize_matrix(
                                   DecisionMatrix(codes, cost, column))
                                   .values();

        for (int i = 0; i < n; ++i) {
            if (std::abs(norm_base[i] - norm_up[i]) > tol) {
                failures.push_back("case " + std::to_string(c) + ": a>0 affine change moved row " +
                                   std::to_string(i));
                break;
            }
            if (std::abs(norm_down[i] - norm_cost[i]) > tol) {
                failures.push_back("case " + std::to_string(c) +
                                   ": a<0 affine change != cost normalization at row " +
                                   std::to_string(i));
                break;
            }
        }
    }
    return failures;
}

// Scaling all weights by c>0 leaves percents and ranking unchanged and scales
// the weighted sums by c.
inline std::vector<std::string> weight_scaling(int cases, double tol = 1e-9) {
    Silence quiet;
    std::mt19937 rng(20240604);
    std::vector<std::string> failures;
    std::uniform_real_distribution<double> factor(0.2, 8.0);
    const std::vector<Criterion> criteria = builtin_criteria();
    for (int c = 0; c < cases && failures.size() < 5; ++c) {
        const std::vector<Activity> activities = random_activities(rng);
        const WeightVector weights = random_weights(rng, criteria);
        const double k = factor(rng);

        const ScoreTable base = crosswash::core::score_run(activities, criteria, weights);
        const ScoreTable scaled =
            crosswash::core::score_run(activities, criteria, weights.scaled(k));

        bool ok = base.rows.size() == scaled.rows.size();
        for (std::size_t i = 0; ok && i < base.rows.size(); ++i) {
            ok = base.rows[i].code == scaled.rows[i].code &&
                 std::abs(base.rows[i].normalized_percent - scaled.rows[i].normalized_percent) <=
                     tol &&
                 std::abs(base.rows[i].weighted_sum * k - scaled.rows[i].weighted_sum) <= tol * k;
        }
        if (!ok) {
            failures.push_back("case " + std::to_string(c) + ": weight scaling changed output");
        }
    }
    return failures;
}

// Raising one activity's raw value on a benefit criterion (attainers for the
// other rows preserved) never lowers that activity's weighted sum.
inline std::vector<std::string> monotonicity(int cases, double tol = 1e-12) {
    Silence quiet;
    std::mt19937 rng(20240605);
    std::vector<std::string> failures;
    const std::vector<Criterion> criteria = builtin_criteria();
    std::uniform_int_distribution<int> pick_criterion(0, 1);  // capex or turnover
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    for (int c = 0; c < cases && failures.size() < 5; ++c) {
        std::vector<Activity> activities = random_activities(rng);
        if (activities.size() < 2) {
            continue;
        }
        std::uniform_int_distribution<int> pick_row(0, static_cast<int>(activities.size()) - 1);
        const int row = pick_row(rng);
        const bool use_capex = pick_criterion(rng) == 0;

        auto value_of = [&](const Activity& a) {
            return use_capex ? *a.capex : *a.turnover;
        };
        double lo = value_of(activities[0]);
        double hi = lo;
        int lo_count = 0;
        for (const Activity& a : activities) {
            lo = std::min(lo, value_of(a));
            hi = std::max(hi, value_of(a));
        }
        for (const Activity& a : activities) {
            if (value_of(a) == lo) {
                ++lo_count;
            }
        }
        const double v = value_of(activities[row]);
        if (v == lo && lo_count == 1) {
            continue;  // raising the unique min would move the other rows' min
        }
        const double headroom = hi - v;
        const double delta =
            headroom > 0.0 ? unit(rng) * headroom : unit(rng) * 10.0 + 1e-6;

        const WeightVector weights = random_weights(rng, criteria);
        const ScoreTable before = crosswash::core::score_run(activities, criteria, weights);

        if (use_capex) {
            activities[row].capex = v + delta;
        } else {
            activities[row].turnover = v + delta;
        }
        const ScoreTable after = crosswash::core::score_run(activities, criteria, weights);

        const std::string& code = activities[row].code;
        const double sum_before = before.find(code)->weighted_sum;
        const double sum_after = after.find(code)->weighted_sum;
        if (sum_after < sum_before - tol) {
            std::ostringstream msg;
            msg << "case " << c << ": sum fell from " << sum_before << " to " << sum_after;
            failures.push_back(msg.str());
        }
    }
    return failures;
}

// Permuting the activity input order leaves the (canonically sorted) table,
// the average and the deterioration unchanged.
inline std::vector<std::string> permutation_invariance(int cases, double tol = 1e-12) {
    Silence quiet;
    std::mt19937 rng(20240606);
    std::vector<std::string> failures;
    const std::vector<Criterion> criteria = builtin_criteria();
    for (int c = 0; c < cases && failures.size() < 5; ++c) {
        std::vector<Activity> activities = random_activities(rng);
        const WeightVector weights = random_weights(rng, criteria);
        const ScoreTable base = crosswash::core::score_run(activities, criteria, weights);

        std::shuffle(activities.begin(), activities.end(), rng);
        const ScoreTable shuffled = crosswash::core::score_run(activities, criteria, weights);

        bool ok = base.rows.size() == shuffled.rows.size() &&
                  std::abs(base.average_percent - shuffled.average_percent) <= tol &&
                  std::abs(base.deterioration_percent - shuffled.deterioration_percent) <= tol;
        for (std::size_t i = 0; ok && i < base.rows.size(); ++i) {
            ok = base.rows[i].code == shuffled.rows[i].code &&
                 std::abs(base.rows[i].weighted_sum - shuffled.rows[i].weighted_sum) <= tol &&
                 std::abs(base.rows[i].normalized_percent - shuffled.rows[i].normalized_percent) <=
                     tol;
        }
        if (!ok) {
            failures.push_back("case " + std::to_string(c) + ": permutation changed the table");
        }
    }
    return failures;
}

// Normalized entries lie in [0,1]; percents lie in [0,100]; with distinct sums
// exactly one row sits at 100 and one at 0.
inline std::vector<std::string> ranges(int cases) {
    Silence quiet;
    std::mt19937 rng(20240607);
    std::vector<std::string> failures;
    const std::vector<Criterion> criteria = builtin_criteria();
    for (int c = 0; c < cases && failures.size() < 5; ++c) {
        const std::vector<Activity> activities = random_activities(rng);
        const WeightVector weights = random_weights(rng, criteria);

        const DecisionMatrix normalized = crosswash::core::normalize_matrix(
            crosswash::core::build_matrix(activities, criteria));
        for (double v : normalized.values()) {
            if (v < 0.0 || v > 1.0) {
                failures.push_back("case " + std::to_string(c) + ": normalized value " +
                                   std::to_string(v) + " outside [0,1]");
                break;
            }
        }

        const ScoreTable table = crosswash::core::score_run(activities, criteria, weights);
        bool sums_distinct = true;
        for (std::size_t i = 0; i + 1 < table.rows.size() && sums_distinct; ++i) {
            for (std::size_t j = i + 1; j < table.rows.size(); ++j) {
                if (table.rows[i].weighted_sum == table.rows[j].weighted_sum) {
                    sums_distinct = false;
                    break;
                }
            }
        }
        int at_hundred = 0;
        int at_zero = 0;
        for (const auto& row : table.rows) {
            if (row.normalized_percent < 0.0 || row.normalized_percent > 100.0) {
                failures.push_back("case " + std::to_string(c) + ": percent outside [0,100]");
                break;
            }
            if (row.normalized_percent == 100.0) {
                ++at_hundred;
            }
            if (row.normalized_percent == 0.0) {
                ++at_zero;
            }
        }
        if (table.rows.size() > 1 && sums_distinct && (at_hundred != 1 || at_zero != 1)) {
            failures.push_back("case " + std::to_string(c) +
                               ": endpoints not unique with distinct sums");
        }
    }
    return failures;
}

// Normalizing a benefit column already spanning [0,1] is the identity.
inline std::vector<std::string> idempotence(int cases, double tol = 1e-12) {
    Silence quiet;
    std::mt19937 rng(20240608);
    std::vector<std::string> failures;
    std::uniform_int_distribution<int> rows_dist(2, 6);
    std::uniform_real_distribution<double> value(-50.0, 50.0);
    for (int c = 0; c < cases && failures.size() < 5; ++c) {
        const int n = rows_dist(rng);
        std::vector<std::string> codes;
        std::vector<double> column;
        for (int i = 0; i < n; ++i) {
            codes.push_back("r" + std::to_string(i));
            column.push_back(value(rng));
        }
        if (column[0] == column[1]) {
            continue;
        }
        const std::vector<Criterion> benefit = {{"c", Direction::benefit}};
        const DecisionMatrix once =
            crosswash::core::normalize_matrix(DecisionMatrix(codes, benefit, column));
        const DecisionMatrix twice = crosswash::core::normalize_matrix(once);
        for (int i = 0; i < n; ++i) {
            if (std::abs(once.values()[i] - twice.values()[i]) > tol) {
                failures.push_back("case " + std::to_string(c) + ": renormalization moved row " +
                                   std::to_string(i));
                break;
            }
        }
    }
    return failures;
}

inline std::vector<std::string> run_all(int cases) {
    std::vector<std::string> failures;
    for (auto* fn : {&oracle_equivalence_activities, &oracle_equivalence_matrix}) {
        for (const std::string& f : fn(cases, 1e-9)) {
            failures.push_back(f);
        }
    }
    for (const std::string& f : affine_invariance(cases)) failures.push_back(f);
    for (const std::string& f : weight_scaling(cases)) failures.push_back(f);
    for (const std::string& f : monotonicity(cases)) failures.push_back(f);
    for (const std::string& f : permutation_invariance(cases)) failures.push_back(f);
    for (const std::string& f : ranges(cases)) failures.push_back(f);
    for (const std::string& f : idempotence(cases)) failures.push_back(f);
    return failures;
}

}  // namespace properties
