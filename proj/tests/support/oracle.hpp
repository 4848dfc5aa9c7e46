// Straight-line reference recomputation of the scoring pipeline, written
// independently of the library so golden and property tests have something
// impartial to compare against. Column-major input, no shared code paths.
#pragma once

#include <algorithm>
#include <cstddef>
#include <string>
#include <vector>

namespace oracle {

struct Row {
    std::string code;
    double sum = 0.0;
    double pct = 0.0;
};

struct Output {
    std::vector<Row> rows;  // pct descending, code ascending
    double average = 0.0;
    double deterioration = 0.0;
};

inline Output score(const std::vector<std::string>& codes,
                    const std::vector<std::vector<double>>& columns,
                    const std::vector<bool>& is_cost, const std::vector<double>& weights) {
    const std::size_t n = codes.size();
    const std::size_t m = columns.size();
    std::vector<double> sums(n, 0.0);
    for (std::size_t j = 0; j < m; ++j) {
        double lo = columns[j][0];
        double hi = columns[j][0];
        for (double v : columns[j]) {
            if (v < lo) lo = v;
            if (v > hi) hi = v;
        }
        for (std::size_t i = 0; i < n; ++i) {
            double norm = 0.0;
            if (hi != lo) {
                norm = is_cost[j] ? (hi - columns[j][i]) / (hi - lo)
                                  : (columns[j][i] - lo) / (hi - lo);
            }
            sums[i] += weights[j] * norm;
        }
    }

    double lo = sums[0];
    double hi = sums[0];
    for (double s : sums) {
        if (s < lo) lo = s;
        if (s > hi) hi = s;
    }

    Output out;
    out.rows.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        out.rows[i].code = codes[i];
        out.rows[i].sum = sums[i];
        out.rows[i].pct = hi == lo ? 100.0 : 100.0 * ((sums[i] - lo) / (hi - lo));
    }
    std::sort(out.rows.begin(), out.rows.end(), [](const Row& a, const Row& b) {
        if (a.pct != b.pct) return a.pct > b.pct;
        return a.code < b.code;
    });
    double total = 0.0;
    for (const Row& row : out.rows) {
        total += row.pct;
    }
    out.average = total / static_cast<double>(n);
    out.deterioration = 100.0 - out.average;
    return out;
}

}  // namespace oracle
