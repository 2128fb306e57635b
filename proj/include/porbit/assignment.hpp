// Dense linear assignment: find a bijection rows -> columns minimizing the
// summed cost. Shortest-augmenting-path (Jonker-Volgenant) scheme, O(n^3).
// Cluster counts here are small, so cubic is instant; the exhaustive
// factorial check lives in the test oracles, not in this header.

#pragma once

#include <cstddef>
#include <limits>
#include <stdexcept>
#include <vector>

namespace porbit {

/// Minimum-cost assignment for an n x n row-major cost matrix.
/// Returns sigma with sigma[row] = column.
inline std::vector<std::size_t> solve_assignment(const std::vector<double>& cost, std::size_t n) {
    if (cost.size() != n * n) throw std::invalid_argument("solve_assignment: bad matrix size");
    const double inf = std::numeric_limits<double>::infinity();
    // 1-based with column 0 as virtual source; match[j] = row assigned to column j.
    std::vector<double> u(n + 1, 0.0), v(n + 1, 0.0), minv(n + 1, 0.0);
    std::vector<std::size_t> match(n + 1, 0), way(n + 1, 0);
    std::vector<char> used(n + 1, 0);
    for (std::size_t i = 1; i <= n; ++i) {
        match[0] = i;
        std::size_t j0 = 0;
        std::fill(minv.begin(), minv.end(), inf);
        std::fill(used.begin(), used.end(), 0);
        do {
            used[j0] = 1;
            std::size_t i0 = match[j0], j1 = 0;
            double delta = inf;
            for (std::size_t j = 1; j <= n; ++j) {
                if (used[j]) continue;
                double cur = cost[(i0 - 1) * n + (j - 1)] - u[i0] - v[j];
                if (cur < minv[j]) {
                    minv[j] = cur;
                    way[j] = j0;
                }
                if (minv[j] < delta) {
                    delta = minv[j];
                    j1 = j;
                }
            }
            for (std::size_t j = 0; j <= n; ++j) {
                if (used[j]) {
                    u[match[j]] += delta;
                    v[j] -= delta;
                } else {
                    minv[j] -= delta;
                }
            }
            j0 = j1;
        } while (match[j0] != 0);
        do {
            std::size_t j1 = way[j0];
            match[j0] = match[j1];
            j0 = j1;
        } while (j0 != 0);
    }
    std::vector<std::size_t> sigma(n, 0);
    for (std::size_t j = 1; j <= n; ++j) sigma[match[j] - 1] = j - 1;
    return sigma;
}

/// Summed cost of an assignment, recomputed directly from the matrix.
inline double assignment_cost(const std::vector<double>& cost, std::size_t n,
                              const std::vector<std::size_t>& sigma) {
    double total = 0.0;
    for (std::size_t i = 0; i < n; ++i) total += cost[i * n + sigma[i]];
    return total;
}

/// Lexicographically smallest assignment among those within `tie_tol` of the
/// optimum. Fixes rows front to back, keeping the smallest column whose best
/// completion still reaches the optimal total.
inline std::vector<std::size_t> solve_assignment_lex(const std::vector<double>& cost,
                                                     std::size_t n, double tie_tol) {
    std::vector<std::size_t> base = solve_assignment(cost, n);
    const double best_total = assignment_cost(cost, n, base);

    std::vector<std::size_t> sigma(n, 0);
    std::vector<std::size_t> avail(n);
    for (std::size_t j = 0; j < n; ++j) avail[j] = j;
    double prefix = 0.0;
    for (std::size_t p = 0; p < n; ++p) {
        std::size_t chosen = avail.size();  // index into avail
        for (std::size_t c = 0; c < avail.size(); ++c) {
            std::size_t q = avail[c];
            // Optimal completion over rows p+1..n-1 and the remaining columns.
            std::size_t rem = n - p - 1;
            double completion = 0.0;
            if (rem > 0) {
                std::vector<double> sub(rem * rem);
                std::size_t cc = 0;
                for (std::size_t c2 = 0; c2 < avail.size(); ++c2) {
                    if (c2 == c) continue;
                    for (std::size_t r = 0; r < rem; ++r)
                        sub[r * rem + cc] = cost[(p + 1 + r) * n + avail[c2]];
                    ++cc;
                }
                completion = assignment_cost(sub, rem, solve_assignment(sub, rem));
            }
            if (prefix + cost[p * n + q] + completion <= best_total + tie_tol) {
                chosen = c;
                break;
            }
        }
        if (chosen == avail.size()) chosen = 0;  // numeric fallback, never expected
        std::size_t q = avail[chosen];
        sigma[p] = q;
        prefix += cost[p * n + q];
        avail.erase(avail.begin() + static_cast<std::ptrdiff_t>(chosen));
    }
    return sigma;
}

}  // namespace porbit
