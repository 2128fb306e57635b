// The intrinsic metric on partitions: delta(X, Y) is the smallest Euclidean
// distance between any pair of representations of X and Y. Minimizing over
// row permutations decomposes into a linear assignment on the ell x ell
// matrix of squared row distances, because ||X - PY||^2 is the sum of the
// assigned row-pair costs.

#pragma once

#include <cmath>
#include <cstdint>
#include <vector>

#include "porbit/assignment.hpp"
#include "porbit/partition.hpp"

namespace porbit {

namespace detail {

/// Squared-row-distance cost matrix C[p][q] = ||x_p - y_q||^2.
/// Hard inputs use cluster sizes and overlap counts, which yields the same
/// exact integer values as the dense sum in O(ell^2 + m) instead of
/// O(ell^2 m).
inline std::vector<double> alignment_cost_matrix(const Partition& x, const Partition& y) {
    const std::size_t ell = x.rows(), m = x.cols();
    std::vector<double> cost(ell * ell, 0.0);
    if (x.is_hard() && y.is_hard()) {
        std::vector<int> lx = hard_labels(x), ly = hard_labels(y);
        std::vector<double> sx(ell, 0.0), sy(ell, 0.0), overlap(ell * ell, 0.0);
        for (std::size_t j = 0; j < m; ++j) {
            std::size_t p = static_cast<std::size_t>(lx[j]) - 1;
            std::size_t q = static_cast<std::size_t>(ly[j]) - 1;
            sx[p] += 1.0;
            sy[q] += 1.0;
            overlap[p * ell + q] += 1.0;
        }
        for (std::size_t p = 0; p < ell; ++p)
            for (std::size_t q = 0; q < ell; ++q)
                cost[p * ell + q] = sx[p] + sy[q] - 2.0 * overlap[p * ell + q];
        return cost;
    }
    for (std::size_t p = 0; p < ell; ++p) {
        auto xr = x.row(p);
        for (std::size_t q = 0; q < ell; ++q) {
            auto yr = y.row(q);
            double s = 0.0;
            for (std::size_t j = 0; j < m; ++j) {
                double d = xr[j] - yr[j];
                s += d * d;
            }
            cost[p * ell + q] = s;
        }
    }
    return cost;
}

}  // namespace detail

/// Squared intrinsic distance delta(X, Y)^2.
inline double delta_squared(const Partition& x, const Partition& y) {
    if (!x.same_shape(y)) throw std::invalid_argument("delta: dimension mismatch");
    std::vector<double> cost = detail::alignment_cost_matrix(x, y);
    std::vector<std::size_t> sigma = solve_assignment(cost, x.rows());
    return assignment_cost(cost, x.rows(), sigma);
}

/// Intrinsic metric between partitions (orbit distance).
inline double delta(const Partition& x, const Partition& y) {
    return std::sqrt(delta_squared(x, y));
}

struct Alignment {
    PermutationMap permutation;  ///< P minimizing ||X - P.Y||
    double distance;             ///< the minimum, i.e. delta(X, Y)
};

/// Optimal alignment of Y onto X. Among cost-tied permutations the
/// lexicographically smallest image wins.
inline Alignment optimal_alignment(const Partition& x, const Partition& y) {
    if (!x.same_shape(y)) throw std::invalid_argument("optimal_alignment: dimension mismatch");
    const std::size_t ell = x.rows();
    std::vector<double> cost = detail::alignment_cost_matrix(x, y);
    double optimum = assignment_cost(cost, ell, solve_assignment(cost, ell));
    double tie_tol = 1e-12 * (1.0 + optimum);
    std::vector<std::size_t> sigma = solve_assignment_lex(cost, ell, tie_tol);
    double dist = std::sqrt(assignment_cost(cost, ell, sigma));
    return Alignment{PermutationMap(std::move(sigma)), dist};
}

}  // namespace porbit
