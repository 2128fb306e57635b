// Degree of asymmetry of a partition: the distance from a representation to
// its nearest nontrivial row permutation. It reduces to a minimum over
// transpositions, hence over cluster-row pairs, and for hard partitions to
// the sizes of the two smallest clusters. A quarter of it is a radius within
// which samples have a unique mean, which is what the homogeneity machinery
// tests against.

#pragma once

#include <cmath>
#include <limits>
#include <utility>

#include "porbit/metric.hpp"
#include "porbit/partition.hpp"

namespace porbit {

inline constexpr std::size_t kNoPair = static_cast<std::size_t>(-1);

struct AsymmetryProfile {
    double alpha;             ///< degree of asymmetry; +inf for a single-cluster budget
    bool is_asymmetric;       ///< alpha positive beyond the identical-row tolerance
    std::size_t pair_p;       ///< 0-based closest row pair, lexicographic on ties
    std::size_t pair_q;       ///< kNoPair when rows < 2
    double ball_radius;       ///< alpha / 4
};

/// Degree of asymmetry from pairwise row distances: alpha is the minimum of
/// sqrt(2)*||z_p - z_q|| over all row pairs. Works for soft and hard input.
inline AsymmetryProfile alpha_general(const Partition& z) {
    const std::size_t ell = z.rows(), m = z.cols();
    if (ell < 2) {
        // No non-identity permutation exists: min over the empty set.
        double inf = std::numeric_limits<double>::infinity();
        return AsymmetryProfile{inf, true, kNoPair, kNoPair, inf};
    }
    double min_sq = std::numeric_limits<double>::infinity();
    std::size_t best_p = kNoPair, best_q = kNoPair;
    for (std::size_t p = 0; p + 1 < ell; ++p) {
        auto zp = z.row(p);
        for (std::size_t q = p + 1; q < ell; ++q) {
            auto zq = z.row(q);
            double s = 0.0;
            for (std::size_t j = 0; j < m; ++j) {
                double d = zp[j] - zq[j];
                s += d * d;
            }
            if (s < min_sq) {
                min_sq = s;
                best_p = p;
                best_q = q;
            }
        }
    }
    double alpha = std::sqrt(2.0 * min_sq);
    bool asym = min_sq > kIdenticalRowTol * kIdenticalRowTol;
    return AsymmetryProfile{alpha, asym, best_p, best_q, alpha / 4.0};
}

/// Hard-partition fast path: alpha = sqrt(2 (m1 + m2)) with m1 <= m2 the two
/// smallest cluster sizes (empty clusters count as size 0). Agrees with
/// alpha_general bit for bit, since both take the square root of the same
/// integer.
inline double alpha_hard(const Partition& z) {
    if (!z.is_hard()) throw std::invalid_argument("alpha_hard: partition is not hard");
    if (z.rows() < 2) return std::numeric_limits<double>::infinity();
    std::vector<double> sizes = cluster_sizes(z);
    double m1 = std::numeric_limits<double>::infinity(), m2 = m1;
    for (double s : sizes) {
        if (s < m1) {
            m2 = m1;
            m1 = s;
        } else if (s < m2) {
            m2 = s;
        }
    }
    return std::sqrt(2.0 * (m1 + m2));
}

/// alpha via the cheapest applicable route.
inline double alpha_of(const Partition& z) {
    return z.is_hard() ? alpha_hard(z) : alpha_general(z).alpha;
}

/// Range of the degree of asymmetry over asymmetric hard partitions with m
/// points and cluster budget ell: sqrt(2) <= alpha <= 2 sqrt(ceil(m / ell)).
inline std::pair<double, double> alpha_bounds(std::size_t m, std::size_t ell) {
    if (ell < 1 || ell > m) throw std::invalid_argument("alpha_bounds: need 1 <= ell <= m");
    std::size_t ceil_ratio = (m + ell - 1) / ell;
    return {std::sqrt(2.0), 2.0 * std::sqrt(static_cast<double>(ceil_ratio))};
}

/// Membership of `probe` in the asymmetry ball of `center`:
/// delta(center, probe) <= alpha(center) / 4. The displayed inequality is
/// inclusive; `strict_interior` switches to the open condition used by the
/// uniqueness statement.
inline bool in_asymmetry_ball(const Partition& center, const Partition& probe,
                              bool strict_interior = false) {
    if (!center.same_shape(probe))
        throw std::invalid_argument("in_asymmetry_ball: dimension mismatch");
    double radius = alpha_of(center) / 4.0;
    double d = delta(center, probe);
    return strict_interior ? d < radius : d <= radius;
}

}  // namespace porbit
