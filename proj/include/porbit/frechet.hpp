// Empirical Frechet functions over partition samples and their minimizers.
//
// The mean solver alternates two exact minimizations: align every sample
// member onto the current candidate, then replace the candidate by the
// entrywise average of the aligned representations. Every mean
// representation is such an average (of optimally positioned members), so
// the global minimum equals the best value over all alignment tuples; the
// exhaustive oracle below enumerates those tuples outright on tiny inputs.

#pragma once

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "porbit/asymmetry.hpp"
#include "porbit/ensemble.hpp"
#include "porbit/errors.hpp"
#include "porbit/metric.hpp"

namespace porbit {

/// Distance plugged into medoid / instability computations.
enum class SampleDistance {
    kDelta,         ///< the intrinsic metric
    kDeltaSquared,  ///< squared metric (the Frechet function proper)
    kIndicator,     ///< 1 - [probe inside the reference's asymmetry ball]
};

/// Empirical Frechet function F_n(Z) = (1/n) sum delta(X_i, Z)^2.
inline double frechet_value(const EnsembleSample& sample, const Partition& z) {
    if (z.rows() != sample.ell() || z.cols() != sample.points())
        throw std::invalid_argument("frechet_value: dimension mismatch");
    double total = 0.0;
    for (const Partition& x : sample) total += delta_squared(x, z);
    return total / static_cast<double>(sample.size());
}

namespace detail {

/// n x n matrix of pairwise intrinsic distances (diagonal zero).
inline std::vector<double> pairwise_delta_matrix(const EnsembleSample& sample) {
    const std::size_t n = sample.size();
    std::vector<double> d(n * n, 0.0);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            double v = delta(sample[i], sample[j]);
            d[i * n + j] = v;
            d[j * n + i] = v;
        }
    return d;
}

/// Ball-membership counts: count[i] = #{j : delta(X_i, X_j) <= alpha_i / 4}.
inline std::vector<std::size_t> ball_counts(const EnsembleSample& sample,
                                            const std::vector<double>& dist) {
    const std::size_t n = sample.size();
    std::vector<std::size_t> count(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
        double radius = alpha_of(sample[i]) / 4.0;
        for (std::size_t j = 0; j < n; ++j)
            if (dist[i * n + j] <= radius) ++count[i];
    }
    return count;
}

/// Per-member Frechet values under the chosen distance.
inline std::vector<double> member_frechet_values(const EnsembleSample& sample,
                                                 SampleDistance distance,
                                                 const std::vector<double>& dist) {
    const std::size_t n = sample.size();
    std::vector<double> f(n, 0.0);
    if (distance == SampleDistance::kIndicator) {
        std::vector<std::size_t> count = ball_counts(sample, dist);
        for (std::size_t i = 0; i < n; ++i)
            f[i] = 1.0 - static_cast<double>(count[i]) / static_cast<double>(n);
        return f;
    }
    for (std::size_t i = 0; i < n; ++i) {
        double total = 0.0;
        for (std::size_t j = 0; j < n; ++j) {
            double v = dist[i * n + j];
            total += distance == SampleDistance::kDeltaSquared ? v * v : v;
        }
        f[i] = total / static_cast<double>(n);
    }
    return f;
}

inline Partition average_of(const std::vector<Partition>& reps) {
    const std::size_t ell = reps.front().rows(), m = reps.front().cols();
    std::vector<double> avg(ell * m, 0.0);
    for (const Partition& r : reps)
        for (std::size_t i = 0; i < avg.size(); ++i) avg[i] += r.data()[i];
    double inv = 1.0 / static_cast<double>(reps.size());
    for (double& e : avg) e *= inv;
    return Partition(ell, m, std::move(avg));
}

inline std::vector<std::vector<std::size_t>> all_permutations(std::size_t ell) {
    std::vector<std::size_t> img(ell);
    for (std::size_t i = 0; i < ell; ++i) img[i] = i;
    std::vector<std::vector<std::size_t>> perms;
    do {
        perms.push_back(img);
    } while (std::next_permutation(img.begin(), img.end()));
    return perms;
}

}  // namespace detail

/// Sample member minimizing the Frechet function among members, with its
/// value. Smallest index wins ties.
inline std::pair<std::size_t, double> medoid(const EnsembleSample& sample,
                                             SampleDistance distance) {
    std::vector<double> dist = detail::pairwise_delta_matrix(sample);
    std::vector<double> f = detail::member_frechet_values(sample, distance, dist);
    std::size_t best = 0;
    for (std::size_t i = 1; i < f.size(); ++i)
        if (f[i] < f[best]) best = i;
    return {best, f[best]};
}

/// Cluster instability: the full average of pairwise distances, diagonal
/// included (it contributes zero for every supported distance).
inline double instability(const EnsembleSample& sample, SampleDistance distance) {
    const std::size_t n = sample.size();
    std::vector<double> dist = detail::pairwise_delta_matrix(sample);
    if (distance == SampleDistance::kIndicator) {
        std::vector<std::size_t> count = detail::ball_counts(sample, dist);
        std::size_t total = 0;
        for (std::size_t c : count) total += c;
        return 1.0 - static_cast<double>(total) / static_cast<double>(n * n);
    }
    double total = 0.0;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            double v = dist[i * n + j];
            total += distance == SampleDistance::kDeltaSquared ? v * v : v;
        }
    return total / static_cast<double>(n * n);
}

struct MeanResult {
    Partition mean;
    double value;                           ///< Frechet value at `mean` (the variation when converged)
    std::size_t iterations;
    bool converged;
    std::vector<PermutationMap> alignments; ///< P_i with apply_permutation(X_i, P_i) optimally positioned
    std::vector<double> objective_trace;    ///< F_n at the start of each iteration, non-increasing
};

/// Alternating mean solver from an explicit starting partition.
/// Stops when the alignment tuple repeats (exact fixed point), when F drops
/// by less than `tol`, or after `max_iter` iterations (best iterate returned
/// with converged = false).
inline MeanResult mean_partition(const EnsembleSample& sample, const Partition& init,
                                 double tol = 1e-10, std::size_t max_iter = 100) {
    if (init.rows() != sample.ell() || init.cols() != sample.points())
        throw std::invalid_argument("mean_partition: init dimension mismatch");
    if (tol <= 0.0) throw std::invalid_argument("mean_partition: tol must be positive");
    const std::size_t n = sample.size();

    Partition current = init;
    std::vector<PermutationMap> alignments;
    std::vector<PermutationMap> prev_alignments;
    std::vector<double> trace;
    bool converged = false;
    std::size_t iter = 0;
    double prev_f = std::numeric_limits<double>::infinity();

    while (iter < max_iter) {
        ++iter;
        alignments.clear();
        std::vector<Partition> aligned;
        aligned.reserve(n);
        double f = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            Alignment a = optimal_alignment(current, sample[i]);
            f += a.distance * a.distance;
            aligned.push_back(apply_permutation(sample[i], a.permutation));
            alignments.push_back(std::move(a.permutation));
        }
        f /= static_cast<double>(n);
        trace.push_back(f);
        if (!prev_alignments.empty() && alignments == prev_alignments) {
            converged = true;  // alignment fixed point: the average reproduces `current`
            break;
        }
        if (prev_f - f < tol && iter > 1) {
            converged = true;
            break;
        }
        if (iter == max_iter) break;  // keep the evaluated iterate, not an unevaluated average
        current = detail::average_of(aligned);
        prev_f = f;
        prev_alignments = alignments;
    }
    return MeanResult{std::move(current), trace.back(), iter, converged,
                      std::move(alignments), std::move(trace)};
}

/// Mean solver with the default start: the medoid under squared distance.
inline MeanResult mean_partition(const EnsembleSample& sample, double tol = 1e-10,
                                 std::size_t max_iter = 100) {
    auto [idx, value] = medoid(sample, SampleDistance::kDeltaSquared);
    return mean_partition(sample, sample[idx], tol, max_iter);
}

/// Multi-start variant: one run from every sample member, best value kept
/// (smallest start index on ties).
inline MeanResult mean_partition_multistart(const EnsembleSample& sample, double tol = 1e-10,
                                            std::size_t max_iter = 100) {
    std::optional<MeanResult> best;
    for (const Partition& start : sample) {
        MeanResult r = mean_partition(sample, start, tol, max_iter);
        if (!best || r.value < best->value) best = std::move(r);
    }
    return *best;
}

struct MeanSet {
    std::vector<Partition> minimizers;  ///< pairwise delta > 1e-9 (orbit-distinct)
    double value;                       ///< the exact global minimum of F_n
};

/// Exhaustive global mean set for tiny samples. Enumerates alignment tuples
/// (the first member's alignment can stay fixed: a global row permutation
/// maps tuple averages within one orbit), takes the best fixed-tuple value,
/// and collects the orbit-distinct averages attaining it.
/// Guard: ell!^n must not exceed 10^6.
inline MeanSet exact_mean_set(const EnsembleSample& sample) {
    const std::size_t n = sample.size(), ell = sample.ell(), m = sample.points();
    double fact = 1.0;
    for (std::size_t i = 2; i <= ell; ++i) fact *= static_cast<double>(i);
    if (std::pow(fact, static_cast<double>(n)) > 1e6)
        throw GuardError("exact_mean_set: ell!^n exceeds 10^6 (ell=" + std::to_string(ell) +
                         ", n=" + std::to_string(n) + ")");

    const std::vector<std::vector<std::size_t>> perms = detail::all_permutations(ell);
    const std::size_t nperm = perms.size();
    std::vector<std::size_t> odo(n, 0);  // odo[0] stays 0 (identity)

    std::vector<double> avg(ell * m);
    auto tuple_value = [&]() {
        std::fill(avg.begin(), avg.end(), 0.0);
        for (std::size_t i = 0; i < n; ++i) {
            const Partition& x = sample[i];
            const std::vector<std::size_t>& sigma = perms[odo[i]];
            for (std::size_t p = 0; p < ell; ++p) {
                auto src = x.row(sigma[p]);
                double* dst = avg.data() + p * m;
                for (std::size_t j = 0; j < m; ++j) dst[j] += src[j];
            }
        }
        double inv = 1.0 / static_cast<double>(n);
        for (double& e : avg) e *= inv;
        double g = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            const Partition& x = sample[i];
            const std::vector<std::size_t>& sigma = perms[odo[i]];
            for (std::size_t p = 0; p < ell; ++p) {
                auto src = x.row(sigma[p]);
                const double* dst = avg.data() + p * m;
                for (std::size_t j = 0; j < m; ++j) {
                    double d = src[j] - dst[j];
                    g += d * d;
                }
            }
        }
        return g / static_cast<double>(n);
    };
    auto advance = [&]() {
        for (std::size_t i = 1; i < n; ++i) {
            if (++odo[i] < nperm) return true;
            odo[i] = 0;
        }
        return false;
    };

    // Pass 1: global minimum over tuples.
    double best = std::numeric_limits<double>::infinity();
    do {
        best = std::min(best, tuple_value());
    } while (advance());

    // Pass 2: collect and deduplicate the attaining averages.
    const double collect_tol = 1e-12 * (1.0 + best);
    std::vector<Partition> minimizers;
    std::fill(odo.begin(), odo.end(), 0);
    do {
        if (tuple_value() > best + collect_tol) continue;
        Partition candidate(ell, m, avg);
        bool duplicate = false;
        for (const Partition& kept : minimizers)
            if (delta(kept, candidate) <= 1e-9) {
                duplicate = true;
                break;
            }
        if (!duplicate) minimizers.push_back(std::move(candidate));
    } while (advance());

    return MeanSet{std::move(minimizers), best};
}

/// Exhaustive mean restricted to hard partitions (comparison tool only; the
/// Frechet function itself is defined over soft partitions).
/// Guard: ell^m must not exceed 10^6.
inline std::pair<Partition, double> exact_hard_mean(const EnsembleSample& sample) {
    const std::size_t ell = sample.ell(), m = sample.points();
    if (static_cast<double>(m) * std::log(static_cast<double>(ell)) > std::log(1e6))
        throw GuardError("exact_hard_mean: ell^m exceeds 10^6");
    std::vector<int> labels(m, 1);
    std::optional<Partition> best;
    double best_value = std::numeric_limits<double>::infinity();
    for (;;) {
        Partition candidate = Partition::from_labels(labels, ell);
        double v = frechet_value(sample, candidate);
        if (v < best_value) {
            best_value = v;
            best = std::move(candidate);
        }
        std::size_t j = 0;
        while (j < m && labels[j] == static_cast<int>(ell)) labels[j++] = 1;
        if (j == m) break;
        ++labels[j];
    }
    return {*best, best_value};
}

/// Similarity bound between two candidate means: (1/n) times the summed
/// distance between the members' optimally positioned representations,
/// restricted to the indices where those representations differ. Checks
/// delta(M, M') against the bound as a self-diagnostic.
inline double mean_gap_bound(const EnsembleSample& sample, const Partition& m1,
                             const Partition& m2) {
    if (!m1.same_shape(m2) || m1.rows() != sample.ell() || m1.cols() != sample.points())
        throw std::invalid_argument("mean_gap_bound: dimension mismatch");
    const std::size_t n = sample.size();
    double d = delta(m1, m2);
    double bound = 0.0;
    bool any_differ = false;
    for (std::size_t i = 0; i < n; ++i) {
        Partition a = apply_permutation(sample[i], optimal_alignment(m1, sample[i]).permutation);
        Partition b = apply_permutation(sample[i], optimal_alignment(m2, sample[i]).permutation);
        double gap = frobenius_distance(a, b);
        if (gap > 1e-12) {
            any_differ = true;
            bound += gap;
        }
    }
    bound /= static_cast<double>(n);
    if (!any_differ && d > 1e-9)
        throw std::logic_error("mean_gap_bound: distinct means with identical aligned members");
    if (d > bound + 1e-9)
        throw std::logic_error("mean_gap_bound: delta(M, M') exceeds the similarity bound");
    return bound;
}

}  // namespace porbit
