// Lloyd's k-means over a Dataset, producing hard Partitions with exactly k
// rows. Clusters that lose all their points stay as empty (all-zero) rows;
// the partition space explicitly admits them and the asymmetry theory
// depends on their sizes. Ensemble diversity comes entirely from the random
// initialization: k-means++ (default) or Forgy seeding.

#pragma once

#include <algorithm>
#include <cstdint>
#include <string>
#include <vector>

#include "porbit/dataset.hpp"
#include "porbit/ensemble.hpp"
#include "porbit/partition.hpp"
#include "porbit/rng.hpp"

namespace porbit {

enum class KMeansInit {
    kPlusPlus,  ///< distance-proportional seeding
    kForgy,     ///< k distinct data points, uniformly without replacement
};

struct KMeansConfig {
    std::size_t k = 2;
    std::size_t max_iter = 100;
    std::uint64_t seed = 0;
    KMeansInit init = KMeansInit::kPlusPlus;
};

/// Per-iteration observability for tests (within-cluster sum of squares).
struct KMeansTrace {
    std::vector<double> wcss;
    std::size_t iterations = 0;
};

namespace detail {

inline double sq_dist(const double* a, const double* b, std::size_t d) {
    double s = 0.0;
    for (std::size_t j = 0; j < d; ++j) {
        double diff = a[j] - b[j];
        s += diff * diff;
    }
    return s;
}

/// Forgy seeding: walk a shuffled index order, taking points whose
/// coordinates differ from every centroid chosen so far; if the data has
/// fewer than k distinct locations, the remainder is filled from the front
/// of the order (duplicate centroids then simply go empty on the first
/// assignment).
inline std::vector<double> forgy_centroids(const Dataset& data, std::size_t k, SplitMix64& rng) {
    const std::size_t m = data.m, d = data.d;
    std::vector<std::size_t> order(m);
    for (std::size_t i = 0; i < m; ++i) order[i] = i;
    for (std::size_t i = m; i > 1; --i)
        std::swap(order[i - 1], order[rng.below(i)]);

    std::vector<double> centroids;
    centroids.reserve(k * d);
    auto is_new_location = [&](const double* p) {
        for (std::size_t c = 0; c * d < centroids.size(); ++c)
            if (sq_dist(p, centroids.data() + c * d, d) == 0.0) return false;
        return true;
    };
    for (std::size_t i = 0; i < m && centroids.size() < k * d; ++i) {
        const double* p = data.point(order[i]);
        if (is_new_location(p)) centroids.insert(centroids.end(), p, p + d);
    }
    for (std::size_t i = 0; centroids.size() < k * d; ++i) {
        const double* p = data.point(order[i % m]);
        centroids.insert(centroids.end(), p, p + d);
    }
    return centroids;
}

/// k-means++ seeding: first centroid uniform, each further centroid drawn
/// with probability proportional to the squared distance from the nearest
/// centroid chosen so far. When every remaining point coincides with a
/// centroid the rest is filled uniformly (those clusters go empty on the
/// first assignment).
inline std::vector<double> plus_plus_centroids(const Dataset& data, std::size_t k,
                                               SplitMix64& rng) {
    const std::size_t m = data.m, d = data.d;
    std::vector<double> centroids;
    centroids.reserve(k * d);
    const double* first = data.point(rng.below(m));
    centroids.insert(centroids.end(), first, first + d);

    std::vector<double> dist2(m);
    for (std::size_t i = 0; i < m; ++i) dist2[i] = sq_dist(data.point(i), first, d);
    while (centroids.size() < k * d) {
        double total = 0.0;
        for (double v : dist2) total += v;
        std::size_t chosen;
        if (total > 0.0) {
            double u = rng.uniform() * total;
            chosen = m - 1;
            double acc = 0.0;
            for (std::size_t i = 0; i < m; ++i) {
                acc += dist2[i];
                if (u < acc) {
                    chosen = i;
                    break;
                }
            }
        } else {
            chosen = rng.below(m);
        }
        const double* p = data.point(chosen);
        centroids.insert(centroids.end(), p, p + d);
        for (std::size_t i = 0; i < m; ++i)
            dist2[i] = std::min(dist2[i], sq_dist(data.point(i), p, d));
    }
    return centroids;
}

}  // namespace detail

/// Lloyd iterations until assignments stabilize or max_iter: assign each
/// point to the nearest centroid (smallest index on ties), then move every
/// nonempty cluster's centroid to its mean. Deterministic per seed.
inline Partition kmeans(const Dataset& data, const KMeansConfig& config,
                        KMeansTrace* trace = nullptr) {
    const std::size_t m = data.m, d = data.d, k = config.k;
    if (k == 0 || k > m)
        throw std::invalid_argument("kmeans: need 1 <= k <= m, got k=" + std::to_string(k) +
                                    ", m=" + std::to_string(m));
    SplitMix64 rng(config.seed);
    std::vector<double> centroids = config.init == KMeansInit::kForgy
                                        ? detail::forgy_centroids(data, k, rng)
                                        : detail::plus_plus_centroids(data, k, rng);

    std::vector<std::size_t> assign(m, 0), prev(m, 0);
    bool have_prev = false;
    std::size_t iterations = 0;
    if (trace) *trace = KMeansTrace{};

    for (std::size_t iter = 0; iter < config.max_iter; ++iter) {
        double wcss = 0.0;
        for (std::size_t i = 0; i < m; ++i) {
            const double* p = data.point(i);
            std::size_t best = 0;
            double best_d = detail::sq_dist(p, centroids.data(), d);
            for (std::size_t c = 1; c < k; ++c) {
                double dist = detail::sq_dist(p, centroids.data() + c * d, d);
                if (dist < best_d) {
                    best_d = dist;
                    best = c;
                }
            }
            assign[i] = best;
            wcss += best_d;
        }
        if (have_prev && assign == prev) break;
        ++iterations;
        if (trace) trace->wcss.push_back(wcss);
        prev = assign;
        have_prev = true;

        std::vector<double> sums(k * d, 0.0);
        std::vector<std::size_t> counts(k, 0);
        for (std::size_t i = 0; i < m; ++i) {
            const double* p = data.point(i);
            for (std::size_t j = 0; j < d; ++j) sums[assign[i] * d + j] += p[j];
            ++counts[assign[i]];
        }
        for (std::size_t c = 0; c < k; ++c) {
            if (counts[c] == 0) continue;  // empty cluster keeps its centroid
            for (std::size_t j = 0; j < d; ++j)
                centroids[c * d + j] = sums[c * d + j] / static_cast<double>(counts[c]);
        }
    }
    if (trace) trace->iterations = iterations;

    std::vector<int> labels(m);
    for (std::size_t i = 0; i < m; ++i) labels[i] = static_cast<int>(assign[i]) + 1;
    return Partition::from_labels(labels, k);
}

/// n independent k-means runs over the same dataset. Run r draws its seed
/// from stream r of the config seed; output order follows the run index.
inline EnsembleSample kmeans_ensemble(const Dataset& data, const KMeansConfig& config,
                                      std::size_t n) {
    if (n == 0) throw std::invalid_argument("kmeans_ensemble: need n >= 1");
    std::vector<Partition> members;
    members.reserve(n);
    for (std::size_t r = 0; r < n; ++r) {
        KMeansConfig run = config;
        run.seed = SplitMix64::derive(config.seed, r);
        members.push_back(kmeans(data, run));
    }
    return EnsembleSample(std::move(members));
}

}  // namespace porbit
