// Alpha-homogeneity of a sample: the largest fraction of members contained
// in any single member's asymmetry ball. It lower-bounds the (exhaustive)
// homogeneity H, the largest fraction of the sample whose sub-sample has a
// unique mean, and it doubles as a cluster-stability score: under the
// ball-indicator distance the Frechet value at a medoid is exactly 1 - h*.

#pragma once

#include <map>
#include <string>
#include <vector>

#include "porbit/frechet.hpp"

namespace porbit {

struct HomogeneityReport {
    std::size_t n;
    std::vector<double> alphas;         ///< degree of asymmetry per member
    std::vector<double> h;              ///< fraction of the sample in each member's ball
    double h_star;                      ///< max_i h[i]
    std::size_t best_center;            ///< smallest index attaining h_star (0-based)
    std::vector<std::size_t> outliers;  ///< members outside the best center's ball (0-based)
};

/// Alpha-homogeneity h* with per-member fractions and the outliers that
/// would have to be removed to land inside the best center's ball.
inline HomogeneityReport alpha_homogeneity(const EnsembleSample& sample) {
    const std::size_t n = sample.size();
    std::vector<double> dist = detail::pairwise_delta_matrix(sample);

    HomogeneityReport report;
    report.n = n;
    report.alphas.resize(n);
    report.h.resize(n);
    for (std::size_t i = 0; i < n; ++i) report.alphas[i] = alpha_of(sample[i]);
    for (std::size_t i = 0; i < n; ++i) {
        double radius = report.alphas[i] / 4.0;
        std::size_t count = 0;
        for (std::size_t j = 0; j < n; ++j)
            if (dist[i * n + j] <= radius) ++count;
        report.h[i] = static_cast<double>(count) / static_cast<double>(n);
    }
    report.best_center = 0;
    for (std::size_t i = 1; i < n; ++i)
        if (report.h[i] > report.h[report.best_center]) report.best_center = i;
    report.h_star = report.h[report.best_center];

    double best_radius = report.alphas[report.best_center] / 4.0;
    for (std::size_t j = 0; j < n; ++j)
        if (dist[report.best_center * n + j] > best_radius) report.outliers.push_back(j);
    return report;
}

/// Exact homogeneity H by subset enumeration: the largest fraction |S|/n over
/// index subsets whose sub-sample has a singleton mean set. Subsets are
/// visited in decreasing size, lexicographically within a size, with early
/// exit on the first success. Guards: n <= 6 plus the mean-set oracle's own
/// ell!^|S| budget.
inline double exact_homogeneity(const EnsembleSample& sample) {
    const std::size_t n = sample.size();
    if (n > 6) throw GuardError("exact_homogeneity: limited to n <= 6, got n=" + std::to_string(n));
    for (std::size_t size = n; size >= 1; --size) {
        // Lexicographic size-`size` index subsets.
        std::vector<std::size_t> idx(size);
        for (std::size_t i = 0; i < size; ++i) idx[i] = i;
        for (;;) {
            std::vector<Partition> sub;
            sub.reserve(size);
            for (std::size_t i : idx) sub.push_back(sample[i]);
            if (exact_mean_set(EnsembleSample(std::move(sub))).minimizers.size() == 1)
                return static_cast<double>(size) / static_cast<double>(n);
            // next combination
            std::size_t i = size;
            while (i > 0 && idx[i - 1] == n - size + (i - 1)) --i;
            if (i == 0) break;
            ++idx[i - 1];
            for (std::size_t j = i; j < size; ++j) idx[j] = idx[j - 1] + 1;
        }
    }
    return 1.0 / static_cast<double>(n);  // unreachable: singletons always succeed
}

struct StabilityProfile {
    std::vector<int> ks;
    std::vector<double> h_star_k;
    std::vector<double> instability_k;     ///< I_{n,k} under the metric delta
    std::vector<double> frechet_medoid_k;  ///< medoid Frechet value, indicator distance
    int selected_ell;                      ///< argmax_k h*_k, smallest k on ties
};

/// Model-selection sweep: per-k homogeneity, instability, and the medoid
/// Frechet value under the indicator distance (algebraically 1 - h*_k; the
/// two columns are computed independently).
inline StabilityProfile select_clusters(const std::map<int, EnsembleSample>& samples_by_k) {
    if (samples_by_k.empty())
        throw std::invalid_argument("select_clusters: need at least one k");
    std::size_t points = samples_by_k.begin()->second.points();
    StabilityProfile profile;
    for (const auto& [k, sample] : samples_by_k) {
        if (sample.points() != points)
            throw std::invalid_argument("select_clusters: samples disagree on point count m");
        std::vector<double> dist = detail::pairwise_delta_matrix(sample);
        const std::size_t n = sample.size();

        std::vector<std::size_t> count = detail::ball_counts(sample, dist);
        std::size_t best = 0;
        for (std::size_t i = 1; i < n; ++i)
            if (count[i] > count[best]) best = i;
        double h_star = static_cast<double>(count[best]) / static_cast<double>(n);

        double inst = 0.0;
        for (double v : dist) inst += v;
        inst /= static_cast<double>(n * n);

        std::vector<double> f =
            detail::member_frechet_values(sample, SampleDistance::kIndicator, dist);
        double f_medoid = f[0];
        for (double v : f) f_medoid = std::min(f_medoid, v);

        profile.ks.push_back(k);
        profile.h_star_k.push_back(h_star);
        profile.instability_k.push_back(inst);
        profile.frechet_medoid_k.push_back(f_medoid);
    }
    std::size_t best = 0;
    for (std::size_t i = 1; i < profile.ks.size(); ++i)
        if (profile.h_star_k[i] > profile.h_star_k[best]) best = i;
    profile.selected_ell = profile.ks[best];
    return profile;
}

}  // namespace porbit
