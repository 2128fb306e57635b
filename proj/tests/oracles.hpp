// Test-only oracles, deliberately independent of the assignment-based code
// paths they check: everything here minimizes by exhaustive enumeration of
// row permutations via apply_permutation + frobenius_distance.

#pragma once

#include <algorithm>
#include <limits>
#include <vector>

#include "porbit/partition.hpp"
#include "porbit/rng.hpp"

namespace oracles {

using porbit::Partition;
using porbit::PermutationMap;

inline std::vector<PermutationMap> all_permutation_maps(std::size_t n) {
    std::vector<std::size_t> img(n);
    for (std::size_t i = 0; i < n; ++i) img[i] = i;
    std::vector<PermutationMap> out;
    do {
        out.emplace_back(img);
    } while (std::next_permutation(img.begin(), img.end()));
    return out;
}

/// delta by full ell!-enumeration.
inline double brute_delta(const Partition& x, const Partition& y) {
    double best = std::numeric_limits<double>::infinity();
    for (const PermutationMap& p : all_permutation_maps(y.rows()))
        best = std::min(best, porbit::frobenius_distance(x, porbit::apply_permutation(y, p)));
    return best;
}

/// Degree of asymmetry by enumerating all non-identity permutations.
inline double brute_alpha(const Partition& z) {
    double best = std::numeric_limits<double>::infinity();
    for (const PermutationMap& p : all_permutation_maps(z.rows())) {
        if (p.is_identity()) continue;
        best = std::min(best, porbit::frobenius_distance(z, porbit::apply_permutation(z, p)));
    }
    return best;
}

/// Same minimum restricted to transpositions.
inline double brute_alpha_transpositions(const Partition& z) {
    double best = std::numeric_limits<double>::infinity();
    const std::size_t ell = z.rows();
    for (std::size_t p = 0; p + 1 < ell; ++p)
        for (std::size_t q = p + 1; q < ell; ++q) {
            std::vector<std::size_t> img(ell);
            for (std::size_t i = 0; i < ell; ++i) img[i] = i;
            std::swap(img[p], img[q]);
            best = std::min(best, porbit::frobenius_distance(
                                      z, porbit::apply_permutation(z, PermutationMap(img))));
        }
    return best;
}

inline Partition random_hard_partition(porbit::SplitMix64& rng, std::size_t ell, std::size_t m) {
    std::vector<int> labels(m);
    for (std::size_t j = 0; j < m; ++j)
        labels[j] = static_cast<int>(rng.below(ell)) + 1;
    return Partition::from_labels(labels, ell);
}

inline Partition random_soft_partition(porbit::SplitMix64& rng, std::size_t ell, std::size_t m) {
    std::vector<double> entries(ell * m);
    for (std::size_t j = 0; j < m; ++j) {
        double sum = 0.0;
        for (std::size_t r = 0; r < ell; ++r) {
            double v = rng.uniform() + 1e-6;
            entries[r * m + j] = v;
            sum += v;
        }
        for (std::size_t r = 0; r < ell; ++r) entries[r * m + j] /= sum;
    }
    return Partition(ell, m, std::move(entries));
}

inline Partition random_partition(porbit::SplitMix64& rng, std::size_t ell, std::size_t m) {
    return rng.uniform() < 0.5 ? random_hard_partition(rng, ell, m)
                               : random_soft_partition(rng, ell, m);
}

inline PermutationMap random_permutation(porbit::SplitMix64& rng, std::size_t n) {
    std::vector<std::size_t> img(n);
    for (std::size_t i = 0; i < n; ++i) img[i] = i;
    for (std::size_t i = n; i > 1; --i) std::swap(img[i - 1], img[rng.below(i)]);
    return PermutationMap(std::move(img));
}

}  // namespace oracles
