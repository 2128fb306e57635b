#include <catch2/catch_amalgamated.hpp>

#include "porbit/metric.hpp"

#include "oracles.hpp"

using namespace porbit;

TEST_CASE("delta vanishes on the same orbit") {
    SplitMix64 rng(101);
    for (int trial = 0; trial < 30; ++trial) {
        std::size_t ell = 1 + rng.below(4);
        Partition x = oracles::random_partition(rng, ell, ell + rng.below(6));
        PermutationMap p = oracles::random_permutation(rng, ell);
        Partition y = apply_permutation(x, p);
        Alignment a = optimal_alignment(x, y);
        REQUIRE(a.distance == 0.0);
        REQUIRE(delta(x, y) == 0.0);
    }
}

TEST_CASE("worked 2x3 example: identity beats the swap") {
    Partition x = Partition::from_labels({1, 1, 2}, 2);
    Partition y = Partition::from_labels({1, 2, 2}, 2);
    Alignment a = optimal_alignment(x, y);
    REQUIRE(a.distance == Catch::Approx(std::sqrt(2.0)).margin(1e-14));
    REQUIRE(a.permutation.is_identity());
    REQUIRE(frobenius_distance(x, apply_permutation(y, PermutationMap({1, 0}))) ==
            Catch::Approx(2.0).margin(1e-14));
}

TEST_CASE("assignment solver matches the factorial oracle") {
    SplitMix64 rng(103);
    for (int trial = 0; trial < 300; ++trial) {
        std::size_t ell = 1 + rng.below(4), m = ell + rng.below(7);
        Partition x = oracles::random_partition(rng, ell, m);
        Partition y = oracles::random_partition(rng, ell, m);
        double fast = delta(x, y);
        double brute = oracles::brute_delta(x, y);
        REQUIRE(fast == Catch::Approx(brute).margin(1e-12));
        // the alignment realizes its reported distance
        Alignment a = optimal_alignment(x, y);
        REQUIRE(frobenius_distance(x, apply_permutation(y, a.permutation)) ==
                Catch::Approx(a.distance).margin(1e-12));
    }
}

TEST_CASE("metric axioms on random triples") {
    SplitMix64 rng(107);
    for (int trial = 0; trial < 300; ++trial) {
        std::size_t ell = 1 + rng.below(4), m = ell + rng.below(7);
        Partition x = oracles::random_partition(rng, ell, m);
        Partition y = oracles::random_partition(rng, ell, m);
        Partition z = oracles::random_partition(rng, ell, m);
        double dxy = delta(x, y), dyx = delta(y, x);
        REQUIRE(dxy == Catch::Approx(dyx).margin(1e-9));
        REQUIRE(delta(x, z) <= dxy + delta(y, z) + 1e-9);
        REQUIRE(delta(x, x) == 0.0);
    }
}

TEST_CASE("delta is orbit invariant") {
    SplitMix64 rng(109);
    for (int trial = 0; trial < 50; ++trial) {
        std::size_t ell = 2 + rng.below(3), m = ell + rng.below(6);
        Partition x = oracles::random_partition(rng, ell, m);
        Partition y = oracles::random_partition(rng, ell, m);
        Partition px = apply_permutation(x, oracles::random_permutation(rng, ell));
        Partition qy = apply_permutation(y, oracles::random_permutation(rng, ell));
        REQUIRE(delta(px, qy) == Catch::Approx(delta(x, y)).margin(1e-12));
    }
}

TEST_CASE("tied alignments break to the lexicographically smallest image") {
    // All rows identical: every permutation has cost zero.
    Partition x(3, 3, std::vector<double>(9, 1.0 / 3.0));
    Alignment a = optimal_alignment(x, x);
    REQUIRE(a.permutation.is_identity());

    // Two empty rows are interchangeable at equal cost.
    Partition y = Partition::from_labels({1, 1, 1}, 3);
    Alignment b = optimal_alignment(y, y);
    REQUIRE(b.permutation.is_identity());

    // Nontrivial tie: rows 0 and 1 of z are identical, so aligning z onto a
    // cyclic shift of itself has two zero-cost permutations, (1,2,0) and
    // (2,1,0); the lexicographically smaller one must win.
    Partition z(3, 3, {0.5, 0.5, 0.0, 0.5, 0.5, 0.0, 0.0, 0.0, 1.0});
    Partition shifted = apply_permutation(z, PermutationMap({2, 0, 1}));
    Alignment c = optimal_alignment(z, shifted);
    REQUIRE(c.distance == 0.0);
    REQUIRE(c.permutation.image() == std::vector<std::size_t>{1, 2, 0});
}

TEST_CASE("identity-optimal hard pairs: delta^2 is twice the disagreement count") {
    SplitMix64 rng(127);
    int seen = 0;
    for (int trial = 0; trial < 200; ++trial) {
        std::size_t ell = 2 + rng.below(3), m = ell + rng.below(8);
        Partition x = oracles::random_hard_partition(rng, ell, m);
        Partition y = oracles::random_hard_partition(rng, ell, m);
        if (!optimal_alignment(x, y).permutation.is_identity()) continue;
        ++seen;
        std::vector<int> lx = hard_labels(x), ly = hard_labels(y);
        int d = 0;
        for (std::size_t j = 0; j < m; ++j) d += (lx[j] != ly[j]);
        double d2 = delta_squared(x, y);
        REQUIRE(d2 == Catch::Approx(2.0 * d).margin(1e-12));
        REQUIRE(std::fmod(d2, 2.0) == Catch::Approx(0.0).margin(1e-12));
    }
    REQUIRE(seen > 50);
}

TEST_CASE("dimension mismatch is rejected") {
    Partition x = Partition::from_labels({1, 2}, 2);
    Partition y = Partition::from_labels({1, 2, 2}, 2);
    REQUIRE_THROWS_AS(delta(x, y), std::invalid_argument);
    REQUIRE_THROWS_AS(optimal_alignment(x, y), std::invalid_argument);
}

TEST_CASE("hard-partition fast path agrees with the enumeration oracle") {
    SplitMix64 rng(113);
    for (int trial = 0; trial < 50; ++trial) {
        std::size_t ell = 2 + rng.below(4), m = ell + rng.below(10);
        Partition x = oracles::random_hard_partition(rng, ell, m);
        Partition y = oracles::random_hard_partition(rng, ell, m);
        REQUIRE(delta(x, y) == Catch::Approx(oracles::brute_delta(x, y)).margin(1e-12));
    }
}
