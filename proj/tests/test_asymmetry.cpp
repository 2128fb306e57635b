#include <catch2/catch_amalgamated.hpp>

#include "porbit/asymmetry.hpp"

#include "oracles.hpp"

using namespace porbit;

TEST_CASE("identical rows make a symmetric partition") {
    Partition z(2, 2, {0.5, 0.5, 0.5, 0.5});
    AsymmetryProfile p = alpha_general(z);
    REQUIRE(p.alpha == 0.0);
    REQUIRE_FALSE(p.is_asymmetric);
    REQUIRE(p.ball_radius == 0.0);
    REQUIRE(p.pair_p == 0);
    REQUIRE(p.pair_q == 1);
}

TEST_CASE("hard example: cluster sizes {2,3} give alpha sqrt(10)") {
    Partition z = Partition::from_labels({1, 1, 2, 2, 2}, 2);
    AsymmetryProfile p = alpha_general(z);
    REQUIRE(p.alpha == Catch::Approx(std::sqrt(10.0)).margin(1e-14));
    REQUIRE(p.is_asymmetric);
    REQUIRE(alpha_hard(z) == p.alpha);  // exact: both are sqrt of the same integer
    REQUIRE(p.ball_radius == p.alpha / 4.0);
}

TEST_CASE("alpha_hard rejects soft partitions") {
    Partition soft(2, 2, {0.5, 1.0, 0.5, 0.0});
    REQUIRE_THROWS_AS(alpha_hard(soft), std::invalid_argument);
}

TEST_CASE("empty-cluster corollaries") {
    // two empty clusters -> symmetric
    Partition two_empty = Partition::from_labels({1, 1, 1}, 3);
    REQUIRE(alpha_hard(two_empty) == 0.0);
    REQUIRE_FALSE(alpha_general(two_empty).is_asymmetric);
    // one empty cluster, others nonempty -> asymmetric with alpha = sqrt(2 m2)
    Partition one_empty = Partition::from_labels({1, 1, 2, 2, 2}, 3);
    REQUIRE(alpha_hard(one_empty) == Catch::Approx(std::sqrt(2.0 * 2.0)).margin(1e-14));
    REQUIRE(alpha_general(one_empty).is_asymmetric);
}

TEST_CASE("alpha_general equals alpha_hard exactly on random hard partitions") {
    SplitMix64 rng(211);
    for (int trial = 0; trial < 200; ++trial) {
        std::size_t ell = 2 + rng.below(4), m = ell + rng.below(10);
        Partition z = oracles::random_hard_partition(rng, ell, m);
        REQUIRE(alpha_general(z).alpha == alpha_hard(z));
    }
}

TEST_CASE("alpha matches the full enumeration and its transposition restriction") {
    SplitMix64 rng(223);
    for (int trial = 0; trial < 100; ++trial) {
        std::size_t ell = 2 + rng.below(4), m = ell + rng.below(6);
        Partition z = oracles::random_partition(rng, ell, m);
        double a = alpha_general(z).alpha;
        REQUIRE(a == Catch::Approx(oracles::brute_alpha(z)).margin(1e-12));
        REQUIRE(a == Catch::Approx(oracles::brute_alpha_transpositions(z)).margin(1e-12));
    }
}

TEST_CASE("alpha is orbit invariant") {
    SplitMix64 rng(227);
    for (int trial = 0; trial < 50; ++trial) {
        std::size_t ell = 2 + rng.below(4), m = ell + rng.below(6);
        Partition z = oracles::random_partition(rng, ell, m);
        Partition pz = apply_permutation(z, oracles::random_permutation(rng, ell));
        REQUIRE(alpha_general(pz).alpha == Catch::Approx(alpha_general(z).alpha).margin(1e-12));
    }
}

TEST_CASE("asymmetric iff rows pairwise distinct") {
    SplitMix64 rng(229);
    for (int trial = 0; trial < 100; ++trial) {
        std::size_t ell = 2 + rng.below(3), m = ell + rng.below(5);
        Partition z = rng.uniform() < 0.7 ? oracles::random_partition(rng, ell, m)
                                          : Partition::from_labels(
                                                std::vector<int>(m, 1), ell);  // forced duplicates
        bool distinct = true;
        for (std::size_t p = 0; p + 1 < ell && distinct; ++p)
            for (std::size_t q = p + 1; q < ell && distinct; ++q) {
                double s = 0.0;
                for (std::size_t j = 0; j < m; ++j) {
                    double d = z(p, j) - z(q, j);
                    s += d * d;
                }
                if (std::sqrt(s) <= 1e-12) distinct = false;
            }
        REQUIRE(alpha_general(z).is_asymmetric == distinct);
    }
}

TEST_CASE("alpha_bounds examples and property") {
    auto [lo1, hi1] = alpha_bounds(100, 4);
    REQUIRE(lo1 == Catch::Approx(std::sqrt(2.0)));
    REQUIRE(hi1 == Catch::Approx(10.0));
    auto [lo2, hi2] = alpha_bounds(5, 2);
    REQUIRE(hi2 == Catch::Approx(2.0 * std::sqrt(3.0)));
    REQUIRE_THROWS_AS(alpha_bounds(2, 3), std::invalid_argument);

    SplitMix64 rng(233);
    for (int trial = 0; trial < 200; ++trial) {
        std::size_t ell = 2 + rng.below(4), m = ell + rng.below(12);
        Partition z = oracles::random_hard_partition(rng, ell, m);
        double a = alpha_hard(z);
        if (a == 0.0) continue;  // symmetric: bounds only claimed for asymmetric
        auto [lo, hi] = alpha_bounds(m, ell);
        REQUIRE(a >= lo - 1e-12);
        REQUIRE(a <= hi + 1e-12);
    }
}

TEST_CASE("ball membership follows delta <= alpha/4") {
    Partition center = Partition::from_labels({1, 1, 2, 2, 2}, 2);
    Partition probe = Partition::from_labels({1, 1, 1, 2, 2}, 2);
    REQUIRE(in_asymmetry_ball(center, center));
    REQUIRE_FALSE(in_asymmetry_ball(center, probe));  // sqrt(2) > sqrt(10)/4

    // symmetric center: the ball degenerates to the center's orbit
    Partition sym(2, 2, {0.5, 0.5, 0.5, 0.5});
    Partition other = Partition::from_labels({1, 2}, 2);
    REQUIRE(in_asymmetry_ball(sym, sym));
    REQUIRE_FALSE(in_asymmetry_ball(sym, other));
    // strict interior excludes the boundary (the center itself when alpha=0)
    REQUIRE_FALSE(in_asymmetry_ball(sym, sym, /*strict_interior=*/true));

    REQUIRE_THROWS_AS(in_asymmetry_ball(center, other), std::invalid_argument);
}

TEST_CASE("single-cluster budget: every probe is inside") {
    Partition center = Partition::from_labels({1, 1, 1}, 1);
    AsymmetryProfile p = alpha_general(center);
    REQUIRE(std::isinf(p.alpha));
    REQUIRE(p.is_asymmetric);
    REQUIRE(in_asymmetry_ball(center, center));
}
