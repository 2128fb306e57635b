#include <catch2/catch_amalgamated.hpp>

#include "porbit/serialize.hpp"

#include "oracles.hpp"

using namespace porbit;

TEST_CASE("format_double round-trips exactly") {
    SplitMix64 rng(501);
    for (int i = 0; i < 200; ++i) {
        double v = (rng.uniform() - 0.5) * std::pow(10.0, double(rng.below(8)) - 4.0);
        REQUIRE(std::stod(format_double(v)) == v);
    }
    REQUIRE(format_double(0.5) == "0.5");
    REQUIRE(format_double(1.0) == "1");
}

TEST_CASE("dense CSV round-trips partitions bit-exactly") {
    SplitMix64 rng(503);
    for (int i = 0; i < 20; ++i) {
        std::size_t ell = 1 + rng.below(4), m = ell + rng.below(6);
        Partition p = oracles::random_partition(rng, ell, m);
        Partition back = partition_from_csv(partition_to_csv(p));
        REQUIRE(back.rows() == p.rows());
        REQUIRE(back.data() == p.data());
        REQUIRE(back.is_hard() == p.is_hard());
    }
}

TEST_CASE("label row round-trips hard partitions bit-exactly") {
    SplitMix64 rng(509);
    for (int i = 0; i < 20; ++i) {
        std::size_t ell = 1 + rng.below(5), m = ell + rng.below(8);
        Partition p = oracles::random_hard_partition(rng, ell, m);
        Partition back = labels_from_csv(labels_to_csv(p), ell);
        REQUIRE(back.data() == p.data());
    }
    REQUIRE_THROWS_AS(labels_to_csv(Partition(2, 2, {0.5, 1.0, 0.5, 0.0})),
                      std::invalid_argument);
    REQUIRE_THROWS_AS(labels_from_csv("1,0,2\n"), ParseError);
    REQUIRE_THROWS_AS(labels_from_csv("\n"), ParseError);
}

TEST_CASE("label budget inference takes the largest label") {
    Partition p = labels_from_csv("1,3,2,3\n");
    REQUIRE(p.rows() == 3);
    REQUIRE(hard_labels(p) == std::vector<int>{1, 3, 2, 3});
}

TEST_CASE("asymmetry profile JSON carries the pinned fields, 1-based") {
    AsymmetryProfile prof = alpha_general(Partition::from_labels({1, 1, 2, 2, 2}, 2));
    nlohmann::json j = to_json(prof);
    REQUIRE(j["alpha"].get<double>() == prof.alpha);
    REQUIRE(j["is_asymmetric"].get<bool>());
    REQUIRE(j["pair_p"].get<int>() == 1);
    REQUIRE(j["pair_q"].get<int>() == 2);
    REQUIRE(j["ball_radius"].get<double>() == prof.alpha / 4.0);
}

TEST_CASE("homogeneity report JSON and CSV agree on shape") {
    EnsembleSample s({Partition::from_labels({1, 1, 2, 2, 2}, 2),
                      Partition::from_labels({1, 1, 1, 2, 2}, 2)});
    HomogeneityReport r = alpha_homogeneity(s);
    nlohmann::json j = to_json(r);
    REQUIRE(j["n"].get<std::size_t>() == 2);
    REQUIRE(j["h_star"].get<double>() == 0.5);
    REQUIRE(j["best_center"].get<int>() == 1);              // 1-based
    REQUIRE(j["outliers"] == nlohmann::json::array({2}));   // 1-based

    std::string csv = homogeneity_report_csv(r);
    REQUIRE(csv.rfind("# columns:", 0) == 0);
    REQUIRE(std::count(csv.begin(), csv.end(), '\n') == 2 + 2);  // schema + header + rows
}

TEST_CASE("stability profile CSV has one row per k") {
    StabilityProfile p;
    p.ks = {2, 3};
    p.h_star_k = {0.5, 1.0};
    p.instability_k = {1.25, 0.0};
    p.frechet_medoid_k = {0.5, 0.0};
    p.selected_ell = 3;
    std::string csv = stability_profile_csv(p);
    REQUIRE(std::count(csv.begin(), csv.end(), '\n') == 2 + 2);
    nlohmann::json j = to_json(p);
    REQUIRE(j["selected_ell"].get<int>() == 3);
    REQUIRE(j["ks"].size() == 2);
}

TEST_CASE("mean set JSON lists all minimizers") {
    EnsembleSample s({Partition::from_labels({1, 1, 2, 2}, 2),
                      Partition::from_labels({1, 2, 1, 2}, 2)});
    MeanSet set = exact_mean_set(s);
    nlohmann::json j = to_json(set);
    REQUIRE(j["minimizers"].size() == set.minimizers.size());
    REQUIRE(j["value"].get<double>() == set.value);
}

TEST_CASE("mean result JSON carries alignments 1-based") {
    EnsembleSample s({Partition::from_labels({1, 1, 2}, 2),
                      Partition::from_labels({1, 2, 2}, 2)});
    MeanResult r = mean_partition(s);
    nlohmann::json j = to_json(r);
    REQUIRE(j["converged"].get<bool>());
    REQUIRE(j["alignments"].size() == 2);
    for (const auto& img : j["alignments"])
        for (const auto& q : img) REQUIRE(q.get<int>() >= 1);
    REQUIRE(j["value"].get<double>() == r.value);
}
