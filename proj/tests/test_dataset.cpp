#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <set>
#include <unistd.h>

#include "porbit/dataset.hpp"

using namespace porbit;

namespace {

struct TempFile {
    std::filesystem::path path;
    explicit TempFile(const std::string& contents) {
        static int counter = 0;
        path = std::filesystem::temp_directory_path() /
               ("porbit_test_" + std::to_string(::getpid()) + "_" + std::to_string(counter++) +
                ".csv");
        std::ofstream out(path);
        out << contents;
    }
    ~TempFile() { std::filesystem::remove(path); }
};

}  // namespace

TEST_CASE("G4 with zero noise degenerates to the unit-square vertices") {
    GeneratorConfig cfg;
    cfg.kind = GeneratorKind::kG4;
    cfg.sigma = 0.0;
    cfg.points_per_component = 1;
    Dataset d = generate(cfg);
    REQUIRE(d.m == 4);
    REQUIRE(d.d == 2);
    std::vector<std::pair<double, double>> expected{{0, 0}, {1, 0}, {0, 1}, {1, 1}};
    for (std::size_t i = 0; i < 4; ++i) {
        REQUIRE(d(i, 0) == expected[i].first);
        REQUIRE(d(i, 1) == expected[i].second);
    }
}

TEST_CASE("G9 with zero noise gives the 3x3 lattice") {
    GeneratorConfig cfg;
    cfg.kind = GeneratorKind::kG9;
    cfg.sigma = 0.0;
    cfg.points_per_component = 1;
    Dataset d = generate(cfg);
    REQUIRE(d.m == 9);
    std::set<std::pair<double, double>> got, want;
    for (std::size_t i = 0; i < 9; ++i) got.insert({d(i, 0), d(i, 1)});
    for (int x = -1; x <= 1; ++x)
        for (int y = -1; y <= 1; ++y) want.insert({double(x), double(y)});
    REQUIRE(got == want);
}

TEST_CASE("UD stays inside the scaled unit square") {
    GeneratorConfig cfg;
    cfg.kind = GeneratorKind::kUD;
    cfg.sigma = 1.0;
    cfg.points_per_component = 50;
    cfg.seed = 5;
    Dataset d = generate(cfg);
    REQUIRE(d.m == 50);
    for (std::size_t i = 0; i < d.m; ++i) {
        REQUIRE(d(i, 0) >= 0.0);
        REQUIRE(d(i, 0) < 1.0);
        REQUIRE(d(i, 1) >= 0.0);
        REQUIRE(d(i, 1) < 1.0);
    }
    cfg.sigma = 0.5;
    Dataset half = generate(cfg);
    for (std::size_t i = 0; i < half.m; ++i) REQUIRE(half(i, 0) <= 0.5);
}

TEST_CASE("generators are deterministic per seed and component-balanced") {
    GeneratorConfig cfg;
    cfg.kind = GeneratorKind::kG4;
    cfg.sigma = 0.3;
    cfg.points_per_component = 20;
    cfg.seed = 99;
    Dataset a = generate(cfg);
    Dataset b = generate(cfg);
    REQUIRE(a.points == b.points);  // bit-identical
    cfg.seed = 100;
    REQUIRE(generate(cfg).points != a.points);
    REQUIRE(a.m == 4 * 20);
}

TEST_CASE("U2 and U4 shapes occupy the expected x ranges") {
    GeneratorConfig cfg;
    cfg.kind = GeneratorKind::kU2;
    cfg.sigma = 0.0;
    cfg.points_per_component = 25;
    cfg.seed = 3;
    Dataset u2 = generate(cfg);
    REQUIRE(u2.m == 50);
    const double pi = std::numbers::pi;
    for (std::size_t i = 0; i < 25; ++i) {
        REQUIRE(u2(i, 0) >= 0.0);
        REQUIRE(u2(i, 0) <= pi);
        REQUIRE(u2(i, 1) == Catch::Approx(std::sin(u2(i, 0))).margin(1e-12));
    }
    for (std::size_t i = 25; i < 50; ++i) {
        REQUIRE(u2(i, 0) >= pi / 2);
        REQUIRE(u2(i, 0) <= 3 * pi / 2);
    }

    cfg.kind = GeneratorKind::kU4;
    Dataset u4 = generate(cfg);
    REQUIRE(u4.m == 100);
    for (std::size_t i = 50; i < 100; ++i) REQUIRE(u4(i, 0) >= 2 * pi);
}

TEST_CASE("invalid generator configs are rejected") {
    GeneratorConfig cfg;
    cfg.points_per_component = 0;
    REQUIRE_THROWS_AS(generate(cfg), std::invalid_argument);
    cfg.points_per_component = 10;
    cfg.sigma = -0.1;
    REQUIRE_THROWS_AS(generate(cfg), std::invalid_argument);
}

TEST_CASE("load_csv parses an iris-shaped table") {
    std::string contents = "sl,sw,pl,pw,species\n";
    for (int i = 0; i < 150; ++i)
        contents += "5.1,3.5,1.4,0.2,setosa\n";
    TempFile file(contents);
    CsvOptions opt;
    opt.has_header = true;
    opt.drop_column = 4;
    Dataset d = load_csv(file.path.string(), opt);
    REQUIRE(d.m == 150);
    REQUIRE(d.d == 4);
    REQUIRE(d(0, 0) == 5.1);
}

TEST_CASE("load_csv rejects empty and malformed input") {
    TempFile empty("");
    REQUIRE_THROWS_AS(load_csv(empty.path.string()), ParseError);

    TempFile bad("1.0,2.0\n1.0,zzz\n");
    try {
        load_csv(bad.path.string());
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        REQUIRE(std::string(e.what()).find("line 2") != std::string::npos);
    }

    TempFile ragged("1.0,2.0\n1.0\n");
    REQUIRE_THROWS_AS(load_csv(ragged.path.string()), ParseError);

    REQUIRE_THROWS_AS(load_csv("/nonexistent/porbit.csv"), ParseError);
}

TEST_CASE("generator config key-value round trip") {
    GeneratorConfig cfg;
    cfg.kind = GeneratorKind::kU4;
    cfg.sigma = 0.25;
    cfg.points_per_component = 33;
    cfg.seed = 987654321;
    cfg.u_shift_y = 1.5;
    GeneratorConfig back = generator_config_from_text(generator_config_to_text(cfg));
    REQUIRE(back.kind == cfg.kind);
    REQUIRE(back.sigma == cfg.sigma);
    REQUIRE(back.points_per_component == cfg.points_per_component);
    REQUIRE(back.seed == cfg.seed);
    REQUIRE(back.u_shift_y == cfg.u_shift_y);

    GeneratorConfig sparse = generator_config_from_text("kind = G9\n\n# comment\nsigma = 0.4\n");
    REQUIRE(sparse.kind == GeneratorKind::kG9);
    REQUIRE(sparse.sigma == 0.4);
    REQUIRE(sparse.points_per_component == 50);  // default kept

    REQUIRE_THROWS_AS(generator_config_from_text("bogus = 1\n"), ParseError);
    REQUIRE_THROWS_AS(generator_config_from_text("sigma 0.4\n"), ParseError);
    REQUIRE_THROWS_AS(generator_config_from_text("sigma = abc\n"), ParseError);
}

TEST_CASE("load_csv standardization z-scores each column") {
    TempFile file("0,10\n2,10\n4,10\n");
    CsvOptions opt;
    opt.standardize = true;
    Dataset d = load_csv(file.path.string(), opt);
    double mean0 = (d(0, 0) + d(1, 0) + d(2, 0)) / 3.0;
    REQUIRE(mean0 == Catch::Approx(0.0).margin(1e-12));
    REQUIRE(d(0, 1) == 0.0);  // zero-variance column maps to zeros
}
