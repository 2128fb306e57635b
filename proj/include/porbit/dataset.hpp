// Synthetic benchmark datasets and CSV ingestion.
//
// Generator families: UD (uniform on the unit square, scaled by sigma),
// G4 / G9 (Gaussians with covariance sigma^2 I at the unit-square vertices
// and at the {-1,0,1}^2 lattice), and U2 / U4 (interlocking U shapes built
// from the sine arc with Gaussian noise on the vertical coordinate; arc
// offsets are config fields with the defaults below).

#pragma once

#include <cctype>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <numbers>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "porbit/errors.hpp"
#include "porbit/rng.hpp"

namespace porbit {

struct Dataset {
    std::vector<double> points;  ///< m x d, row-major
    std::size_t m = 0;
    std::size_t d = 0;
    std::string name;
    std::string provenance;  ///< generator config echo or source file path

    double operator()(std::size_t i, std::size_t j) const { return points[i * d + j]; }
    const double* point(std::size_t i) const { return points.data() + i * d; }
};

enum class GeneratorKind { kUD, kG4, kG9, kU2, kU4 };

inline std::size_t component_count(GeneratorKind kind) {
    switch (kind) {
        case GeneratorKind::kUD: return 1;
        case GeneratorKind::kG4: return 4;
        case GeneratorKind::kG9: return 9;
        case GeneratorKind::kU2: return 2;
        case GeneratorKind::kU4: return 4;
    }
    throw std::invalid_argument("unknown generator kind");
}

inline std::string generator_kind_name(GeneratorKind kind) {
    switch (kind) {
        case GeneratorKind::kUD: return "UD";
        case GeneratorKind::kG4: return "G4";
        case GeneratorKind::kG9: return "G9";
        case GeneratorKind::kU2: return "U2";
        case GeneratorKind::kU4: return "U4";
    }
    throw std::invalid_argument("unknown generator kind");
}

inline GeneratorKind generator_kind_from_name(const std::string& name) {
    if (name == "UD") return GeneratorKind::kUD;
    if (name == "G4") return GeneratorKind::kG4;
    if (name == "G9") return GeneratorKind::kG9;
    if (name == "U2") return GeneratorKind::kU2;
    if (name == "U4") return GeneratorKind::kU4;
    throw std::invalid_argument("unknown generator kind: " + name);
}

struct GeneratorConfig {
    GeneratorKind kind = GeneratorKind::kG4;
    double sigma = 0.1;                    ///< noise level (UD: coordinate scale factor)
    std::size_t points_per_component = 50; ///< m_c; total m = components * m_c
    std::uint64_t seed = 0;
    // U-shape geometry (U2/U4 only). Defaults give two interlocking arcs per
    // pair and a second pair shifted right for U4.
    double u_shift_x = std::numbers::pi / 2.0;
    double u_shift_y = 1.0;
    double u_pair_offset = 2.0 * std::numbers::pi;

    std::size_t total_points() const { return component_count(kind) * points_per_component; }
};

/// Deterministic dataset for a config: every component draws from its own
/// derived stream and contributes exactly `points_per_component` points, laid
/// out component by component.
inline Dataset generate(const GeneratorConfig& config) {
    const std::size_t mc = config.points_per_component;
    if (mc == 0) throw std::invalid_argument("generate: points_per_component must be positive");
    const std::size_t comps = component_count(config.kind);
    if (config.sigma < 0.0) throw std::invalid_argument("generate: sigma must be nonnegative");

    Dataset data;
    data.m = comps * mc;
    data.d = 2;
    data.points.resize(data.m * 2);
    data.name = generator_kind_name(config.kind);
    {
        std::ostringstream prov;
        prov << data.name << "(sigma=" << config.sigma << ", m_c=" << mc
             << ", seed=" << config.seed << ")";
        data.provenance = prov.str();
    }

    SplitMix64 master(config.seed);
    auto emit = [&](std::size_t comp, std::size_t i, double x, double y) {
        data.points[(comp * mc + i) * 2] = x;
        data.points[(comp * mc + i) * 2 + 1] = y;
    };

    switch (config.kind) {
        case GeneratorKind::kUD: {
            SplitMix64 rng = master.split(0);
            for (std::size_t i = 0; i < mc; ++i) {
                double x = config.sigma * rng.uniform();
                double y = config.sigma * rng.uniform();
                emit(0, i, x, y);
            }
            break;
        }
        case GeneratorKind::kG4:
        case GeneratorKind::kG9: {
            std::vector<std::pair<double, double>> means;
            if (config.kind == GeneratorKind::kG4)
                means = {{0.0, 0.0}, {1.0, 0.0}, {0.0, 1.0}, {1.0, 1.0}};
            else
                for (int x = -1; x <= 1; ++x)
                    for (int y = -1; y <= 1; ++y) means.emplace_back(x, y);
            for (std::size_t c = 0; c < comps; ++c) {
                SplitMix64 rng = master.split(c);
                for (std::size_t i = 0; i < mc; ++i)
                    emit(c, i, rng.normal(means[c].first, config.sigma),
                         rng.normal(means[c].second, config.sigma));
            }
            break;
        }
        case GeneratorKind::kU2:
        case GeneratorKind::kU4: {
            const double pi = std::numbers::pi;
            for (std::size_t c = 0; c < comps; ++c) {
                SplitMix64 rng = master.split(c);
                bool lower = (c % 2 == 1);  // the flipped, shifted arc
                double xoff = (c / 2 == 1) ? config.u_pair_offset : 0.0;
                for (std::size_t i = 0; i < mc; ++i) {
                    double t = rng.uniform(0.0, pi);
                    double x = lower ? t + config.u_shift_x : t;
                    double y = lower ? -std::sin(t) + config.u_shift_y : std::sin(t);
                    emit(c, i, x + xoff, y + rng.normal(0.0, config.sigma));
                }
            }
            break;
        }
    }
    return data;
}

/// Plain key-value form of a generator config, one `key = value` per line.
/// Keys: kind, sigma, m_c, seed, and the U-shape offsets u_shift_x,
/// u_shift_y, u_pair_offset. Unknown keys are rejected; omitted keys keep
/// their defaults.
inline std::string generator_config_to_text(const GeneratorConfig& config) {
    std::ostringstream out;
    out << "kind = " << generator_kind_name(config.kind) << "\n";
    out << "sigma = " << config.sigma << "\n";
    out << "m_c = " << config.points_per_component << "\n";
    out << "seed = " << config.seed << "\n";
    out << "u_shift_x = " << config.u_shift_x << "\n";
    out << "u_shift_y = " << config.u_shift_y << "\n";
    out << "u_pair_offset = " << config.u_pair_offset << "\n";
    return out.str();
}

inline GeneratorConfig generator_config_from_text(const std::string& text) {
    GeneratorConfig config;
    std::istringstream in(text);
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        std::size_t hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        std::size_t eq = line.find('=');
        bool blank = line.find_first_not_of(" \t") == std::string::npos;
        if (blank) continue;
        if (eq == std::string::npos)
            throw ParseError("config line " + std::to_string(line_no) + ": expected key = value");
        auto trim = [](std::string s) {
            std::size_t a = s.find_first_not_of(" \t");
            std::size_t b = s.find_last_not_of(" \t");
            return a == std::string::npos ? std::string() : s.substr(a, b - a + 1);
        };
        std::string key = trim(line.substr(0, eq));
        std::string value = trim(line.substr(eq + 1));
        if (value.empty())
            throw ParseError("config line " + std::to_string(line_no) + ": empty value");
        try {
            if (key == "kind") {
                config.kind = generator_kind_from_name(value);
            } else if (key == "sigma") {
                config.sigma = std::stod(value);
            } else if (key == "m_c") {
                config.points_per_component = std::stoul(value);
            } else if (key == "seed") {
                config.seed = std::stoull(value);
            } else if (key == "u_shift_x") {
                config.u_shift_x = std::stod(value);
            } else if (key == "u_shift_y") {
                config.u_shift_y = std::stod(value);
            } else if (key == "u_pair_offset") {
                config.u_pair_offset = std::stod(value);
            } else {
                throw ParseError("config line " + std::to_string(line_no) + ": unknown key '" +
                                 key + "'");
            }
        } catch (const ParseError&) {
            throw;
        } catch (const std::exception&) {
            throw ParseError("config line " + std::to_string(line_no) + ": bad value '" + value +
                             "' for key '" + key + "'");
        }
    }
    return config;
}

struct CsvOptions {
    bool has_header = false;
    std::optional<std::size_t> drop_column;  ///< 0-based index removed before parsing
    bool standardize = false;                ///< z-score each remaining column
};

namespace detail {

inline std::vector<std::string> split_csv_line(const std::string& line) {
    std::vector<std::string> fields;
    std::string cur;
    for (char ch : line) {
        if (ch == ',') {
            fields.push_back(cur);
            cur.clear();
        } else {
            cur.push_back(ch);
        }
    }
    fields.push_back(cur);
    for (std::string& f : fields) {
        std::size_t a = 0, b = f.size();
        while (a < b && std::isspace(static_cast<unsigned char>(f[a]))) ++a;
        while (b > a && std::isspace(static_cast<unsigned char>(f[b - 1]))) --b;
        f = f.substr(a, b - a);
    }
    return fields;
}

inline double parse_cell(const std::string& cell, std::size_t line_no, std::size_t col) {
    std::size_t consumed = 0;
    double value = 0.0;
    try {
        value = std::stod(cell, &consumed);
    } catch (const std::exception&) {
        consumed = 0;
    }
    if (consumed != cell.size() || cell.empty())
        throw ParseError("line " + std::to_string(line_no) + ", column " + std::to_string(col + 1) +
                         ": non-numeric cell '" + cell + "'");
    return value;
}

}  // namespace detail

/// Numeric table ingestion. Rows are points; an optional column (labels,
/// ids) can be dropped before parsing; every remaining cell must be numeric.
inline Dataset load_csv(const std::string& path, const CsvOptions& options = {}) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open file: " + path);
    std::vector<std::vector<double>> rows;
    std::string line;
    std::size_t line_no = 0;
    bool skipped_header = false;
    std::size_t width = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        if (line[0] == '#') continue;
        if (options.has_header && !skipped_header) {
            skipped_header = true;
            continue;
        }
        std::vector<std::string> fields = detail::split_csv_line(line);
        if (options.drop_column) {
            if (*options.drop_column >= fields.size())
                throw ParseError("line " + std::to_string(line_no) + ": drop column " +
                                 std::to_string(*options.drop_column) + " out of range");
            fields.erase(fields.begin() + static_cast<std::ptrdiff_t>(*options.drop_column));
        }
        if (fields.empty()) throw ParseError("line " + std::to_string(line_no) + ": no columns left");
        if (width == 0) width = fields.size();
        if (fields.size() != width)
            throw ParseError("line " + std::to_string(line_no) + ": expected " +
                             std::to_string(width) + " columns, got " +
                             std::to_string(fields.size()));
        std::vector<double> row(width);
        for (std::size_t c = 0; c < width; ++c) {
            row[c] = detail::parse_cell(fields[c], line_no, c);
            if (!std::isfinite(row[c]))
                throw ParseError("line " + std::to_string(line_no) + ": non-finite value");
        }
        rows.push_back(std::move(row));
    }
    if (rows.empty()) throw ParseError("no data rows in file: " + path);

    Dataset data;
    data.m = rows.size();
    data.d = width;
    data.points.reserve(data.m * width);
    for (const auto& row : rows)
        data.points.insert(data.points.end(), row.begin(), row.end());
    data.name = path;
    data.provenance = path;

    if (options.standardize) {
        for (std::size_t c = 0; c < data.d; ++c) {
            double mean = 0.0;
            for (std::size_t i = 0; i < data.m; ++i) mean += data(i, c);
            mean /= static_cast<double>(data.m);
            double var = 0.0;
            for (std::size_t i = 0; i < data.m; ++i) {
                double d0 = data(i, c) - mean;
                var += d0 * d0;
            }
            var /= static_cast<double>(data.m);
            double sd = std::sqrt(var);
            for (std::size_t i = 0; i < data.m; ++i) {
                double centered = data(i, c) - mean;
                data.points[i * data.d + c] = sd > 0.0 ? centered / sd : 0.0;
            }
        }
    }
    return data;
}

}  // namespace porbit
