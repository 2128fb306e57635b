// Text formats for partitions and reports.
//
// Partitions travel as dense CSV (ell rows x m columns, full precision) or,
// for hard partitions, as a single row of 1-based labels; both round-trip
// hard partitions bit-exactly. Reports serialize to JSON and to flat CSV
// with a leading schema comment line. All indices in serialized output are
// 1-based.

#pragma once

#include <cmath>
#include <cstdio>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

#include "porbit/asymmetry.hpp"
#include "porbit/dataset.hpp"
#include "porbit/frechet.hpp"
#include "porbit/homogeneity.hpp"
#include "porbit/partition.hpp"

namespace porbit {

/// Shortest decimal form that parses back to the identical double.
inline std::string format_double(double v) {
    if (std::isfinite(v) && v == std::floor(v) && std::abs(v) < 1e15) {
        char whole[32];
        std::snprintf(whole, sizeof whole, "%.0f", v);
        return whole;
    }
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    double back = 0.0;
    std::sscanf(buf, "%lf", &back);
    if (back == v) {
        // try to shorten
        for (int prec = 1; prec < 17; ++prec) {
            char s[32];
            std::snprintf(s, sizeof s, "%.*g", prec, v);
            double r = 0.0;
            std::sscanf(s, "%lf", &r);
            if (r == v) return s;
        }
    }
    return buf;
}

inline std::string partition_to_csv(const Partition& x) {
    std::string out;
    for (std::size_t r = 0; r < x.rows(); ++r) {
        for (std::size_t j = 0; j < x.cols(); ++j) {
            if (j) out.push_back(',');
            out += format_double(x(r, j));
        }
        out.push_back('\n');
    }
    return out;
}

inline Partition partition_from_csv(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    std::vector<double> entries;
    std::size_t rows = 0, cols = 0, line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line[0] == '#') continue;
        std::vector<std::string> fields = detail::split_csv_line(line);
        if (cols == 0) cols = fields.size();
        if (fields.size() != cols)
            throw ParseError("partition row " + std::to_string(line_no) + ": ragged row");
        for (std::size_t c = 0; c < fields.size(); ++c)
            entries.push_back(detail::parse_cell(fields[c], line_no, c));
        ++rows;
    }
    if (rows == 0) throw ParseError("partition: no rows");
    return Partition(rows, cols, std::move(entries));
}

/// Single row of 1-based labels (hard partitions only).
inline std::string labels_to_csv(const Partition& x) {
    std::vector<int> labels = hard_labels(x);
    std::string out;
    for (std::size_t j = 0; j < labels.size(); ++j) {
        if (j) out.push_back(',');
        out += std::to_string(labels[j]);
    }
    out.push_back('\n');
    return out;
}

inline std::vector<int> parse_label_row(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line[0] == '#') continue;
        std::vector<std::string> fields = detail::split_csv_line(line);
        std::vector<int> labels;
        labels.reserve(fields.size());
        for (std::size_t c = 0; c < fields.size(); ++c) {
            double v = detail::parse_cell(fields[c], 1, c);
            int lab = static_cast<int>(v);
            if (static_cast<double>(lab) != v || lab < 1)
                throw ParseError("label row: entry " + std::to_string(c + 1) +
                                 " is not a positive integer");
            labels.push_back(lab);
        }
        return labels;
    }
    throw ParseError("label row: empty input");
}

/// Label row -> hard partition; ell = 0 infers the budget as the largest label.
inline Partition labels_from_csv(const std::string& text, std::size_t ell = 0) {
    std::vector<int> labels = parse_label_row(text);
    if (ell == 0)
        for (int lab : labels) ell = std::max(ell, static_cast<std::size_t>(lab));
    return Partition::from_labels(labels, ell);
}

inline std::string dataset_to_csv(const Dataset& data) {
    std::string out;
    for (std::size_t i = 0; i < data.m; ++i) {
        for (std::size_t j = 0; j < data.d; ++j) {
            if (j) out.push_back(',');
            out += format_double(data(i, j));
        }
        out.push_back('\n');
    }
    return out;
}

// ---- JSON ----

inline nlohmann::json matrix_json(const Partition& x) {
    nlohmann::json rows = nlohmann::json::array();
    for (std::size_t r = 0; r < x.rows(); ++r) {
        nlohmann::json row = nlohmann::json::array();
        for (std::size_t j = 0; j < x.cols(); ++j) row.push_back(x(r, j));
        rows.push_back(std::move(row));
    }
    return rows;
}

inline nlohmann::json to_json(const AsymmetryProfile& p) {
    return nlohmann::json{{"alpha", p.alpha},
                          {"is_asymmetric", p.is_asymmetric},
                          {"pair_p", p.pair_p == kNoPair ? 0 : p.pair_p + 1},
                          {"pair_q", p.pair_q == kNoPair ? 0 : p.pair_q + 1},
                          {"ball_radius", p.ball_radius}};
}

inline nlohmann::json to_json(const HomogeneityReport& r) {
    nlohmann::json outliers = nlohmann::json::array();
    for (std::size_t j : r.outliers) outliers.push_back(j + 1);
    return nlohmann::json{{"n", r.n},
                          {"alphas", r.alphas},
                          {"h", r.h},
                          {"h_star", r.h_star},
                          {"best_center", r.best_center + 1},
                          {"outliers", std::move(outliers)}};
}

inline nlohmann::json to_json(const MeanResult& r) {
    nlohmann::json alignments = nlohmann::json::array();
    for (const PermutationMap& p : r.alignments) {
        nlohmann::json img = nlohmann::json::array();
        for (std::size_t q : p.image()) img.push_back(q + 1);
        alignments.push_back(std::move(img));
    }
    return nlohmann::json{{"mean", matrix_json(r.mean)},
                          {"value", r.value},
                          {"iterations", r.iterations},
                          {"converged", r.converged},
                          {"alignments", std::move(alignments)},
                          {"objective_trace", r.objective_trace}};
}

inline nlohmann::json to_json(const MeanSet& s) {
    nlohmann::json mins = nlohmann::json::array();
    for (const Partition& m : s.minimizers) mins.push_back(matrix_json(m));
    return nlohmann::json{{"value", s.value}, {"minimizers", std::move(mins)}};
}

inline nlohmann::json to_json(const StabilityProfile& p) {
    return nlohmann::json{{"ks", p.ks},
                          {"h_star_k", p.h_star_k},
                          {"instability_k", p.instability_k},
                          {"frechet_medoid_k", p.frechet_medoid_k},
                          {"selected_ell", p.selected_ell}};
}

// ---- flat CSV for reports ----

inline std::string homogeneity_report_csv(const HomogeneityReport& r) {
    std::string out =
        "# columns: member=1-based sample index, alpha=degree of asymmetry, "
        "h=fraction of sample in the member's asymmetry ball, "
        "is_outlier=1 if outside the best center's ball\n";
    out += "member,alpha,h,is_outlier\n";
    std::vector<char> outlier(r.n, 0);
    for (std::size_t j : r.outliers) outlier[j] = 1;
    for (std::size_t i = 0; i < r.n; ++i) {
        out += std::to_string(i + 1) + "," + format_double(r.alphas[i]) + "," +
               format_double(r.h[i]) + "," + (outlier[i] ? "1" : "0") + "\n";
    }
    return out;
}

inline std::string stability_profile_csv(const StabilityProfile& p) {
    std::string out =
        "# columns: k=cluster count, h_star=alpha-homogeneity, "
        "instability=mean pairwise delta, frechet_medoid=medoid Frechet value "
        "under the indicator distance (equals 1-h_star)\n";
    out += "k,h_star,instability,frechet_medoid\n";
    for (std::size_t i = 0; i < p.ks.size(); ++i)
        out += std::to_string(p.ks[i]) + "," + format_double(p.h_star_k[i]) + "," +
               format_double(p.instability_k[i]) + "," + format_double(p.frechet_medoid_k[i]) +
               "\n";
    return out;
}

}  // namespace porbit
