// porbit: partition orbit analysis from the command line.
//
// Subcommands: generate, cluster, homogeneity, mean, select, protocol.
// Exit codes: 0 ok, 1 computation guard exceeded, 2 input error.
// All file I/O lives here; the library underneath is pure computation.

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "porbit/porbit.hpp"
#include "porbit/svg.hpp"

namespace fs = std::filesystem;
using namespace porbit;

namespace {

void write_text(const fs::path& path, const std::string& contents) {
    if (path.has_parent_path()) fs::create_directories(path.parent_path());
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ParseError("cannot write file: " + path.string());
    out << contents;
}

std::string read_text(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open file: " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

/// Sample directory: every *.labels file is a 1-based label row, every *.csv
/// a dense membership matrix. Files are taken in filename order. The cluster
/// budget is --ell when given, otherwise the largest budget seen.
EnsembleSample load_sample_dir(const std::string& dir, std::size_t ell_override) {
    if (!fs::is_directory(dir)) throw ParseError("not a directory: " + dir);
    std::vector<fs::path> files;
    for (const auto& entry : fs::directory_iterator(dir)) {
        if (!entry.is_regular_file()) continue;
        std::string ext = entry.path().extension().string();
        if (ext == ".labels" || ext == ".csv") files.push_back(entry.path());
    }
    std::sort(files.begin(), files.end());
    if (files.empty()) throw ParseError("no .labels or .csv partition files in " + dir);

    std::vector<std::vector<int>> label_rows;
    std::vector<Partition> dense;
    std::vector<bool> is_dense;
    for (const fs::path& f : files) {
        if (f.extension() == ".labels") {
            label_rows.push_back(parse_label_row(read_text(f)));
            is_dense.push_back(false);
        } else {
            dense.push_back(partition_from_csv(read_text(f)));
            is_dense.push_back(true);
        }
    }
    std::size_t ell = ell_override;
    if (ell == 0) {
        for (const auto& row : label_rows)
            for (int lab : row) ell = std::max(ell, static_cast<std::size_t>(lab));
        for (const Partition& p : dense) ell = std::max(ell, p.rows());
    }
    std::vector<Partition> members;
    std::size_t li = 0, di = 0;
    for (bool d : is_dense) {
        if (d) {
            if (dense[di].rows() != ell)
                throw ParseError("dense partition has " + std::to_string(dense[di].rows()) +
                                 " rows, expected " + std::to_string(ell));
            members.push_back(std::move(dense[di++]));
        } else {
            members.push_back(Partition::from_labels(label_rows[li++], ell));
        }
    }
    return EnsembleSample(std::move(members));
}

struct DatasetFlags {
    std::string csv_path;
    std::string kind;
    std::string config_path;
    double sigma = -1.0;  // -1: keep the generator default
    std::size_t mc = 0;
    bool header = false;
    int drop_col = -1;
    bool standardize = false;

    void attach(CLI::App* cmd, bool generator_only = false) {
        if (!generator_only) {
            cmd->add_option("--data", csv_path, "dataset CSV file (one point per row)");
            cmd->add_flag("--header", header, "skip the first CSV line");
            cmd->add_option("--drop-col", drop_col, "0-based column to drop (labels/ids)");
            cmd->add_flag("--standardize", standardize, "z-score each column");
        }
        cmd->add_option("--kind", kind, "generator: UD, G4, G9, U2 or U4");
        cmd->add_option("--config", config_path, "generator config file (key = value lines)");
        cmd->add_option("--sigma", sigma, "generator noise level (UD: scale factor)");
        cmd->add_option("--mc", mc, "generator points per component");
    }

    /// `seed_explicit` makes the CLI --seed win over a seed in --config.
    DatasetSpec spec(std::uint64_t seed, bool seed_explicit = true) const {
        DatasetSpec out;
        bool generated = !kind.empty() || !config_path.empty();
        if (!csv_path.empty() && generated)
            throw ParseError("choose either --data or --kind/--config, not both");
        if (!csv_path.empty()) {
            out.csv_path = csv_path;
            out.csv_options.has_header = header;
            if (drop_col >= 0) out.csv_options.drop_column = static_cast<std::size_t>(drop_col);
            out.csv_options.standardize = standardize;
            return out;
        }
        if (!generated) throw ParseError("need a dataset: --data FILE, --kind KIND or --config FILE");
        GeneratorConfig gen;
        bool from_file = !config_path.empty();
        if (from_file) gen = generator_config_from_text(read_text(config_path));
        if (!kind.empty()) gen.kind = generator_kind_from_name(kind);
        if (sigma >= 0.0) gen.sigma = sigma;
        if (mc > 0) gen.points_per_component = mc;
        if (!from_file || seed_explicit) gen.seed = seed;
        out.generator = gen;
        return out;
    }
};

Dataset realize_dataset(const DatasetSpec& spec) {
    return spec.is_generated() ? generate(*spec.generator)
                               : load_csv(spec.csv_path, spec.csv_options);
}

std::string protocol_report_csv(const ExperimentReport& r) {
    std::string out = "# columns: " + r.sweep_name +
                      "=swept value, h_star_mean=average alpha-homogeneity over trials, "
                      "h_star_sd=sample standard deviation (0 when trials<2), "
                      "trial_i=per-trial h*\n";
    out += r.sweep_name + ",h_star_mean,h_star_sd";
    for (std::size_t t = 1; t <= r.trials; ++t) out += ",trial_" + std::to_string(t);
    out += "\n";
    for (const SweepRow& row : r.rows) {
        out += format_double(row.value) + "," + format_double(row.mean_h_star) + "," +
               format_double(row.sd_h_star);
        for (double v : row.trial_h_star) out += "," + format_double(v);
        out += "\n";
    }
    return out;
}

nlohmann::json protocol_report_json(const ExperimentReport& r, const ExperimentConfig& cfg) {
    nlohmann::json rows = nlohmann::json::array();
    for (const SweepRow& row : r.rows)
        rows.push_back({{"value", row.value},
                        {"h_star_mean", row.mean_h_star},
                        {"h_star_sd", row.sd_h_star},
                        {"trial_h_star", row.trial_h_star}});
    nlohmann::json config{{"sweep", r.sweep_name},
                          {"sweep_values", cfg.sweep_values},
                          {"k", cfg.k},
                          {"n", r.n},
                          {"trials", r.trials},
                          {"seed", r.seed},
                          {"threads", cfg.threads},
                          {"init", cfg.kmeans_init == KMeansInit::kForgy ? "forgy" : "pp"},
                          {"dataset", r.dataset_description}};
    if (cfg.dataset.is_generated()) {
        config["sigma"] = cfg.dataset.generator->sigma;
        config["m_c"] = cfg.dataset.generator->points_per_component;
    }
    nlohmann::json out{{"config", std::move(config)},
                       {"rows", std::move(rows)},
                       {"runtime_seconds", r.runtime_seconds}};
    if (r.failed) {
        out["failed"] = true;
        out["failure_message"] = r.failure_message;
    }
    return out;
}

std::string cluster_sizes_csv(const SelectReport& r) {
    std::string out =
        "# columns: k=cluster count, then k ensemble-averaged cluster sizes "
        "normalized by m, sorted descending\n";
    for (std::size_t i = 0; i < r.profile.ks.size(); ++i) {
        out += std::to_string(r.profile.ks[i]);
        for (double v : r.normalized_cluster_sizes[i]) out += "," + format_double(v);
        out += "\n";
    }
    return out;
}

// ---- subcommand bodies ----

int cmd_generate(const DatasetFlags& flags, std::uint64_t seed, bool seed_explicit,
                 const std::string& out_dir) {
    DatasetSpec spec = flags.spec(seed, seed_explicit);
    if (!spec.is_generated()) throw ParseError("generate needs --kind");
    Dataset data = generate(*spec.generator);
    write_text(fs::path(out_dir) / "dataset.csv", dataset_to_csv(data));
    nlohmann::json meta{{"kind", data.name},
                        {"sigma", spec.generator->sigma},
                        {"m_c", spec.generator->points_per_component},
                        {"seed", spec.generator->seed},
                        {"m", data.m},
                        {"d", data.d}};
    write_text(fs::path(out_dir) / "meta.json", meta.dump(2) + "\n");
    write_text(fs::path(out_dir) / "dataset.conf", generator_config_to_text(*spec.generator));
    std::cout << "wrote " << data.m << " points to " << (fs::path(out_dir) / "dataset.csv").string()
              << "\n";
    return 0;
}

int cmd_cluster(const DatasetFlags& flags, std::size_t k, std::size_t n, std::uint64_t seed,
                KMeansInit init, const std::string& out_dir) {
    Dataset data = realize_dataset(flags.spec(SplitMix64::derive(seed, {0xda7aULL})));
    KMeansConfig km;
    km.k = k;
    km.seed = seed;
    km.init = init;
    EnsembleSample sample = kmeans_ensemble(data, km, n);
    for (std::size_t i = 0; i < sample.size(); ++i) {
        char name[32];
        std::snprintf(name, sizeof name, "partition_%04zu.labels", i + 1);
        write_text(fs::path(out_dir) / name, labels_to_csv(sample[i]));
    }
    nlohmann::json meta{{"dataset", data.provenance}, {"k", k}, {"n", n}, {"seed", seed},
                        {"m", data.m}};
    write_text(fs::path(out_dir) / "ensemble.json", meta.dump(2) + "\n");
    std::cout << "wrote " << n << " partitions to " << out_dir << "\n";
    return 0;
}

EnsembleSample ensemble_from_flags(const DatasetFlags& flags, const std::string& sample_dir,
                                   std::size_t ell, std::size_t k, std::size_t n,
                                   std::uint64_t seed, KMeansInit init) {
    if (!sample_dir.empty()) return load_sample_dir(sample_dir, ell);
    Dataset data = realize_dataset(flags.spec(SplitMix64::derive(seed, {0xda7aULL})));
    KMeansConfig km;
    km.k = k;
    km.seed = seed;
    km.init = init;
    return kmeans_ensemble(data, km, n);
}

int cmd_homogeneity(const EnsembleSample& sample, const std::string& out_dir,
                    const std::string& format) {
    HomogeneityReport report = alpha_homogeneity(sample);
    if (out_dir.empty()) {
        if (format == "csv")
            std::cout << homogeneity_report_csv(report);
        else
            std::cout << to_json(report).dump(2) << "\n";
    } else {
        write_text(fs::path(out_dir) / "homogeneity.json", to_json(report).dump(2) + "\n");
        write_text(fs::path(out_dir) / "homogeneity.csv", homogeneity_report_csv(report));
        std::cout << "h_star=" << format_double(report.h_star) << " best_center="
                  << report.best_center + 1 << " outliers=" << report.outliers.size() << "\n";
    }
    return 0;
}

int cmd_mean(const EnsembleSample& sample, double tol, std::size_t max_iter, bool multistart,
             const std::string& out_dir, const std::string& format) {
    MeanResult result = multistart ? mean_partition_multistart(sample, tol, max_iter)
                                   : mean_partition(sample, tol, max_iter);
    if (out_dir.empty()) {
        if (format == "csv")
            std::cout << partition_to_csv(result.mean);
        else
            std::cout << to_json(result).dump(2) << "\n";
    } else {
        write_text(fs::path(out_dir) / "mean.json", to_json(result).dump(2) + "\n");
        write_text(fs::path(out_dir) / "mean.csv", partition_to_csv(result.mean));
        std::cout << "value=" << format_double(result.value) << " iterations=" << result.iterations
                  << " converged=" << (result.converged ? "true" : "false") << "\n";
    }
    return 0;
}

int cmd_select(const DatasetFlags& flags, int k_min, int k_max, std::size_t n,
               std::uint64_t seed, std::size_t threads, KMeansInit init,
               const std::string& out_dir) {
    SelectConfig cfg;
    cfg.dataset = flags.spec(seed);
    cfg.k_min = k_min;
    cfg.k_max = k_max;
    cfg.n = n;
    cfg.seed = seed;
    cfg.threads = threads;
    cfg.kmeans_init = init;
    SelectReport report = run_select(cfg);
    std::string profile_csv = stability_profile_csv(report.profile);
    nlohmann::json j = to_json(report.profile);
    j["dataset"] = report.dataset_description;
    if (out_dir.empty()) {
        std::cout << j.dump(2) << "\n";
    } else {
        write_text(fs::path(out_dir) / "profile.json", j.dump(2) + "\n");
        write_text(fs::path(out_dir) / "profile.csv", profile_csv);
        write_text(fs::path(out_dir) / "cluster_sizes.csv", cluster_sizes_csv(report));
        std::cout << "selected_ell=" << report.profile.selected_ell << "\n";
    }
    return 0;
}

int cmd_protocol(const ExperimentConfig& cfg, const std::string& out_dir) {
    ExperimentReport report = run_protocol(cfg);
    std::string csv = protocol_report_csv(report);
    if (report.failed) csv += "# FAILED: " + report.failure_message + "\n";
    if (out_dir.empty()) {
        std::cout << csv;
    } else {
        write_text(fs::path(out_dir) / "report.csv", csv);
        write_text(fs::path(out_dir) / "report.json",
                   protocol_report_json(report, cfg).dump(2) + "\n");
        std::vector<std::pair<double, double>> points;
        for (const SweepRow& row : report.rows)
            if (!std::isnan(row.mean_h_star)) points.emplace_back(row.value, row.mean_h_star);
        if (!points.empty())
            write_text(fs::path(out_dir) / "chart.svg",
                       line_chart_svg("mean h* vs " + report.sweep_name + " (" +
                                          report.dataset_description + ")",
                                      report.sweep_name, "mean h*", points));
        std::cout << "wrote report for " << report.rows.size() << " sweep values to " << out_dir
                  << "\n";
    }
    if (report.failed) {
        std::cerr << "error: " << report.failure_message << " (partial results flushed)\n";
        return report.failure_is_guard ? 1 : 2;
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"partition orbit analysis for cluster ensembles"};
    app.require_subcommand(1);
    app.fallthrough();  // global flags may follow the subcommand name

    std::uint64_t seed = 0;
    std::string out_dir;
    std::string format = "json";
    std::string profile = "desk";
    std::string init_name = "pp";
    std::size_t threads = 1;
    app.add_option("--seed", seed, "master seed")->capture_default_str();
    app.add_option("--out", out_dir, "output directory (default: stdout where applicable)");
    app.add_option("--format", format, "stdout format: json or csv")
        ->check(CLI::IsMember({"json", "csv"}));
    app.add_option("--profile", profile, "scale profile: desk (trials=20,n=50) or paper (100,100)")
        ->check(CLI::IsMember({"desk", "paper"}));
    app.add_option("--threads", threads, "worker threads for trials")->capture_default_str();
    app.add_option("--init", init_name, "k-means seeding: pp (k-means++) or forgy")
        ->check(CLI::IsMember({"pp", "forgy"}));

    auto* gen_cmd = app.add_subcommand("generate", "write a synthetic dataset as CSV");
    DatasetFlags gen_flags;
    gen_flags.attach(gen_cmd, /*generator_only=*/true);

    auto* cluster_cmd = app.add_subcommand("cluster", "run a k-means ensemble, write label files");
    DatasetFlags cluster_flags;
    cluster_flags.attach(cluster_cmd);
    std::size_t cluster_k = 2, cluster_n = 100;
    cluster_cmd->add_option("--k", cluster_k, "number of clusters")->required();
    cluster_cmd->add_option("--n", cluster_n, "ensemble size")->capture_default_str();

    auto* hom_cmd = app.add_subcommand("homogeneity", "alpha-homogeneity report for a sample");
    DatasetFlags hom_flags;
    hom_flags.attach(hom_cmd);
    std::string hom_sample;
    std::size_t hom_ell = 0, hom_k = 2, hom_n = 0;
    hom_cmd->add_option("--sample", hom_sample, "directory of partition files (.labels/.csv)");
    hom_cmd->add_option("--ell", hom_ell, "cluster budget override for label files");
    hom_cmd->add_option("--k", hom_k, "number of clusters (generated ensembles)");
    hom_cmd->add_option("--n", hom_n, "ensemble size (generated ensembles)");

    auto* mean_cmd = app.add_subcommand("mean", "mean partition of a sample");
    DatasetFlags mean_flags;
    mean_flags.attach(mean_cmd);
    std::string mean_sample;
    std::size_t mean_ell = 0, mean_k = 2, mean_n = 0, mean_max_iter = 100;
    double mean_tol = 1e-10;
    bool mean_multistart = false;
    mean_cmd->add_option("--sample", mean_sample, "directory of partition files (.labels/.csv)");
    mean_cmd->add_option("--ell", mean_ell, "cluster budget override for label files");
    mean_cmd->add_option("--k", mean_k, "number of clusters (generated ensembles)");
    mean_cmd->add_option("--n", mean_n, "ensemble size (generated ensembles)");
    mean_cmd->add_option("--tol", mean_tol, "convergence tolerance")->capture_default_str();
    mean_cmd->add_option("--max-iter", mean_max_iter, "iteration cap")->capture_default_str();
    mean_cmd->add_flag("--multistart", mean_multistart, "start from every sample member");

    auto* select_cmd = app.add_subcommand("select", "stability profile over a k range");
    DatasetFlags select_flags;
    select_flags.attach(select_cmd);
    int select_kmin = 2, select_kmax = 10;
    std::size_t select_n = 0;
    select_cmd->add_option("--kmin", select_kmin, "smallest k")->capture_default_str();
    select_cmd->add_option("--kmax", select_kmax, "largest k")->capture_default_str();
    select_cmd->add_option("--n", select_n, "ensemble size per k");

    auto* proto_cmd = app.add_subcommand("protocol", "sweep experiment: mean h* per value");
    DatasetFlags proto_flags;
    proto_flags.attach(proto_cmd);
    std::string sweep_name = "k";
    std::vector<double> sweep_values;
    std::size_t proto_k = 4, proto_n = 0, proto_trials = 0;
    proto_cmd->add_option("--sweep", sweep_name, "swept variable: k, sigma or mc")
        ->check(CLI::IsMember({"k", "sigma", "mc"}));
    proto_cmd->add_option("--values", sweep_values, "sweep values (strictly increasing)")
        ->required()
        ->delimiter(',');
    proto_cmd->add_option("--k", proto_k, "k-means parameter (when not swept)")
        ->capture_default_str();
    proto_cmd->add_option("--n", proto_n, "ensemble size per trial");
    proto_cmd->add_option("--trials", proto_trials, "protocol repetitions per value");

    try {
        app.parse(argc, argv);

        std::size_t default_n = profile == "paper" ? 100 : 50;
        std::size_t default_trials = profile == "paper" ? 100 : 20;
        KMeansInit init = init_name == "forgy" ? KMeansInit::kForgy : KMeansInit::kPlusPlus;

        if (gen_cmd->parsed())
            return cmd_generate(gen_flags, seed, app.count("--seed") > 0,
                                out_dir.empty() ? "." : out_dir);
        if (cluster_cmd->parsed())
            return cmd_cluster(cluster_flags, cluster_k, cluster_n, seed, init,
                               out_dir.empty() ? "." : out_dir);
        if (hom_cmd->parsed()) {
            EnsembleSample sample = ensemble_from_flags(
                hom_flags, hom_sample, hom_ell, hom_k, hom_n ? hom_n : default_n, seed, init);
            return cmd_homogeneity(sample, out_dir, format);
        }
        if (mean_cmd->parsed()) {
            EnsembleSample sample = ensemble_from_flags(
                mean_flags, mean_sample, mean_ell, mean_k, mean_n ? mean_n : default_n, seed, init);
            return cmd_mean(sample, mean_tol, mean_max_iter, mean_multistart, out_dir, format);
        }
        if (select_cmd->parsed())
            return cmd_select(select_flags, select_kmin, select_kmax,
                              select_n ? select_n : default_n, seed, threads, init, out_dir);
        if (proto_cmd->parsed()) {
            ExperimentConfig cfg;
            cfg.dataset = proto_flags.spec(seed);
            cfg.k = proto_k;
            cfg.n = proto_n ? proto_n : default_n;
            cfg.trials = proto_trials ? proto_trials : default_trials;
            cfg.sweep = sweep_name == "sigma"  ? SweepVariable::kSigma
                        : sweep_name == "mc"   ? SweepVariable::kMc
                                               : SweepVariable::kK;
            cfg.sweep_values = sweep_values;
            cfg.seed = seed;
            cfg.threads = threads;
            cfg.kmeans_init = init;
            return cmd_protocol(cfg, out_dir);
        }
        return 0;
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    } catch (const GuardError& e) {
        std::cerr << "error (computation guard): " << e.what() << "\n";
        return 1;
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
