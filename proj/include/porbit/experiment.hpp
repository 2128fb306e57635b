// Protocol runner: for each value of a swept variable, repeat
// (generate dataset, run an ensemble of k-means, record the
// alpha-homogeneity h*) over a number of trials and aggregate. Pure
// computation, no file I/O; the CLI layer owns files. Trials run in
// parallel over independent derived RNG streams and write into
// preassigned slots, so results do not depend on the thread count.

#pragma once

#include <chrono>
#include <cmath>
#include <cstdint>
#include <exception>
#include <functional>
#include <map>
#include <limits>
#include <memory>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "porbit/dataset.hpp"
#include "porbit/homogeneity.hpp"
#include "porbit/kmeans.hpp"

namespace porbit {

/// Index-striped parallel loop; tasks must be independent.
/// Rethrows the first worker exception after joining.
inline void parallel_for(std::size_t count, std::size_t threads,
                         const std::function<void(std::size_t)>& body) {
    if (threads <= 1 || count <= 1) {
        for (std::size_t i = 0; i < count; ++i) body(i);
        return;
    }
    std::size_t workers = std::min(threads, count);
    std::vector<std::thread> pool;
    std::vector<std::exception_ptr> errors(workers);
    for (std::size_t w = 0; w < workers; ++w) {
        pool.emplace_back([&, w]() {
            try {
                for (std::size_t i = w; i < count; i += workers) body(i);
            } catch (...) {
                errors[w] = std::current_exception();
            }
        });
    }
    for (std::thread& t : pool) t.join();
    for (const std::exception_ptr& e : errors)
        if (e) std::rethrow_exception(e);
}

/// Where the points come from: a generator config or a CSV file.
struct DatasetSpec {
    std::optional<GeneratorConfig> generator;
    std::string csv_path;
    CsvOptions csv_options;

    bool is_generated() const { return generator.has_value(); }
};

enum class SweepVariable { kK, kSigma, kMc };

inline std::string sweep_variable_name(SweepVariable v) {
    switch (v) {
        case SweepVariable::kK: return "k";
        case SweepVariable::kSigma: return "sigma";
        case SweepVariable::kMc: return "m_c";
    }
    throw std::invalid_argument("unknown sweep variable");
}

struct ExperimentConfig {
    DatasetSpec dataset;
    std::size_t k = 4;          ///< k-means parameter (overridden by a k sweep)
    std::size_t n = 100;        ///< ensemble size per trial
    std::size_t trials = 100;   ///< protocol repetitions per sweep value
    SweepVariable sweep = SweepVariable::kK;
    std::vector<double> sweep_values;  ///< non-empty, strictly increasing
    std::uint64_t seed = 0;
    std::size_t threads = 1;
    std::size_t kmeans_max_iter = 100;
    KMeansInit kmeans_init = KMeansInit::kPlusPlus;
};

struct SweepRow {
    double value;
    double mean_h_star;
    double sd_h_star;  ///< sample standard deviation (0 when trials < 2)
    std::vector<double> trial_h_star;
};

struct ExperimentReport {
    std::string sweep_name;
    std::size_t n = 0;
    std::size_t trials = 0;
    std::uint64_t seed = 0;
    std::string dataset_description;
    std::vector<SweepRow> rows;
    double runtime_seconds = 0.0;
    // Failure marker: when any trial errored, the completed cells are still
    // aggregated (failed cells carry NaN in trial_h_star) and these fields
    // describe the first failure.
    bool failed = false;
    bool failure_is_guard = false;
    std::string failure_message;
};

namespace detail {

inline void validate_sweep(const ExperimentConfig& config) {
    if (config.sweep_values.empty())
        throw std::invalid_argument("protocol: sweep values must be non-empty");
    for (std::size_t i = 1; i < config.sweep_values.size(); ++i)
        if (config.sweep_values[i] <= config.sweep_values[i - 1])
            throw std::invalid_argument("protocol: sweep values must be strictly increasing");
    if (config.trials == 0) throw std::invalid_argument("protocol: trials must be >= 1");
    if (config.n == 0) throw std::invalid_argument("protocol: n must be >= 1");
    if (!config.dataset.is_generated() &&
        (config.sweep == SweepVariable::kSigma || config.sweep == SweepVariable::kMc))
        throw std::invalid_argument("protocol: sigma/m_c sweeps require a generated dataset");
    if (config.sweep == SweepVariable::kK || config.sweep == SweepVariable::kMc) {
        for (double v : config.sweep_values)
            if (v < 1.0 || v != std::floor(v))
                throw std::invalid_argument("protocol: " + sweep_variable_name(config.sweep) +
                                            " sweep values must be positive integers");
    }
}

inline std::size_t checked_count(double v) { return static_cast<std::size_t>(v); }

}  // namespace detail

/// One protocol cell: ensemble of n k-means runs on one dataset, h* recorded.
inline double protocol_trial_h_star(const Dataset& data, std::size_t k, std::size_t n,
                                    std::uint64_t ensemble_seed, std::size_t max_iter,
                                    KMeansInit init = KMeansInit::kPlusPlus) {
    KMeansConfig km;
    km.k = k;
    km.max_iter = max_iter;
    km.seed = ensemble_seed;
    km.init = init;
    EnsembleSample sample = kmeans_ensemble(data, km, n);
    return alpha_homogeneity(sample).h_star;
}

inline ExperimentReport run_protocol(const ExperimentConfig& config) {
    detail::validate_sweep(config);
    auto t0 = std::chrono::steady_clock::now();

    // File-backed datasets load once and are shared read-only.
    std::shared_ptr<const Dataset> file_data;
    if (!config.dataset.is_generated())
        file_data = std::make_shared<Dataset>(
            load_csv(config.dataset.csv_path, config.dataset.csv_options));

    const std::size_t values = config.sweep_values.size();
    const std::size_t cells = values * config.trials;
    std::vector<double> h_star(cells, 0.0);
    std::vector<char> completed(cells, 0);
    std::vector<std::string> cell_error(cells);
    std::vector<char> cell_guard(cells, 0);

    parallel_for(cells, config.threads, [&](std::size_t cell) {
        std::size_t s = cell / config.trials;
        std::size_t t = cell % config.trials;
        double v = config.sweep_values[s];

        std::size_t k = config.k;
        std::uint64_t data_seed = SplitMix64::derive(config.seed, {s, t, 0});
        std::uint64_t ens_seed = SplitMix64::derive(config.seed, {s, t, 1});

        try {
            const Dataset* data = nullptr;
            Dataset generated;
            if (config.dataset.is_generated()) {
                GeneratorConfig gen = *config.dataset.generator;
                if (config.sweep == SweepVariable::kSigma) gen.sigma = v;
                if (config.sweep == SweepVariable::kMc)
                    gen.points_per_component = detail::checked_count(v);
                gen.seed = data_seed;  // fresh dataset per trial
                generated = generate(gen);
                data = &generated;
            } else {
                data = file_data.get();
            }
            if (config.sweep == SweepVariable::kK) k = detail::checked_count(v);

            h_star[cell] = protocol_trial_h_star(*data, k, config.n, ens_seed,
                                                 config.kmeans_max_iter, config.kmeans_init);
            completed[cell] = 1;
        } catch (const GuardError& e) {
            cell_error[cell] = e.what();
            cell_guard[cell] = 1;
        } catch (const std::exception& e) {
            cell_error[cell] = e.what();
        }
    });

    ExperimentReport report;
    report.sweep_name = sweep_variable_name(config.sweep);
    report.n = config.n;
    report.trials = config.trials;
    report.seed = config.seed;
    report.dataset_description =
        config.dataset.is_generated()
            ? generator_kind_name(config.dataset.generator->kind)
            : config.dataset.csv_path;
    for (std::size_t s = 0; s < values; ++s) {
        SweepRow row;
        row.value = config.sweep_values[s];
        std::size_t done = 0;
        double mean = 0.0;
        for (std::size_t t = 0; t < config.trials; ++t) {
            std::size_t cell = s * config.trials + t;
            if (completed[cell]) {
                row.trial_h_star.push_back(h_star[cell]);
                mean += h_star[cell];
                ++done;
            } else {
                row.trial_h_star.push_back(std::numeric_limits<double>::quiet_NaN());
            }
        }
        mean = done > 0 ? mean / static_cast<double>(done)
                        : std::numeric_limits<double>::quiet_NaN();
        double sd = 0.0;
        if (done > 1) {
            for (double x : row.trial_h_star)
                if (!std::isnan(x)) sd += (x - mean) * (x - mean);
            sd = std::sqrt(sd / static_cast<double>(done - 1));
        }
        row.mean_h_star = mean;
        row.sd_h_star = sd;
        report.rows.push_back(std::move(row));
    }
    for (std::size_t cell = 0; cell < cells; ++cell) {
        if (completed[cell]) continue;
        report.failed = true;
        report.failure_is_guard = cell_guard[cell] != 0;
        report.failure_message = cell_error[cell];
        break;
    }
    report.runtime_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return report;
}

struct SelectConfig {
    DatasetSpec dataset;
    int k_min = 2;
    int k_max = 10;
    std::size_t n = 100;
    std::uint64_t seed = 0;
    std::size_t threads = 1;
    std::size_t kmeans_max_iter = 100;
    KMeansInit kmeans_init = KMeansInit::kPlusPlus;
};

struct SelectReport {
    StabilityProfile profile;
    /// Per k: ensemble-averaged cluster sizes, sorted descending, divided by m.
    std::vector<std::vector<double>> normalized_cluster_sizes;
    std::string dataset_description;
};

/// Model selection on one dataset: an ensemble per k, then the h*/instability
/// profile plus the normalized cluster-size table.
inline SelectReport run_select(const SelectConfig& config) {
    if (config.k_min < 1 || config.k_max < config.k_min)
        throw std::invalid_argument("select: need 1 <= k_min <= k_max");
    Dataset data;
    if (config.dataset.is_generated()) {
        GeneratorConfig gen = *config.dataset.generator;
        gen.seed = SplitMix64::derive(config.seed, {0xda7aULL});
        data = generate(gen);
    } else {
        data = load_csv(config.dataset.csv_path, config.dataset.csv_options);
    }

    const std::size_t count = static_cast<std::size_t>(config.k_max - config.k_min + 1);
    std::vector<std::optional<EnsembleSample>> samples(count);
    parallel_for(count, config.threads, [&](std::size_t i) {
        int k = config.k_min + static_cast<int>(i);
        KMeansConfig km;
        km.k = static_cast<std::size_t>(k);
        km.max_iter = config.kmeans_max_iter;
        km.seed = SplitMix64::derive(config.seed, {0x5eedULL, static_cast<std::uint64_t>(k)});
        km.init = config.kmeans_init;
        samples[i] = kmeans_ensemble(data, km, config.n);
    });

    std::map<int, EnsembleSample> by_k;
    for (std::size_t i = 0; i < count; ++i)
        by_k.emplace(config.k_min + static_cast<int>(i), std::move(*samples[i]));

    SelectReport report;
    report.profile = select_clusters(by_k);
    report.dataset_description = data.provenance;
    for (const auto& [k, sample] : by_k) {
        std::vector<double> avg(static_cast<std::size_t>(k), 0.0);
        for (const Partition& p : sample) {
            std::vector<double> sizes = cluster_sizes(p);
            std::sort(sizes.begin(), sizes.end(), std::greater<>());
            for (std::size_t c = 0; c < sizes.size(); ++c) avg[c] += sizes[c];
        }
        double denom = static_cast<double>(sample.size()) * static_cast<double>(sample.points());
        for (double& v : avg) v /= denom;
        report.normalized_cluster_sizes.push_back(std::move(avg));
    }
    return report;
}

}  // namespace porbit
