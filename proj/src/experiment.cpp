// Copyright 2026 The IRL Toolkit Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "irl/experiment.hpp"

#include <atomic>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <set>
#include <mutex>
#include <stdexcept>
#include <thread>

#include <json.hpp>

#include "irl/learner.hpp"
#include "irl/mdp_io.hpp"

namespace irl {

namespace {

// Sub-seed counters hung off every master seed. Fixed so that each consumer
// draws from its own stream regardless of which algorithm runs.
enum SeedCounter : std::uint64_t {
    kEnvSeed = 0,
    kExpertSeed = 1,
    kUnsupervisedSeed = 2,
    kThetaSeed = 3,
};

}  // namespace

Algorithm algorithm_from_name(const std::string& name) {
    if (name == "maxent") return Algorithm::kMaxEnt;
    if (name == "messi") return Algorithm::kMessi;
    if (name == "messimax") return Algorithm::kMessiMax;
    if (name == "em-maxent") return Algorithm::kEmMaxEnt;
    throw std::invalid_argument("unknown algorithm '" + name + "'");
}

MixtureName mixture_from_name(const std::string& name) {
    if (name == "mu1") return MixtureName::kMu1;
    if (name == "mu2") return MixtureName::kMu2;
    if (name == "mu3") return MixtureName::kMu3;
    if (name == "ustar") return MixtureName::kUstar;
    throw std::invalid_argument("unknown mixture '" + name + "'");
}

SweepAxis axis_from_name(const std::string& name) {
    if (name == "iterations") return SweepAxis::kIterations;
    if (name == "u") return SweepAxis::kUnsupervisedCount;
    if (name == "nu") return SweepAxis::kNu;
    if (name == "lambda0") return SweepAxis::kLambda0;
    throw std::invalid_argument("unknown sweep axis '" + name + "'");
}

std::string to_string(Algorithm a) {
    switch (a) {
        case Algorithm::kMaxEnt: return "maxent";
        case Algorithm::kMessi: return "messi";
        case Algorithm::kMessiMax: return "messimax";
        case Algorithm::kEmMaxEnt: return "em-maxent";
    }
    return "?";
}

std::string to_string(MixtureName m) {
    switch (m) {
        case MixtureName::kMu1: return "mu1";
        case MixtureName::kMu2: return "mu2";
        case MixtureName::kMu3: return "mu3";
        case MixtureName::kUstar: return "ustar";
    }
    return "?";
}

std::string to_string(SweepAxis a) {
    switch (a) {
        case SweepAxis::kIterations: return "iterations";
        case SweepAxis::kUnsupervisedCount: return "u";
        case SweepAxis::kNu: return "nu";
        case SweepAxis::kLambda0: return "lambda0";
    }
    return "?";
}

std::vector<std::uint64_t> ExperimentConfig::resolved_seeds() const {
    if (!seeds.empty()) return seeds;
    std::vector<std::uint64_t> out(reps);
    for (int i = 0; i < reps; ++i) out[i] = seed_base + static_cast<std::uint64_t>(i);
    return out;
}

void ExperimentConfig::validate() const {
    if (environment != "gridworld" && environment != "highway" && environment != "pit")
        throw std::invalid_argument("config: unknown environment '" + environment + "'");
    if (environment == "gridworld" &&
        (grid_side < 1 || grid_macro_side < 1 || grid_side % grid_macro_side != 0))
        throw std::invalid_argument("config: grid_side must be divisible by grid_macro_side");
    if (grid_success_prob < 0.0 || grid_success_prob > 1.0)
        throw std::invalid_argument("config: grid_success_prob must lie in [0,1]");
    if (environment == "highway" && highway_lanes < 2)
        throw std::invalid_argument("config: highway needs at least 2 lanes");
    if (l < 1) throw std::invalid_argument("config: l must be >= 1");
    if (u < 0) throw std::invalid_argument("config: u must be >= 0");
    if (nu < 0.0 || nu > 1.0) throw std::invalid_argument("config: nu must lie in [0,1]");
    if (lambda0 < 0.0) throw std::invalid_argument("config: lambda0 must be >= 0");
    if (theta_max <= 0.0) throw std::invalid_argument("config: theta_max must be positive");
    if (iterations < 1) throw std::invalid_argument("config: iterations must be >= 1");
    if (eta < 1) throw std::invalid_argument("config: eta must be >= 1");
    if (horizon_override < 0) throw std::invalid_argument("config: horizon must be >= 1");
    if (seeds.empty() && reps < 1) throw std::invalid_argument("config: reps must be >= 1");
    if (output_dir.empty()) throw std::invalid_argument("config: output path is empty");
}

ExperimentConfig ExperimentConfig::from_json_text(const std::string& text) {
    using nlohmann::json;
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw std::invalid_argument(std::string("config: parse error: ") + e.what());
    }

    static const std::set<std::string> known = {
        "environment", "grid_side",  "grid_macro_side", "grid_success_prob", "highway_lanes",
        "horizon",     "algorithm",  "mixture",         "l",                 "u",
        "nu",          "lambda0",    "theta_max",       "iterations",        "eta",
        "seeds",       "reps",       "seed_base",       "sweep_axis",        "sweep_values",
        "output",      "threads"};
    for (const auto& [key, value] : doc.items())
        if (!known.count(key)) throw std::invalid_argument("config: unknown field '" + key + "'");

    ExperimentConfig cfg;
    try {
        cfg.environment = doc.value("environment", cfg.environment);
        cfg.grid_side = doc.value("grid_side", cfg.grid_side);
        cfg.grid_macro_side = doc.value("grid_macro_side", cfg.grid_macro_side);
        cfg.grid_success_prob = doc.value("grid_success_prob", cfg.grid_success_prob);
        cfg.highway_lanes = doc.value("highway_lanes", cfg.highway_lanes);
        cfg.horizon_override = doc.value("horizon", cfg.horizon_override);
        if (doc.contains("algorithm")) cfg.algorithm = algorithm_from_name(doc.at("algorithm"));
        if (doc.contains("mixture")) cfg.mixture = mixture_from_name(doc.at("mixture"));
        cfg.l = doc.value("l", cfg.l);
        cfg.u = doc.value("u", cfg.u);
        cfg.nu = doc.value("nu", cfg.nu);
        cfg.lambda0 = doc.value("lambda0", cfg.lambda0);
        cfg.theta_max = doc.value("theta_max", cfg.theta_max);
        cfg.iterations = doc.value("iterations", cfg.iterations);
        cfg.eta = doc.value("eta", cfg.eta);
        cfg.seeds = doc.value("seeds", cfg.seeds);
        cfg.reps = doc.value("reps", cfg.reps);
        cfg.seed_base = doc.value("seed_base", cfg.seed_base);
        if (doc.contains("sweep_axis")) cfg.sweep_axis = axis_from_name(doc.at("sweep_axis"));
        cfg.sweep_values = doc.value("sweep_values", cfg.sweep_values);
        cfg.output_dir = doc.value("output", cfg.output_dir);
        cfg.threads = doc.value("threads", cfg.threads);
    } catch (const json::exception& e) {
        throw std::invalid_argument(std::string("config: bad field type: ") + e.what());
    }
    cfg.validate();
    return cfg;
}

ExperimentConfig ExperimentConfig::from_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("config: cannot open " + path);
    std::stringstream buffer;
    buffer << in.rdbuf();
    return from_json_text(buffer.str());
}

EnvironmentBundle build_environment(const ExperimentConfig& cfg, std::uint64_t env_seed) {
    EnvironmentBundle bundle = [&] {
        if (cfg.environment == "gridworld") {
            Rng rng(env_seed);
            return build_gridworld(cfg.grid_side, cfg.grid_macro_side, cfg.grid_success_prob, rng);
        }
        if (cfg.environment == "highway")
            return build_highway(cfg.highway_lanes, 100, env_seed);
        return build_pit();
    }();
    if (cfg.horizon_override > 0) bundle.horizon = cfg.horizon_override;
    return bundle;
}

MixtureSpec resolve_mixture(const ExperimentConfig& cfg, const EnvironmentBundle& bundle) {
    const MixtureName name =
        cfg.algorithm == Algorithm::kMessiMax ? MixtureName::kUstar : cfg.mixture;
    switch (name) {
        case MixtureName::kMu1:
            return MixtureSpec::two_component(bundle.theta_star, bundle.theta_1, cfg.nu, true);
        case MixtureName::kMu2:
            return MixtureSpec::two_component(bundle.theta_star, bundle.theta_2, cfg.nu, true);
        case MixtureName::kMu3:
            return MixtureSpec::two_component(bundle.theta_1, bundle.theta_2, cfg.nu, false);
        case MixtureName::kUstar:
            return MixtureSpec::expert_only(bundle.theta_star);
    }
    throw std::logic_error("resolve_mixture: unknown mixture");
}

namespace {

// Per-iteration metric curve of one seeded run.
std::vector<double> run_one_seed(const ExperimentConfig& cfg, std::uint64_t master_seed) {
    const auto bundle = build_environment(cfg, derive_seed(master_seed, kEnvSeed));

    LearnerConfig lc;
    lc.iterations = cfg.iterations;
    lc.theta_max = cfg.theta_max;
    lc.lambda0 = cfg.algorithm == Algorithm::kMaxEnt ? 0.0 : cfg.lambda0;
    lc.seed = derive_seed(master_seed, kThetaSeed);
    lc.horizon = bundle.horizon;

    const auto expert = generate_expert(bundle, cfg.l, lc, derive_seed(master_seed, kExpertSeed));

    std::vector<IterRecord> history;
    if (cfg.algorithm == Algorithm::kMaxEnt) {
        history = run_maxent(bundle.mdp, expert, lc).history;
    } else {
        const auto mixture = resolve_mixture(cfg, bundle);
        const auto unsup = generate_unsupervised(bundle, mixture, cfg.u, lc,
                                                 derive_seed(master_seed, kUnsupervisedSeed));
        TrainingSet ts(expert, unsup, bundle.default_similarity);
        if (cfg.algorithm == Algorithm::kEmMaxEnt) {
            const int rounds = std::max(1, (cfg.iterations + cfg.eta - 1) / cfg.eta);
            history = em_maxent(bundle.mdp, ts, lc, cfg.eta, rounds).history;
        } else {
            history = run_messi(bundle.mdp, ts, lc).history;
        }
    }

    std::vector<double> metrics;
    metrics.reserve(history.size());
    for (const auto& rec : history) metrics.push_back(apply_metric(bundle, rec.f_t));
    return metrics;
}

void run_all_seeds(const ExperimentConfig& cfg, const std::vector<std::uint64_t>& seeds,
                   std::vector<std::vector<double>>& curves) {
    curves.assign(seeds.size(), {});
    const int n_threads =
        std::max(1, std::min<int>(cfg.threads > 0 ? cfg.threads
                                                  : static_cast<int>(std::thread::hardware_concurrency()),
                                  static_cast<int>(seeds.size())));
    if (n_threads == 1) {
        for (std::size_t i = 0; i < seeds.size(); ++i) curves[i] = run_one_seed(cfg, seeds[i]);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr error;
    std::mutex error_mutex;
    auto worker = [&] {
        for (;;) {
            const std::size_t i = next.fetch_add(1);
            if (i >= seeds.size()) return;
            try {
                curves[i] = run_one_seed(cfg, seeds[i]);
            } catch (...) {
                std::lock_guard<std::mutex> lock(error_mutex);
                if (!error) error = std::current_exception();
                return;
            }
        }
    };
    std::vector<std::thread> pool;
    for (int t = 0; t < n_threads; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
    if (error) std::rethrow_exception(error);
}

AggregateRow aggregate(double axis_value, const std::vector<double>& values) {
    const int n = static_cast<int>(values.size());
    double mean = 0.0;
    for (double v : values) mean += v;
    mean /= n;
    double var = 0.0;
    for (double v : values) var += (v - mean) * (v - mean);
    const double std_err = n > 1 ? std::sqrt(var / (n - 1)) / std::sqrt(static_cast<double>(n)) : 0.0;
    return {axis_value, mean, std_err, n};
}

// Runs one configuration; rows are tagged with `axis_value` (or with the
// iteration number when aggregate_per_iteration is set, as in a plain run).
void run_point(const ExperimentConfig& cfg, double axis_value, bool aggregate_per_iteration,
               ResultTable& table) {
    const auto seeds = cfg.resolved_seeds();
    std::vector<std::vector<double>> curves;
    run_all_seeds(cfg, seeds, curves);

    const std::string algo = to_string(cfg.algorithm);
    for (std::size_t i = 0; i < seeds.size(); ++i)
        for (std::size_t t = 0; t < curves[i].size(); ++t)
            table.rows.push_back({aggregate_per_iteration ? static_cast<double>(t) : axis_value,
                                  seeds[i], static_cast<int>(t), curves[i][t], algo});

    if (aggregate_per_iteration) {
        const std::size_t len = curves.front().size();
        std::vector<double> column(seeds.size());
        for (std::size_t t = 0; t < len; ++t) {
            for (std::size_t i = 0; i < seeds.size(); ++i) column[i] = curves[i][t];
            table.aggregates.push_back(aggregate(static_cast<double>(t), column));
        }
    } else {
        std::vector<double> finals(seeds.size());
        for (std::size_t i = 0; i < seeds.size(); ++i) finals[i] = curves[i].back();
        table.aggregates.push_back(aggregate(axis_value, finals));
    }
}

}  // namespace

ResultTable run_experiment(const ExperimentConfig& cfg) {
    cfg.validate();
    ResultTable table;
    run_point(cfg, 0.0, /*aggregate_per_iteration=*/true, table);
    return table;
}

ResultTable sweep(const ExperimentConfig& cfg) {
    cfg.validate();
    if (cfg.sweep_axis == SweepAxis::kIterations) {
        // The run history already contains every point on this axis.
        return run_experiment(cfg);
    }
    if (cfg.sweep_values.empty())
        throw std::invalid_argument("sweep: sweep_values must be non-empty for axis " +
                                    to_string(cfg.sweep_axis));

    ResultTable table;
    for (double value : cfg.sweep_values) {
        ExperimentConfig point = cfg;
        switch (cfg.sweep_axis) {
            case SweepAxis::kUnsupervisedCount:
                point.u = static_cast<int>(value);
                break;
            case SweepAxis::kNu:
                point.nu = value;
                break;
            case SweepAxis::kLambda0:
                point.lambda0 = value;
                break;
            case SweepAxis::kIterations:
                break;  // handled above
        }
        point.validate();
        run_point(point, value, /*aggregate_per_iteration=*/false, table);
    }
    return table;
}

void write_result_csv(const ResultTable& table, const std::string& out_dir) {
    std::filesystem::create_directories(out_dir);

    std::ofstream runs(out_dir + "/runs.csv");
    if (!runs) throw std::runtime_error("write_result_csv: cannot open " + out_dir + "/runs.csv");
    runs << "axis_value,seed,iteration,metric,algorithm\n";
    char buf[64];
    for (const auto& row : table.rows) {
        std::snprintf(buf, sizeof buf, "%.12g", row.axis_value);
        runs << buf << ',' << row.seed << ',' << row.iteration << ',';
        std::snprintf(buf, sizeof buf, "%.12g", row.metric);
        runs << buf << ',' << row.algorithm << '\n';
    }

    std::ofstream summary(out_dir + "/summary.csv");
    if (!summary)
        throw std::runtime_error("write_result_csv: cannot open " + out_dir + "/summary.csv");
    summary << "axis_value,mean,stderr,n\n";
    for (const auto& agg : table.aggregates) {
        std::snprintf(buf, sizeof buf, "%.12g,%.12g,%.12g,%d", agg.axis_value, agg.mean,
                      agg.std_err, agg.n);
        summary << buf << '\n';
    }
}

}  // namespace irl
