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
//
// Experiment harness: seeded runs and parameter sweeps over the learning
// algorithms, aggregated into plot-ready CSV.

#ifndef IRL_EXPERIMENT_HPP_
#define IRL_EXPERIMENT_HPP_

#include <cstdint>
#include <string>
#include <vector>

#include "irl/datagen.hpp"
#include "irl/environments.hpp"

namespace irl {

enum class Algorithm { kMaxEnt, kMessi, kMessiMax, kEmMaxEnt };
enum class MixtureName { kMu1, kMu2, kMu3, kUstar };
enum class SweepAxis { kIterations, kUnsupervisedCount, kNu, kLambda0 };

Algorithm algorithm_from_name(const std::string& name);
MixtureName mixture_from_name(const std::string& name);
SweepAxis axis_from_name(const std::string& name);
std::string to_string(Algorithm a);
std::string to_string(MixtureName m);
std::string to_string(SweepAxis a);

struct ExperimentConfig {
    // Environment selection and parameters.
    std::string environment = "gridworld";  // gridworld | highway | pit
    int grid_side = 16;
    int grid_macro_side = 2;
    double grid_success_prob = 0.7;
    int highway_lanes = 4;
    int horizon_override = 0;  // 0 keeps the environment default

    Algorithm algorithm = Algorithm::kMaxEnt;
    MixtureName mixture = MixtureName::kMu1;

    int l = 1;
    int u = 20;
    double nu = 0.5;
    double lambda0 = 0.05;
    double theta_max = 500.0;
    int iterations = 100;  // T
    int eta = 5;           // em-maxent gradient steps per round

    std::vector<std::uint64_t> seeds;  // explicit list; otherwise seed_base + 0..reps-1
    int reps = 20;
    std::uint64_t seed_base = 1;

    SweepAxis sweep_axis = SweepAxis::kIterations;
    std::vector<double> sweep_values;

    std::string output_dir = "out";
    int threads = 0;  // 0 = hardware concurrency

    std::vector<std::uint64_t> resolved_seeds() const;

    // Throws std::invalid_argument with a descriptive message before any
    // computation when the configuration is inconsistent.
    void validate() const;

    static ExperimentConfig from_json_text(const std::string& text);
    static ExperimentConfig from_json_file(const std::string& path);
};

struct RunRow {
    double axis_value;
    std::uint64_t seed;
    int iteration;
    double metric;
    std::string algorithm;
};

struct AggregateRow {
    double axis_value;
    double mean;
    double std_err;
    int n;
};

struct ResultTable {
    std::vector<RunRow> rows;
    std::vector<AggregateRow> aggregates;
};

// One configuration over all seeds: builds the environment, generates the
// expert and unsupervised sets, runs the algorithm, and scores every iterate
// with the environment metric. Sub-seeds for the environment, expert data,
// unsupervised data, and theta_0 are derived from each master seed with
// fixed counters, so different algorithms see identical data per seed.
ResultTable run_experiment(const ExperimentConfig& cfg);

// Reruns run_experiment per sweep value with shared seeds. The iterations
// axis emits the per-iteration history of a single run instead of rerunning.
ResultTable sweep(const ExperimentConfig& cfg);

// Writes <dir>/runs.csv (axis_value,seed,iteration,metric,algorithm) and
// <dir>/summary.csv (axis_value,mean,stderr,n).
void write_result_csv(const ResultTable& table, const std::string& out_dir);

// Builds the configured environment deterministically from the first seed.
EnvironmentBundle build_environment(const ExperimentConfig& cfg, std::uint64_t env_seed);

// The mixture distribution the configured algorithm draws unsupervised
// trajectories from.
MixtureSpec resolve_mixture(const ExperimentConfig& cfg, const EnvironmentBundle& bundle);

}  // namespace irl

#endif  // IRL_EXPERIMENT_HPP_
