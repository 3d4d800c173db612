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

#include <cstdint>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "irl/experiment.hpp"
#include "irl/mdp_io.hpp"

namespace {

struct CommonOptions {
    std::string config_path;
    std::string out_dir;
    int reps = 0;
    std::int64_t seed_base = -1;
    int threads = -1;
};

void add_common(CLI::App* cmd, CommonOptions& opts) {
    cmd->add_option("--config", opts.config_path, "JSON experiment configuration")->required();
    cmd->add_option("--out", opts.out_dir, "output directory for CSV results");
    cmd->add_option("--reps", opts.reps, "override the number of repetitions");
    cmd->add_option("--seed-base", opts.seed_base, "override the base seed");
    cmd->add_option("--threads", opts.threads, "worker threads (0 = all cores)");
}

irl::ExperimentConfig load_config(const CommonOptions& opts) {
    auto cfg = irl::ExperimentConfig::from_json_file(opts.config_path);
    if (!opts.out_dir.empty()) cfg.output_dir = opts.out_dir;
    if (opts.reps > 0) {
        cfg.reps = opts.reps;
        cfg.seeds.clear();
    }
    if (opts.seed_base >= 0) {
        cfg.seed_base = static_cast<std::uint64_t>(opts.seed_base);
        cfg.seeds.clear();
    }
    if (opts.threads >= 0) cfg.threads = opts.threads;
    cfg.validate();
    return cfg;
}

void report(const irl::ResultTable& table, const irl::ExperimentConfig& cfg) {
    irl::write_result_csv(table, cfg.output_dir);
    std::cout << "wrote " << table.rows.size() << " rows and " << table.aggregates.size()
              << " aggregate rows to " << cfg.output_dir << "/{runs,summary}.csv\n";
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Tabular inverse reinforcement learning experiments"};
    app.require_subcommand(1);

    CommonOptions run_opts;
    CLI::App* run_cmd = app.add_subcommand("run", "run one configuration over its seeds");
    add_common(run_cmd, run_opts);

    CommonOptions sweep_opts;
    std::string axis;
    CLI::App* sweep_cmd = app.add_subcommand("sweep", "sweep one parameter axis");
    add_common(sweep_cmd, sweep_opts);
    sweep_cmd->add_option("--axis", axis, "iterations | u | nu | lambda0");

    CommonOptions export_opts;
    std::string export_path;
    std::int64_t export_seed = 1;
    CLI::App* export_cmd =
        app.add_subcommand("export-env", "write the configured environment as JSON");
    export_cmd->add_option("--config", export_opts.config_path, "JSON experiment configuration")
        ->required();
    export_cmd->add_option("--out", export_path, "output file")->required();
    export_cmd->add_option("--seed", export_seed, "master seed for environment construction");

    CLI11_PARSE(app, argc, argv);

    try {
        if (run_cmd->parsed()) {
            const auto cfg = load_config(run_opts);
            report(irl::run_experiment(cfg), cfg);
        } else if (sweep_cmd->parsed()) {
            auto cfg = load_config(sweep_opts);
            if (!axis.empty()) cfg.sweep_axis = irl::axis_from_name(axis);
            report(irl::sweep(cfg), cfg);
        } else if (export_cmd->parsed()) {
            const auto cfg = irl::ExperimentConfig::from_json_file(export_opts.config_path);
            const auto bundle = irl::build_environment(
                cfg, irl::derive_seed(static_cast<std::uint64_t>(export_seed), 0));
            irl::save_mdp(bundle.mdp, export_path);
            std::cout << "wrote " << bundle.name << " environment to " << export_path << "\n";
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
