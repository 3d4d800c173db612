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

#include "irl/learner.hpp"

#include <cmath>
#include <stdexcept>

#include "irl/numeric.hpp"
#include "irl/rng.hpp"

namespace irl {

void LearnerConfig::validate() const {
    if (iterations < 1) throw std::invalid_argument("LearnerConfig: iterations must be >= 1");
    if (theta_max <= 0.0) throw std::invalid_argument("LearnerConfig: theta_max must be positive");
    if (lambda0 < 0.0) throw std::invalid_argument("LearnerConfig: lambda0 must be >= 0");
    if (horizon < 1) throw std::invalid_argument("LearnerConfig: horizon must be >= 1");
    if (vi_tol <= 0.0) throw std::invalid_argument("LearnerConfig: vi_tol must be positive");
}

double pairwise_penalty(const RewardVector& theta, const TrainingSet& ts) {
    const int n = ts.size();
    if (n == 0) throw std::invalid_argument("pairwise_penalty: empty trajectory set");
    std::vector<double> rewards(n);
    for (int i = 0; i < n; ++i) rewards[i] = dot(theta.theta, ts.trajectory(i).feature_count);

    double sum = 0.0;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            const double diff = rewards[i] - rewards[j];
            sum += ts.similarity(i, j) * diff * diff;
        }
    return sum / (2.0 * n);
}

std::vector<double> penalty_gradient(const RewardVector& theta, const TrainingSet& ts) {
    const int n = ts.size();
    if (n == 0) throw std::invalid_argument("penalty_gradient: empty trajectory set");
    const int d = theta.dim();
    std::vector<double> rewards(n);
    for (int i = 0; i < n; ++i) rewards[i] = dot(theta.theta, ts.trajectory(i).feature_count);

    std::vector<double> grad(d, 0.0);
    for (int i = 0; i < n; ++i) {
        const auto& fi = ts.trajectory(i).feature_count;
        for (int j = 0; j < n; ++j) {
            const double w = ts.similarity(i, j) * (rewards[i] - rewards[j]);
            if (w == 0.0) continue;
            const auto& fj = ts.trajectory(j).feature_count;
            for (int k = 0; k < d; ++k) grad[k] += w * (fi[k] - fj[k]);
        }
    }
    for (double& g : grad) g /= static_cast<double>(n);
    return grad;
}

std::vector<double> project_inf_ball(std::span<const double> theta, double theta_max) {
    if (theta_max <= 0.0) throw std::invalid_argument("project_inf_ball: theta_max must be positive");
    std::vector<double> out(theta.begin(), theta.end());
    const double norm = inf_norm(out);
    if (norm > theta_max) {
        const double scale = theta_max / norm;
        for (double& x : out) x *= scale;
    }
    return out;
}

RewardVector messi_step(const RewardVector& theta_t, const TrainingSet& ts,
                        std::span<const double> f_t, const LearnerConfig& cfg) {
    const int d = theta_t.dim();
    if (static_cast<int>(f_t.size()) != d || static_cast<int>(ts.expert_mean_fc().size()) != d)
        throw std::invalid_argument("messi_step: dimension mismatch");

    std::vector<double> direction(d);
    const auto& f_star = ts.expert_mean_fc();
    for (int k = 0; k < d; ++k) direction[k] = f_star[k] - f_t[k];

    if (cfg.lambda0 > 0.0) {
        const auto grad = penalty_gradient(theta_t, ts);
        const double lambda = cfg.lambda0 / cfg.theta_max;
        for (int k = 0; k < d; ++k) direction[k] -= lambda * grad[k];
    }

    std::vector<double> updated(d);
    for (int k = 0; k < d; ++k) updated[k] = theta_t.theta[k] + cfg.step_size * direction[k];
    return {project_inf_ball(updated, cfg.theta_max), cfg.theta_max};
}

namespace {

std::vector<double> random_theta0(int d, double theta_max, std::uint64_t seed) {
    Rng rng(derive_seed(seed, 0));
    std::vector<double> theta(d);
    for (double& x : theta) x = uniform_in(rng, -1.0, 1.0);
    // theta_max >= 1 in all experiments, but stay inside the ball regardless
    return project_inf_ball(theta, theta_max);
}

IterRecord make_record(int iteration, const RewardVector& theta, std::vector<double> f_t,
                       const TrainingSet& ts, double lambda0) {
    IterRecord rec;
    rec.iteration = iteration;
    rec.theta = theta.theta;
    rec.feature_gap = l2_norm(subtract(ts.expert_mean_fc(), f_t));
    rec.f_t = std::move(f_t);
    rec.penalty = lambda0 > 0.0 ? pairwise_penalty(theta, ts) : 0.0;
    return rec;
}

}  // namespace

RunResult run_messi(const MdpModel& mdp, const TrainingSet& ts, const LearnerConfig& cfg) {
    cfg.validate();
    if (!mdp.features_normalized())
        throw std::invalid_argument("run_messi: model features must be normalized");

    RewardVector theta{random_theta0(mdp.n_features(), cfg.theta_max, cfg.seed), cfg.theta_max};

    RunResult result;
    result.history.reserve(cfg.iterations + 1);
    for (int t = 0; t < cfg.iterations; ++t) {
        const auto policy = backward_pass(mdp, theta, cfg.vi_tol, cfg.vi_max_sweeps);
        const auto rho = forward_pass(mdp, policy, cfg.horizon);
        auto f_t = expected_feature_count(mdp, rho);
        result.history.push_back(make_record(t, theta, f_t, ts, cfg.lambda0));
        theta = messi_step(theta, ts, f_t, cfg);
    }
    // score the final iterate too
    const auto policy = backward_pass(mdp, theta, cfg.vi_tol, cfg.vi_max_sweeps);
    const auto rho = forward_pass(mdp, policy, cfg.horizon);
    result.history.push_back(
        make_record(cfg.iterations, theta, expected_feature_count(mdp, rho), ts, cfg.lambda0));
    result.theta = std::move(theta);
    return result;
}

RunResult run_maxent(const MdpModel& mdp, const std::vector<Trajectory>& expert,
                     const LearnerConfig& cfg) {
    LearnerConfig maxent_cfg = cfg;
    maxent_cfg.lambda0 = 0.0;
    // Similarity choice is irrelevant at lambda0 = 0.
    TrainingSet ts(expert, {}, SimilaritySpec{SimilaritySpec::Kind::kRbf, 1.0});
    return run_messi(mdp, ts, maxent_cfg);
}

EmRunResult em_maxent(const MdpModel& mdp, const TrainingSet& ts, const LearnerConfig& cfg,
                      int eta, int rounds) {
    cfg.validate();
    if (eta < 1) throw std::invalid_argument("em_maxent: eta must be >= 1");
    if (rounds < 1) throw std::invalid_argument("em_maxent: rounds must be >= 1");
    if (!mdp.features_normalized())
        throw std::invalid_argument("em_maxent: model features must be normalized");

    const int n = ts.size();
    const int d = mdp.n_features();
    RewardVector theta{random_theta0(d, cfg.theta_max, cfg.seed), cfg.theta_max};

    EmRunResult result;
    int iteration = 0;
    for (int round = 0; round < rounds; ++round) {
        // E-step: w(z) proportional to P(z|theta). The log-partition cancels
        // in the normalization over Sigma, so it is not needed here.
        std::vector<double> log_w(n);
        for (int i = 0; i < n; ++i)
            log_w[i] = trajectory_log_prob(mdp, theta, ts.trajectory(i), 0.0);
        const double norm = log_sum_exp(log_w);
        if (!std::isfinite(norm))
            throw std::runtime_error("em_maxent: no trajectory is feasible under the dynamics");

        EmRoundRecord rec;
        rec.round = round;
        rec.weights.resize(n);
        rec.f_target.assign(d, 0.0);
        for (int i = 0; i < n; ++i) {
            rec.weights[i] = std::exp(log_w[i] - norm);
            const auto& fc = ts.trajectory(i).feature_count;
            for (int k = 0; k < d; ++k) rec.f_target[k] += rec.weights[i] * fc[k];
        }

        // M-step: eta ascent steps toward the weighted feature target.
        for (int step = 0; step < eta; ++step) {
            const auto policy = backward_pass(mdp, theta, cfg.vi_tol, cfg.vi_max_sweeps);
            const auto rho = forward_pass(mdp, policy, cfg.horizon);
            const auto f_t = expected_feature_count(mdp, rho);

            IterRecord it;
            it.iteration = iteration++;
            it.theta = theta.theta;
            it.f_t = f_t;
            it.feature_gap = l2_norm(subtract(rec.f_target, f_t));
            it.penalty = 0.0;
            result.history.push_back(std::move(it));

            std::vector<double> updated(d);
            for (int k = 0; k < d; ++k)
                updated[k] = theta.theta[k] + cfg.step_size * (rec.f_target[k] - f_t[k]);
            theta = {project_inf_ball(updated, cfg.theta_max), cfg.theta_max};
        }
        result.rounds.push_back(std::move(rec));
    }

    const auto policy = backward_pass(mdp, theta, cfg.vi_tol, cfg.vi_max_sweeps);
    const auto rho = forward_pass(mdp, policy, cfg.horizon);
    IterRecord it;
    it.iteration = iteration;
    it.theta = theta.theta;
    it.f_t = expected_feature_count(mdp, rho);
    it.feature_gap = l2_norm(subtract(result.rounds.back().f_target, it.f_t));
    result.history.push_back(std::move(it));
    result.theta = std::move(theta);
    return result;
}

}  // namespace irl
