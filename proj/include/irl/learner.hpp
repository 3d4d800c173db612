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
// Reward learners: MaxEnt-IRL, the semi-supervised MESSI variant with its
// pairwise penalty, and the EM-weighted MaxEnt baseline.

#ifndef IRL_LEARNER_HPP_
#define IRL_LEARNER_HPP_

#include <cstdint>
#include <vector>

#include "irl/soft_dp.hpp"
#include "irl/training_set.hpp"

namespace irl {

struct LearnerConfig {
    int iterations = 100;      // T
    double theta_max = 500.0;  // infinity-norm bound on theta
    double lambda0 = 0.05;     // raw regularizer; effective weight is lambda0/theta_max
    double step_size = 1.0;
    std::uint64_t seed = 0;    // seeds the theta_0 draw
    int horizon = 0;           // forward-pass horizon (the environment's trajectory length)
    double vi_tol = 1e-8;
    int vi_max_sweeps = 1000;

    void validate() const;
};

// One gradient-ascent iterate. `f_t` is the expected feature count of the
// policy induced by this iterate's theta; entry 0 describes theta_0.
struct IterRecord {
    int iteration = 0;
    std::vector<double> theta;
    std::vector<double> f_t;
    double feature_gap = 0.0;  // ||f* - f_t||_2
    double penalty = 0.0;      // pairwise penalty at theta
};

struct RunResult {
    RewardVector theta;
    std::vector<IterRecord> history;  // iterations + 1 entries, including theta_0
};

// Pairwise penalty over all ordered trajectory pairs:
//   R(theta) = 1/(2(l+u)) sum_{z,z'} s(z,z') (theta^T (f_z - f_z'))^2
double pairwise_penalty(const RewardVector& theta, const TrainingSet& ts);

// grad R = 1/(l+u) sum_{z,z'} s(z,z') (theta^T df) df, df = f_z - f_z'.
std::vector<double> penalty_gradient(const RewardVector& theta, const TrainingSet& ts);

// Rescales theta into the infinity-norm ball of radius theta_max; identity
// when already inside.
std::vector<double> project_inf_ball(std::span<const double> theta, double theta_max);

// theta' = project(theta + step * [(f* - f_t) - (lambda0/theta_max) grad R]).
// With lambda0 = 0 this is exactly the MaxEnt-IRL ascent step.
RewardVector messi_step(const RewardVector& theta_t, const TrainingSet& ts,
                        std::span<const double> f_t, const LearnerConfig& cfg);

// Full MESSI loop: theta_0 uniform per-component in [-1,1] from cfg.seed,
// then `iterations` rounds of backward pass -> forward pass -> expected
// feature count -> messi_step.
RunResult run_messi(const MdpModel& mdp, const TrainingSet& ts, const LearnerConfig& cfg);

// MaxEnt-IRL: run_messi with no unsupervised data and lambda0 = 0.
RunResult run_maxent(const MdpModel& mdp, const std::vector<Trajectory>& expert,
                     const LearnerConfig& cfg);

struct EmRoundRecord {
    int round = 0;
    std::vector<double> weights;   // over the union Sigma, sums to 1
    std::vector<double> f_target;  // sum_z w(z) f_z used for this round's steps
};

struct EmRunResult {
    RewardVector theta;
    std::vector<IterRecord> history;
    std::vector<EmRoundRecord> rounds;
};

// EM-weighted MaxEnt baseline. Each round: (E) weight every trajectory in
// Sigma by its probability under the current theta, normalized over Sigma;
// (M) `eta` gradient steps toward the weighted mean feature count. All
// trajectories must carry actions. Throws when every trajectory is
// dynamically infeasible.
EmRunResult em_maxent(const MdpModel& mdp, const TrainingSet& ts, const LearnerConfig& cfg,
                      int eta, int rounds);

}  // namespace irl

#endif  // IRL_LEARNER_HPP_
