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
// Shared fixtures: tiny MDP builders and enumeration-based oracles that stay
// independent of the dynamic-programming code they check.

#ifndef IRL_TESTS_TEST_UTIL_HPP_
#define IRL_TESTS_TEST_UTIL_HPP_

#include <cmath>
#include <map>
#include <vector>

#include "irl/mdp.hpp"
#include "irl/rng.hpp"
#include "irl/soft_dp.hpp"

namespace irl::test {

using DenseTransitions = std::vector<std::vector<std::vector<double>>>;

inline DenseTransitions zero_transitions(int n_states, int n_actions) {
    return DenseTransitions(
        n_states, std::vector<std::vector<double>>(n_actions, std::vector<double>(n_states, 0.0)));
}

// Single state, `n_actions` self-loop actions, feature value `feature`.
inline MdpModel single_state_mdp(double discount, int n_actions = 1, double feature = 0.0) {
    auto p = zero_transitions(1, n_actions);
    for (int a = 0; a < n_actions; ++a) p[0][a][0] = 1.0;
    return MdpModel(1, n_actions, p, {{feature}}, {1.0}, discount, {}, true);
}

// Two states alternating deterministically under the single action.
inline MdpModel alternator_mdp(double discount) {
    auto p = zero_transitions(2, 1);
    p[0][0][1] = 1.0;
    p[1][0][0] = 1.0;
    return MdpModel(2, 1, p, {{1.0 - discount, 0.0}, {0.0, 1.0 - discount}}, {1.0, 0.0}, discount,
                    {}, true);
}

// Random MDP with deterministic dynamics and a one-hot initial state. The
// trajectory-level maximum-entropy factorization is exact on these.
inline MdpModel random_deterministic_mdp(int n_states, int n_actions, int n_features, double discount,
                                         Rng& rng) {
    auto p = zero_transitions(n_states, n_actions);
    for (int s = 0; s < n_states; ++s)
        for (int a = 0; a < n_actions; ++a)
            p[s][a][static_cast<int>(uniform01(rng) * n_states) % n_states] = 1.0;
    std::vector<std::vector<double>> features(n_states, std::vector<double>(n_features));
    for (auto& f : features)
        for (double& x : f) x = uniform01(rng) * (1.0 - discount);
    std::vector<double> initial(n_states, 0.0);
    initial[static_cast<int>(uniform01(rng) * n_states) % n_states] = 1.0;
    return MdpModel(n_states, n_actions, p, std::move(features), std::move(initial), discount, {},
                    true);
}

// Random MDP with stochastic rows (each with 1-2 successors).
inline MdpModel random_stochastic_mdp(int n_states, int n_actions, int n_features, double discount,
                                      Rng& rng) {
    auto p = zero_transitions(n_states, n_actions);
    for (int s = 0; s < n_states; ++s)
        for (int a = 0; a < n_actions; ++a) {
            const int s1 = static_cast<int>(uniform01(rng) * n_states) % n_states;
            const int s2 = static_cast<int>(uniform01(rng) * n_states) % n_states;
            if (s1 == s2) {
                p[s][a][s1] = 1.0;
            } else {
                const double w = 0.1 + 0.8 * uniform01(rng);
                p[s][a][s1] = w;
                p[s][a][s2] = 1.0 - w;
            }
        }
    std::vector<std::vector<double>> features(n_states, std::vector<double>(n_features));
    for (auto& f : features)
        for (double& x : f) x = uniform01(rng) * (1.0 - discount);
    std::vector<double> initial(n_states);
    double sum = 0.0;
    for (double& x : initial) sum += (x = 0.1 + uniform01(rng));
    for (double& x : initial) x /= sum;
    return MdpModel(n_states, n_actions, p, std::move(features), std::move(initial), discount, {},
                    true);
}

inline std::vector<double> random_theta(int d, double magnitude, Rng& rng) {
    std::vector<double> theta(d);
    for (double& x : theta) x = (2.0 * uniform01(rng) - 1.0) * magnitude;
    return theta;
}

// Path key: states then actions.
using PathKey = std::vector<int>;

inline PathKey path_key(const Trajectory& t) {
    PathKey key = t.states;
    key.insert(key.end(), t.actions.begin(), t.actions.end());
    return key;
}

// Enumerated maximum-entropy distribution exp(theta^T f) * dyn / Z.
inline std::map<PathKey, double> maxent_path_distribution(
    const RewardVector& theta,
    const std::vector<std::pair<Trajectory, double>>& enumerated) {
    double max_log = -1e300;
    std::vector<double> logs(enumerated.size());
    for (std::size_t i = 0; i < enumerated.size(); ++i) {
        logs[i] = trajectory_reward(theta, enumerated[i].first.feature_count) +
                  std::log(enumerated[i].second);
        max_log = std::max(max_log, logs[i]);
    }
    double z = 0.0;
    for (double l : logs) z += std::exp(l - max_log);
    std::map<PathKey, double> dist;
    for (std::size_t i = 0; i < enumerated.size(); ++i)
        dist[path_key(enumerated[i].first)] += std::exp(logs[i] - max_log) / z;
    return dist;
}

// Distribution induced by rolling out a time-indexed policy, computed from
// the same enumeration (prod_k pi_k(a_k|s_k) * dynamics).
inline std::map<PathKey, double> rollout_path_distribution(
    const FiniteHorizonPolicy& policy,
    const std::vector<std::pair<Trajectory, double>>& enumerated) {
    std::map<PathKey, double> dist;
    for (const auto& [traj, dyn_prob] : enumerated) {
        double prob = dyn_prob;
        for (std::size_t k = 0; k < traj.actions.size(); ++k)
            prob *= policy.steps[k].prob(traj.states[k], traj.actions[k]);
        dist[path_key(traj)] += prob;
    }
    return dist;
}

// Same for a stationary policy.
inline std::map<PathKey, double> rollout_path_distribution(
    const SoftPolicy& policy,
    const std::vector<std::pair<Trajectory, double>>& enumerated) {
    std::map<PathKey, double> dist;
    for (const auto& [traj, dyn_prob] : enumerated) {
        double prob = dyn_prob;
        for (std::size_t k = 0; k < traj.actions.size(); ++k)
            prob *= policy.prob(traj.states[k], traj.actions[k]);
        dist[path_key(traj)] += prob;
    }
    return dist;
}

inline double total_variation(const std::map<PathKey, double>& a,
                              const std::map<PathKey, double>& b) {
    double tv = 0.0;
    for (const auto& [key, pa] : a) {
        const auto it = b.find(key);
        tv += std::abs(pa - (it == b.end() ? 0.0 : it->second));
    }
    for (const auto& [key, pb] : b)
        if (!a.count(key)) tv += pb;
    return 0.5 * tv;
}

// sum_zeta P(zeta) f_zeta for an enumerated distribution.
inline std::vector<double> distribution_feature_count(
    const MdpModel& mdp, const std::map<PathKey, double>& dist,
    const std::vector<std::pair<Trajectory, double>>& enumerated) {
    std::vector<double> f(mdp.n_features(), 0.0);
    std::map<PathKey, const Trajectory*> lookup;
    for (const auto& [traj, prob] : enumerated) lookup[path_key(traj)] = &traj;
    for (const auto& [key, prob] : dist) {
        const auto& fc = lookup.at(key)->feature_count;
        for (int i = 0; i < mdp.n_features(); ++i) f[i] += prob * fc[i];
    }
    return f;
}

}  // namespace irl::test

#endif  // IRL_TESTS_TEST_UTIL_HPP_
