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

#include "irl/mdp.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "irl/numeric.hpp"
#include "irl/soft_dp.hpp"

namespace irl {

namespace {

constexpr double kRowSumTol = 1e-9;

}  // namespace

MdpModel::MdpModel(int n_states, int n_actions,
                   const std::vector<std::vector<std::vector<double>>>& transition,
                   std::vector<std::vector<double>> features, std::vector<double> initial_dist,
                   double discount, std::vector<int> terminal_states, bool features_normalized)
    : n_states_(n_states),
      n_actions_(n_actions),
      discount_(discount),
      features_normalized_(features_normalized),
      initial_dist_(std::move(initial_dist)),
      terminal_states_(std::move(terminal_states)) {
    if (n_states < 1 || n_actions < 1)
        throw std::invalid_argument("MdpModel: n_states and n_actions must be positive");
    if (discount <= 0.0 || discount >= 1.0)
        throw std::invalid_argument("MdpModel: discount must lie in (0,1)");
    if (static_cast<int>(transition.size()) != n_states ||
        static_cast<int>(features.size()) != n_states ||
        static_cast<int>(initial_dist_.size()) != n_states)
        throw std::invalid_argument("MdpModel: table sizes do not match n_states");

    n_features_ = static_cast<int>(features.front().size());
    features_.reserve(static_cast<std::size_t>(n_states) * n_features_);
    for (const auto& f : features) {
        if (static_cast<int>(f.size()) != n_features_)
            throw std::invalid_argument("MdpModel: ragged feature table");
        features_.insert(features_.end(), f.begin(), f.end());
    }

    rows_.resize(static_cast<std::size_t>(n_states) * n_actions);
    for (int s = 0; s < n_states; ++s) {
        if (static_cast<int>(transition[s].size()) != n_actions)
            throw std::invalid_argument("MdpModel: transition table missing actions");
        for (int a = 0; a < n_actions; ++a) {
            const auto& dense = transition[s][a];
            if (static_cast<int>(dense.size()) != n_states)
                throw std::invalid_argument("MdpModel: transition row has wrong length");
            auto& row = rows_[static_cast<std::size_t>(s) * n_actions + a];
            for (int sp = 0; sp < n_states; ++sp)
                if (dense[sp] != 0.0) row.push_back({sp, dense[sp]});
        }
    }

    terminal_mask_.assign(n_states, 0);
    for (int t : terminal_states_) {
        if (t < 0 || t >= n_states)
            throw std::invalid_argument("MdpModel: terminal state out of range");
        terminal_mask_[t] = 1;
    }

    validate();
}

double MdpModel::transition_prob(int state, int action, int next) const {
    for (const auto& e : row(state, action))
        if (e.next_state == next) return e.prob;
    return 0.0;
}

void MdpModel::validate() const {
    for (int s = 0; s < n_states_; ++s) {
        for (int a = 0; a < n_actions_; ++a) {
            double sum = 0.0;
            for (const auto& e : row(s, a)) {
                if (e.prob < 0.0)
                    throw std::invalid_argument("MdpModel: negative transition probability at state " +
                                                std::to_string(s));
                if (e.next_state < 0 || e.next_state >= n_states_)
                    throw std::invalid_argument("MdpModel: transition target out of range");
                sum += e.prob;
            }
            if (std::abs(sum - 1.0) > kRowSumTol)
                throw std::invalid_argument("MdpModel: transition row (" + std::to_string(s) + "," +
                                            std::to_string(a) + ") sums to " + std::to_string(sum));
        }
    }

    double init_sum = 0.0;
    for (double p : initial_dist_) {
        if (p < 0.0) throw std::invalid_argument("MdpModel: negative initial probability");
        init_sum += p;
    }
    if (std::abs(init_sum - 1.0) > kRowSumTol)
        throw std::invalid_argument("MdpModel: initial distribution sums to " +
                                    std::to_string(init_sum));

    for (double f : features_)
        if (!std::isfinite(f)) throw std::invalid_argument("MdpModel: non-finite feature value");

    if (features_normalized_) {
        const double upper = 1.0 - discount_ + 1e-12;
        for (double f : features_)
            if (f < -1e-12 || f > upper)
                throw std::invalid_argument("MdpModel: normalized feature outside [0, 1-discount]");
    }
}

std::vector<double> feature_count(std::span<const int> states, const MdpModel& mdp) {
    std::vector<double> total(mdp.n_features(), 0.0);
    double weight = 1.0;
    for (int s : states) {
        if (s < 0 || s >= mdp.n_states())
            throw std::invalid_argument("feature_count: invalid trajectory, state " +
                                        std::to_string(s) + " out of range");
        const auto f = mdp.features(s);
        for (int i = 0; i < mdp.n_features(); ++i) total[i] += weight * f[i];
        weight *= mdp.discount();
    }
    return total;
}

Trajectory make_trajectory(std::vector<int> states, std::vector<int> actions,
                           const MdpModel& mdp) {
    if (states.empty()) throw std::invalid_argument("make_trajectory: empty state sequence");
    if (!actions.empty() && actions.size() != states.size() - 1)
        throw std::invalid_argument("make_trajectory: need |states| - 1 actions");
    for (int a : actions)
        if (a < 0 || a >= mdp.n_actions())
            throw std::invalid_argument("make_trajectory: action out of range");
    Trajectory t;
    t.feature_count = feature_count(states, mdp);
    t.states = std::move(states);
    t.actions = std::move(actions);
    return t;
}

double trajectory_reward(const RewardVector& theta, std::span<const double> fc) {
    if (theta.theta.size() != fc.size())
        throw std::invalid_argument("trajectory_reward: dimension mismatch");
    return dot(theta.theta, fc);
}

MdpModel normalize_features(const MdpModel& mdp) {
    if (mdp.features_normalized()) return mdp;

    const int d = mdp.n_features();
    std::vector<double> lo(d, std::numeric_limits<double>::infinity());
    std::vector<double> hi(d, -std::numeric_limits<double>::infinity());
    for (int s = 0; s < mdp.n_states(); ++s) {
        const auto f = mdp.features(s);
        for (int i = 0; i < d; ++i) {
            lo[i] = std::min(lo[i], f[i]);
            hi[i] = std::max(hi[i], f[i]);
        }
    }

    MdpModel out = mdp;
    const double scale_to = 1.0 - mdp.discount();
    for (int s = 0; s < mdp.n_states(); ++s) {
        double* f = out.features_.data() + static_cast<std::size_t>(s) * d;
        for (int i = 0; i < d; ++i) {
            const double range = hi[i] - lo[i];
            f[i] = range > 0.0 ? (f[i] - lo[i]) / range * scale_to : 0.0;
        }
    }
    out.features_normalized_ = true;
    out.validate();
    return out;
}

Trajectory sample_trajectory(const MdpModel& mdp, const SoftPolicy& policy, int horizon,
                             Rng& rng) {
    if (horizon < 1) throw std::invalid_argument("sample_trajectory: horizon must be >= 1");

    std::vector<int> states;
    std::vector<int> actions;
    states.reserve(horizon);
    int s = sample_categorical(mdp.initial_dist(), rng);
    states.push_back(s);
    while (static_cast<int>(states.size()) < horizon && !mdp.is_terminal(s)) {
        const int a = sample_categorical(policy.row(s), rng);
        const auto row = mdp.row(s, a);
        std::vector<double> probs(row.size());
        for (std::size_t i = 0; i < row.size(); ++i) probs[i] = row[i].prob;
        const int branch = sample_categorical(probs, rng);
        s = row[branch].next_state;
        actions.push_back(a);
        states.push_back(s);
    }
    return make_trajectory(std::move(states), std::move(actions), mdp);
}

}  // namespace irl
