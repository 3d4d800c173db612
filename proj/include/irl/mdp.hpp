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

#ifndef IRL_MDP_HPP_
#define IRL_MDP_HPP_

#include <cstdint>
#include <span>
#include <vector>

#include "irl/rng.hpp"

namespace irl {

// One sparse entry of a transition row p(.|s,a).
struct TransitionEntry {
    int next_state;
    double prob;
};

// Tabular MDP with linear state features. Immutable after construction;
// feature normalization produces a new model rather than mutating in place.
//
// Transition rows are stored sparsely per (state, action). Terminal states
// are absorbing: every action self-loops with probability 1 and the state's
// feature vector is zero, so finite- and infinite-horizon uses agree.
class MdpModel {
  public:
    // `transition` is dense, indexed [s][a][s']. `features` is [s][i].
    MdpModel(int n_states, int n_actions,
             const std::vector<std::vector<std::vector<double>>>& transition,
             std::vector<std::vector<double>> features,
             std::vector<double> initial_dist, double discount,
             std::vector<int> terminal_states = {}, bool features_normalized = false);

    int n_states() const { return n_states_; }
    int n_actions() const { return n_actions_; }
    int n_features() const { return n_features_; }
    double discount() const { return discount_; }
    bool features_normalized() const { return features_normalized_; }

    std::span<const TransitionEntry> row(int state, int action) const {
        return rows_[static_cast<std::size_t>(state) * n_actions_ + action];
    }
    // Dense lookup; linear scan of the (short) sparse row.
    double transition_prob(int state, int action, int next) const;

    std::span<const double> features(int state) const {
        return {features_.data() + static_cast<std::size_t>(state) * n_features_,
                static_cast<std::size_t>(n_features_)};
    }
    std::span<const double> initial_dist() const { return initial_dist_; }

    bool is_terminal(int state) const { return terminal_mask_[state]; }
    const std::vector<int>& terminal_states() const { return terminal_states_; }

    // Throws std::invalid_argument when a row does not sum to 1 within 1e-9,
    // has negative entries, the initial distribution is off, or (for a
    // normalized model) a feature falls outside [0, 1-discount].
    void validate() const;

  private:
    friend MdpModel normalize_features(const MdpModel& mdp);

    int n_states_;
    int n_actions_;
    int n_features_;
    double discount_;
    bool features_normalized_;
    std::vector<std::vector<TransitionEntry>> rows_;  // [s * n_actions + a]
    std::vector<double> features_;                    // [s * n_features + i]
    std::vector<double> initial_dist_;
    std::vector<int> terminal_states_;
    std::vector<char> terminal_mask_;
};

// State/action path with its cached discounted feature count.
struct Trajectory {
    std::vector<int> states;
    std::vector<int> actions;  // empty when the demonstration carries no actions
    std::vector<double> feature_count;

    std::size_t length() const { return states.size(); }
};

// Reward parameter vector with its infinity-norm bound.
struct RewardVector {
    std::vector<double> theta;
    double theta_max = 0.0;

    int dim() const { return static_cast<int>(theta.size()); }
};

// Discounted feature count sum_t gamma^t f(s_t), t = 0 at the first state.
// Requires a normalized model so the result is bounded by 1 per component.
std::vector<double> feature_count(std::span<const int> states, const MdpModel& mdp);

// Builds a trajectory and caches its feature count. Checks state/action
// ranges and |actions| == |states| - 1 when actions are present.
Trajectory make_trajectory(std::vector<int> states, std::vector<int> actions,
                           const MdpModel& mdp);

// theta^T f
double trajectory_reward(const RewardVector& theta, std::span<const double> feature_count);

// Per-dimension min-max rescale of the raw features into [0,1] (constant
// dimensions map to 0), then multiplied by (1-discount). Calling it on an
// already-normalized model returns the model unchanged.
MdpModel normalize_features(const MdpModel& mdp);

class SoftPolicy;  // soft_dp.hpp

// Rolls out the policy: s_1 ~ initial_dist, a_t ~ pi(.|s_t), s_{t+1} ~
// p(.|s_t,a_t). Stops after `horizon` states or upon entering a terminal
// state. Deterministic given the engine state.
Trajectory sample_trajectory(const MdpModel& mdp, const SoftPolicy& policy, int horizon,
                             Rng& rng);

}  // namespace irl

#endif  // IRL_MDP_HPP_
