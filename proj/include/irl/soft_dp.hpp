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
// Maximum-entropy dynamic programming: the backward pass producing the soft
// policy, the forward pass producing discounted state visitation frequencies,
// expected feature counts, trajectory log-probabilities, and an exhaustive
// trajectory enumerator used as a test oracle.

#ifndef IRL_SOFT_DP_HPP_
#define IRL_SOFT_DP_HPP_

#include <utility>
#include <vector>

#include "irl/mdp.hpp"

namespace irl {

// Stochastic policy pi(a|s) from the soft (log-sum-exp) Bellman recursion,
// together with the per-state log-partition values it was read off from.
class SoftPolicy {
  public:
    SoftPolicy(int n_states, int n_actions)
        : n_states_(n_states), n_actions_(n_actions),
          action_probs_(static_cast<std::size_t>(n_states) * n_actions, 0.0),
          soft_values_(n_states, 0.0) {}

    int n_states() const { return n_states_; }
    int n_actions() const { return n_actions_; }

    double prob(int state, int action) const {
        return action_probs_[static_cast<std::size_t>(state) * n_actions_ + action];
    }
    std::span<const double> row(int state) const {
        return {action_probs_.data() + static_cast<std::size_t>(state) * n_actions_,
                static_cast<std::size_t>(n_actions_)};
    }
    std::span<double> mutable_row(int state) {
        return {action_probs_.data() + static_cast<std::size_t>(state) * n_actions_,
                static_cast<std::size_t>(n_actions_)};
    }

    const std::vector<double>& soft_values() const { return soft_values_; }
    std::vector<double>& mutable_soft_values() { return soft_values_; }

    const std::vector<double>& theta_snapshot() const { return theta_snapshot_; }
    void set_theta_snapshot(std::vector<double> theta) { theta_snapshot_ = std::move(theta); }

    bool converged() const { return converged_; }
    int sweeps_used() const { return sweeps_used_; }
    void set_convergence(bool converged, int sweeps) {
        converged_ = converged;
        sweeps_used_ = sweeps;
    }

  private:
    int n_states_;
    int n_actions_;
    std::vector<double> action_probs_;  // [s * n_actions + a]
    std::vector<double> soft_values_;   // V(s)
    std::vector<double> theta_snapshot_;
    bool converged_ = false;
    int sweeps_used_ = 0;
};

// Discounted expected state visitations rho(s) = sum_{t<H} gamma^t P(s_t = s).
struct VisitationFrequencies {
    std::vector<double> rho;
    int horizon_used = 0;
};

// Time-indexed soft policy for a fixed horizon. Step k in 0..horizon-2 holds
// the action distribution used at the k-th transition; log_partition is
// log Z(theta) over all length-`horizon` trajectories weighted by
// exp(theta^T f) times their dynamics probability.
struct FiniteHorizonPolicy {
    int horizon = 0;
    std::vector<SoftPolicy> steps;
    double log_partition = 0.0;
};

// Discounted soft value iteration in log space:
//   Q(s,a) = theta^T f(s) + gamma * sum_{s'} p(s'|s,a) V(s')
//   V(s)   = log sum_a exp(Q(s,a)),    V(terminal) = 0
// until the max-norm change in V drops below `tol` or `max_sweeps` sweeps.
// Non-convergence is not an error; the policy carries a converged() flag.
SoftPolicy backward_pass(const MdpModel& mdp, const RewardVector& theta, double tol = 1e-8,
                         int max_sweeps = 1000);

// Exact finite-horizon counterpart. The partition recursion
//   Z_k(s) = exp(gamma^k theta^T f(s)) * sum_a sum_{s'} p(s'|s,a) Z_{k+1}(s')
// is evaluated in log space; the step-k policy is its action decomposition.
// For deterministic dynamics the induced path distribution is exactly
// exp(theta^T f_zeta) * prod p / Z over length-`horizon` paths.
FiniteHorizonPolicy finite_horizon_backward_pass(const MdpModel& mdp, const RewardVector& theta,
                                                 int horizon);

// d_0 = initial_dist; d_{t+1}(s') = sum_{s,a} d_t(s) pi(a|s) p(s'|s,a);
// rho(s) = sum_{t<horizon} gamma^t d_t(s).
VisitationFrequencies forward_pass(const MdpModel& mdp, const SoftPolicy& policy, int horizon);

// Same propagation under the time-indexed policy.
VisitationFrequencies finite_horizon_forward_pass(const MdpModel& mdp,
                                                  const FiniteHorizonPolicy& policy);

// f = sum_s rho(s) f(s)
std::vector<double> expected_feature_count(const MdpModel& mdp, const VisitationFrequencies& rho);

// theta^T f_zeta - log_partition + sum_t log p(s_{t+1}|s_t,a_t). Requires the
// trajectory to carry actions. A zero-probability step yields -infinity.
double trajectory_log_prob(const MdpModel& mdp, const RewardVector& theta,
                           const Trajectory& trajectory, double log_partition);

// All feasible state/action paths of exactly `horizon` transitions (so
// horizon + 1 states) starting from every state with positive initial
// probability, paired with their dynamics probability
// initial(s_1) * prod_t p(s_{t+1}|s_t,a_t). Throws when the action tree
// (n_actions^horizon) or the produced path count exceeds `cap`.
std::vector<std::pair<Trajectory, double>> enumerate_trajectories(const MdpModel& mdp, int horizon,
                                                                  std::int64_t cap = 1000000);

}  // namespace irl

#endif  // IRL_SOFT_DP_HPP_
