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

#include "irl/soft_dp.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "irl/numeric.hpp"

namespace irl {

namespace {

// theta^T f(s) for every state.
std::vector<double> state_rewards(const MdpModel& mdp, const RewardVector& theta) {
    if (theta.dim() != mdp.n_features())
        throw std::invalid_argument("soft_dp: theta dimension does not match features");
    std::vector<double> r(mdp.n_states());
    for (int s = 0; s < mdp.n_states(); ++s) r[s] = dot(theta.theta, mdp.features(s));
    return r;
}

void fill_uniform_row(SoftPolicy& policy, int state) {
    auto row = policy.mutable_row(state);
    const double p = 1.0 / static_cast<double>(row.size());
    for (double& x : row) x = p;
}

}  // namespace

SoftPolicy backward_pass(const MdpModel& mdp, const RewardVector& theta, double tol,
                         int max_sweeps) {
    if (tol <= 0.0) throw std::invalid_argument("backward_pass: tol must be positive");
    const auto reward = state_rewards(mdp, theta);
    const int S = mdp.n_states();
    const int A = mdp.n_actions();

    std::vector<double> value(S, 0.0);
    std::vector<double> next_value(S, 0.0);
    std::vector<double> q(A, 0.0);
    bool converged = false;
    int sweeps = 0;

    while (sweeps < max_sweeps) {
        ++sweeps;
        double max_change = 0.0;
        for (int s = 0; s < S; ++s) {
            if (mdp.is_terminal(s)) {
                next_value[s] = 0.0;
                continue;
            }
            for (int a = 0; a < A; ++a) {
                double expected = 0.0;
                for (const auto& e : mdp.row(s, a)) expected += e.prob * value[e.next_state];
                q[a] = reward[s] + mdp.discount() * expected;
            }
            next_value[s] = log_sum_exp(q);
            max_change = std::max(max_change, std::abs(next_value[s] - value[s]));
        }
        value.swap(next_value);
        if (max_change < tol) {
            converged = true;
            break;
        }
    }

    SoftPolicy policy(S, A);
    policy.mutable_soft_values() = value;
    for (int s = 0; s < S; ++s) {
        if (mdp.is_terminal(s)) {
            policy.mutable_soft_values()[s] = 0.0;
            fill_uniform_row(policy, s);  // never consulted; terminals stop rollouts
            continue;
        }
        for (int a = 0; a < A; ++a) {
            double expected = 0.0;
            for (const auto& e : mdp.row(s, a)) expected += e.prob * value[e.next_state];
            q[a] = reward[s] + mdp.discount() * expected;
        }
        const double v = log_sum_exp(q);
        policy.mutable_soft_values()[s] = v;
        auto row = policy.mutable_row(s);
        for (int a = 0; a < A; ++a) row[a] = std::exp(q[a] - v);
    }
    policy.set_theta_snapshot(theta.theta);
    policy.set_convergence(converged, sweeps);
    return policy;
}

FiniteHorizonPolicy finite_horizon_backward_pass(const MdpModel& mdp, const RewardVector& theta,
                                                 int horizon) {
    if (horizon < 1) throw std::invalid_argument("finite_horizon_backward_pass: horizon < 1");
    const auto reward = state_rewards(mdp, theta);
    const int S = mdp.n_states();
    const int A = mdp.n_actions();

    FiniteHorizonPolicy out;
    out.horizon = horizon;

    // value[k](s) = log of the partition over trajectory suffixes that start
    // in s at time k and run to time horizon-1.
    std::vector<double> value(S);
    double gamma_k = std::pow(mdp.discount(), horizon - 1);
    for (int s = 0; s < S; ++s) value[s] = gamma_k * reward[s];

    std::vector<double> q(A);
    std::vector<double> branch_logs;
    std::vector<double> branch_probs;
    out.steps.assign(horizon > 1 ? horizon - 1 : 0, SoftPolicy(S, A));

    for (int k = horizon - 2; k >= 0; --k) {
        gamma_k = std::pow(mdp.discount(), k);
        SoftPolicy& step = out.steps[k];
        std::vector<double> new_value(S);
        for (int s = 0; s < S; ++s) {
            for (int a = 0; a < A; ++a) {
                const auto row = mdp.row(s, a);
                branch_logs.resize(row.size());
                branch_probs.resize(row.size());
                for (std::size_t i = 0; i < row.size(); ++i) {
                    branch_logs[i] = value[row[i].next_state];
                    branch_probs[i] = row[i].prob;
                }
                q[a] = gamma_k * reward[s] + log_sum_exp_weighted(branch_logs, branch_probs);
            }
            new_value[s] = log_sum_exp(q);
            auto prow = step.mutable_row(s);
            for (int a = 0; a < A; ++a) prow[a] = std::exp(q[a] - new_value[s]);
        }
        step.mutable_soft_values() = new_value;
        step.set_theta_snapshot(theta.theta);
        step.set_convergence(true, 1);
        value = std::move(new_value);
    }

    branch_logs.assign(value.begin(), value.end());
    branch_probs.assign(mdp.initial_dist().begin(), mdp.initial_dist().end());
    out.log_partition = log_sum_exp_weighted(branch_logs, branch_probs);
    return out;
}

VisitationFrequencies forward_pass(const MdpModel& mdp, const SoftPolicy& policy, int horizon) {
    if (horizon < 1) throw std::invalid_argument("forward_pass: horizon must be >= 1");
    const int S = mdp.n_states();
    const int A = mdp.n_actions();

    std::vector<double> d(mdp.initial_dist().begin(), mdp.initial_dist().end());
    std::vector<double> d_next(S);
    VisitationFrequencies out;
    out.rho.assign(S, 0.0);
    out.horizon_used = horizon;

    double gamma_t = 1.0;
    for (int t = 0; t < horizon; ++t) {
        for (int s = 0; s < S; ++s) out.rho[s] += gamma_t * d[s];
        gamma_t *= mdp.discount();
        if (t + 1 == horizon) break;
        std::fill(d_next.begin(), d_next.end(), 0.0);
        for (int s = 0; s < S; ++s) {
            if (d[s] == 0.0) continue;
            for (int a = 0; a < A; ++a) {
                const double w = d[s] * policy.prob(s, a);
                if (w == 0.0) continue;
                for (const auto& e : mdp.row(s, a)) d_next[e.next_state] += w * e.prob;
            }
        }
        d.swap(d_next);
    }
    return out;
}

VisitationFrequencies finite_horizon_forward_pass(const MdpModel& mdp,
                                                  const FiniteHorizonPolicy& policy) {
    const int S = mdp.n_states();
    const int A = mdp.n_actions();
    const int horizon = policy.horizon;

    std::vector<double> d(mdp.initial_dist().begin(), mdp.initial_dist().end());
    std::vector<double> d_next(S);
    VisitationFrequencies out;
    out.rho.assign(S, 0.0);
    out.horizon_used = horizon;

    double gamma_t = 1.0;
    for (int t = 0; t < horizon; ++t) {
        for (int s = 0; s < S; ++s) out.rho[s] += gamma_t * d[s];
        gamma_t *= mdp.discount();
        if (t + 1 == horizon) break;
        const SoftPolicy& step = policy.steps[t];
        std::fill(d_next.begin(), d_next.end(), 0.0);
        for (int s = 0; s < S; ++s) {
            if (d[s] == 0.0) continue;
            for (int a = 0; a < A; ++a) {
                const double w = d[s] * step.prob(s, a);
                if (w == 0.0) continue;
                for (const auto& e : mdp.row(s, a)) d_next[e.next_state] += w * e.prob;
            }
        }
        d.swap(d_next);
    }
    return out;
}

std::vector<double> expected_feature_count(const MdpModel& mdp,
                                           const VisitationFrequencies& rho) {
    if (static_cast<int>(rho.rho.size()) != mdp.n_states())
        throw std::invalid_argument("expected_feature_count: dimension mismatch");
    std::vector<double> f(mdp.n_features(), 0.0);
    for (int s = 0; s < mdp.n_states(); ++s) {
        if (rho.rho[s] == 0.0) continue;
        const auto fs = mdp.features(s);
        for (int i = 0; i < mdp.n_features(); ++i) f[i] += rho.rho[s] * fs[i];
    }
    return f;
}

double trajectory_log_prob(const MdpModel& mdp, const RewardVector& theta,
                           const Trajectory& trajectory, double log_partition) {
    if (trajectory.states.size() > 1 && trajectory.actions.empty())
        throw std::invalid_argument("trajectory_log_prob: trajectory carries no actions");
    double log_dynamics = 0.0;
    for (std::size_t t = 0; t + 1 < trajectory.states.size(); ++t) {
        const double p =
            mdp.transition_prob(trajectory.states[t], trajectory.actions[t],
                                trajectory.states[t + 1]);
        if (p <= 0.0) return kNegInf;  // infeasible step
        log_dynamics += std::log(p);
    }
    return trajectory_reward(theta, trajectory.feature_count) - log_partition + log_dynamics;
}

namespace {

void enumerate_from(const MdpModel& mdp, int horizon, std::int64_t cap, std::vector<int>& states,
                    std::vector<int>& actions, double prob,
                    std::vector<std::pair<Trajectory, double>>& out) {
    if (static_cast<int>(actions.size()) == horizon) {
        if (static_cast<std::int64_t>(out.size()) >= cap)
            throw std::invalid_argument("enumerate_trajectories: path count exceeds cap");
        out.emplace_back(make_trajectory(states, actions, mdp), prob);
        return;
    }
    const int s = states.back();
    for (int a = 0; a < mdp.n_actions(); ++a) {
        for (const auto& e : mdp.row(s, a)) {
            states.push_back(e.next_state);
            actions.push_back(a);
            enumerate_from(mdp, horizon, cap, states, actions, prob * e.prob, out);
            states.pop_back();
            actions.pop_back();
        }
    }
}

}  // namespace

std::vector<std::pair<Trajectory, double>> enumerate_trajectories(const MdpModel& mdp, int horizon,
                                                                  std::int64_t cap) {
    if (horizon < 1) throw std::invalid_argument("enumerate_trajectories: horizon < 1");
    double tree = std::pow(static_cast<double>(mdp.n_actions()), horizon);
    if (tree > static_cast<double>(cap))
        throw std::invalid_argument("enumerate_trajectories: n_actions^horizon exceeds cap " +
                                    std::to_string(cap));

    std::vector<std::pair<Trajectory, double>> out;
    std::vector<int> states;
    std::vector<int> actions;
    for (int s0 = 0; s0 < mdp.n_states(); ++s0) {
        const double p0 = mdp.initial_dist()[s0];
        if (p0 <= 0.0) continue;
        states.assign(1, s0);
        actions.clear();
        enumerate_from(mdp, horizon, cap, states, actions, p0, out);
    }
    return out;
}

}  // namespace irl
