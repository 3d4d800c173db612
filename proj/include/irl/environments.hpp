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
// The three benchmark environments: a macro-feature grid world, a four-lane
// highway with scrolling traffic, and a 6x6 pit world with a hand-drawn
// expert path.

#ifndef IRL_ENVIRONMENTS_HPP_
#define IRL_ENVIRONMENTS_HPP_

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "irl/mdp.hpp"
#include "irl/similarity.hpp"

namespace irl {

// How a policy is scored, as a pure function of its expected feature count.
struct PerformanceMetric {
    enum class Kind {
        kTrueReward,     // theta_star^T f
        kHighwaySafety,  // -(f[collision] + f[offroad])
        kPitAvoidance,   // -f[pit]
    };

    Kind kind = Kind::kTrueReward;
    std::string name;

    double operator()(std::span<const double> f, std::span<const double> theta_star) const;
};

// An environment plus everything the experiments need: the true and
// alternative rewards, the metric, the default similarity, and the
// trajectory horizon.
struct EnvironmentBundle {
    MdpModel mdp;  // already feature-normalized
    std::vector<double> theta_star;
    std::vector<double> theta_1;
    std::vector<double> theta_2;
    PerformanceMetric metric;
    SimilaritySpec default_similarity;
    int horizon = 0;
    std::string name;

    // When set, expert demonstrations (and the theta_star mixture component)
    // come from this fixed generator instead of theta_star's soft policy.
    // Used by the pit world, whose demonstrator walks a deterministic path
    // around the pit. The bool selects the mirrored (clockwise) variant.
    std::function<Trajectory(const MdpModel&, bool clockwise)> handcrafted_expert;
};

// side x side grid, four noisy move actions, one-hot macro-cell features.
// The intended move succeeds with `success_prob`; the rest of the mass is
// split evenly over the other three moves. Walls clamp. theta_star maps every
// feature to a strictly negative value except three random ones; theta_1 and
// theta_2 are drawn by the same scheme.
EnvironmentBundle build_gridworld(int side, int macro_side, double success_prob, Rng& rng,
                                  int horizon = 64, double discount = 0.9);

// n_lanes lanes plus an off-road position on each side; actions left/stay/
// right; a periodic traffic pattern (from traffic_seed) scrolls one row per
// step. Binary features: collision, off-road, left half, right half.
EnvironmentBundle build_highway(int n_lanes, int horizon, std::uint64_t traffic_seed,
                                double discount = 0.9);

// Fixed 6x6 grid: an edge ring around a central pit, start (1,1), absorbing
// terminal (6,6), 85%/15% action noise, three region features.
EnvironmentBundle build_pit();

// Builds the soft policy for theta, runs the forward pass for `horizon`
// steps, and applies the bundle's metric to the expected feature count.
double evaluate_policy(const EnvironmentBundle& bundle, const RewardVector& theta, int horizon);

// Metric on an already-computed expected feature count (what evaluate_policy
// applies after its own forward pass).
double apply_metric(const EnvironmentBundle& bundle, std::span<const double> f);

}  // namespace irl

#endif  // IRL_ENVIRONMENTS_HPP_
