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

#ifndef IRL_DATAGEN_HPP_
#define IRL_DATAGEN_HPP_

#include <cstdint>
#include <vector>

#include "irl/environments.hpp"
#include "irl/learner.hpp"

namespace irl {

// Mixture of trajectory distributions, one component per reward vector. A
// component equal to the bundle's theta_star stands for the expert's own
// distribution.
struct MixtureSpec {
    struct Component {
        std::vector<double> reward;
        double weight = 1.0;
        bool is_expert_distribution = false;  // use the handcrafted expert when the bundle has one
    };

    std::vector<Component> components;

    void validate() const;

    // nu * P(theta_star) + (1 - nu) * P(other).
    static MixtureSpec two_component(std::vector<double> reward_star, std::vector<double> other,
                                     double nu, bool first_is_expert = true);
    // The single-component expert distribution (the MESSIMAX configuration).
    static MixtureSpec expert_only(std::vector<double> reward_star);
};

// l demonstrations. By default samples theta_star's soft policy at the
// bundle's horizon; a bundle with a handcrafted expert uses that instead.
std::vector<Trajectory> generate_expert(const EnvironmentBundle& bundle, int l,
                                        const LearnerConfig& cfg, std::uint64_t seed);

// u trajectories; each picks its component independently by the mixture
// weights, then samples that component's soft policy. Component choice and
// path sampling draw from separately derived per-trajectory streams, so a
// degenerate one-component mixture and a two-component mixture at nu = 1
// produce identical sets for the same seed.
std::vector<Trajectory> generate_unsupervised(const EnvironmentBundle& bundle,
                                              const MixtureSpec& spec, int u,
                                              const LearnerConfig& cfg, std::uint64_t seed);

}  // namespace irl

#endif  // IRL_DATAGEN_HPP_
