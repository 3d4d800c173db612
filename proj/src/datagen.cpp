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

#include "irl/datagen.hpp"

#include <cmath>
#include <stdexcept>

#include "irl/numeric.hpp"

namespace irl {

void MixtureSpec::validate() const {
    if (components.empty()) throw std::invalid_argument("MixtureSpec: no components");
    double sum = 0.0;
    for (const auto& c : components) {
        if (c.weight < 0.0) throw std::invalid_argument("MixtureSpec: negative weight");
        sum += c.weight;
    }
    if (std::abs(sum - 1.0) > 1e-9)
        throw std::invalid_argument("MixtureSpec: weights must sum to 1");
}

MixtureSpec MixtureSpec::two_component(std::vector<double> reward_star, std::vector<double> other,
                                       double nu, bool first_is_expert) {
    if (nu < 0.0 || nu > 1.0) throw std::invalid_argument("MixtureSpec: nu must lie in [0,1]");
    MixtureSpec spec;
    spec.components.push_back({std::move(reward_star), nu, first_is_expert});
    spec.components.push_back({std::move(other), 1.0 - nu, false});
    return spec;
}

MixtureSpec MixtureSpec::expert_only(std::vector<double> reward_star) {
    MixtureSpec spec;
    spec.components.push_back({std::move(reward_star), 1.0, true});
    return spec;
}

std::vector<Trajectory> generate_expert(const EnvironmentBundle& bundle, int l,
                                        const LearnerConfig& cfg, std::uint64_t seed) {
    if (l < 1) throw std::invalid_argument("generate_expert: l must be >= 1");

    std::vector<Trajectory> expert;
    expert.reserve(l);
    if (bundle.handcrafted_expert) {
        for (int i = 0; i < l; ++i) expert.push_back(bundle.handcrafted_expert(bundle.mdp, false));
        return expert;
    }

    const RewardVector theta{bundle.theta_star, cfg.theta_max};
    const auto policy = backward_pass(bundle.mdp, theta, cfg.vi_tol, cfg.vi_max_sweeps);
    for (int i = 0; i < l; ++i) {
        Rng rng(derive_seed(seed, i));
        expert.push_back(sample_trajectory(bundle.mdp, policy, bundle.horizon, rng));
    }
    return expert;
}

std::vector<Trajectory> generate_unsupervised(const EnvironmentBundle& bundle,
                                              const MixtureSpec& spec, int u,
                                              const LearnerConfig& cfg, std::uint64_t seed) {
    if (u < 0) throw std::invalid_argument("generate_unsupervised: u must be >= 0");
    spec.validate();

    const int n_components = static_cast<int>(spec.components.size());
    std::vector<double> weights(n_components);
    for (int c = 0; c < n_components; ++c) weights[c] = spec.components[c].weight;

    // Soft policies are theta-dependent only; build each at most once and
    // skip components that are never drawn or use the handcrafted generator.
    std::vector<SoftPolicy> policies;
    policies.reserve(n_components);
    for (const auto& comp : spec.components) {
        const bool handcrafted = comp.is_expert_distribution && bundle.handcrafted_expert;
        const bool needed = comp.weight > 0.0 && !handcrafted && u > 0;
        policies.push_back(needed ? backward_pass(bundle.mdp, {comp.reward, cfg.theta_max},
                                                  cfg.vi_tol, cfg.vi_max_sweeps)
                                  : SoftPolicy(1, 1));
    }

    std::vector<Trajectory> out;
    out.reserve(u);
    for (int i = 0; i < u; ++i) {
        // Separate streams for the component choice and the path, so mixtures
        // that degenerate to a single component keep the same paths.
        Rng component_rng(derive_seed(seed, 2 * static_cast<std::uint64_t>(i)));
        Rng path_rng(derive_seed(seed, 2 * static_cast<std::uint64_t>(i) + 1));
        const int c = n_components == 1 ? 0 : sample_categorical(weights, component_rng);
        const auto& comp = spec.components[c];
        if (comp.is_expert_distribution && bundle.handcrafted_expert) {
            const bool clockwise = uniform01(path_rng) < 0.5;
            out.push_back(bundle.handcrafted_expert(bundle.mdp, clockwise));
        } else {
            out.push_back(sample_trajectory(bundle.mdp, policies[c], bundle.horizon, path_rng));
        }
    }
    return out;
}

}  // namespace irl
