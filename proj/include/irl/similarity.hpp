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

#ifndef IRL_SIMILARITY_HPP_
#define IRL_SIMILARITY_HPP_

#include <span>
#include <string>

#include "irl/mdp.hpp"

namespace irl {

// exp(-||fa - fb||^2 / (2 sigma)); sigma is the bandwidth.
double rbf_similarity(std::span<const double> fa, std::span<const double> fb, double sigma);

// exp(-||fa - fb|| / scale); the unsquared-norm variant.
double unsquared_distance_similarity(std::span<const double> fa, std::span<const double> fb,
                                     double scale);

// Number of direction changes: indices t with a_{t+1} != a_t.
int turn_count(const Trajectory& trajectory);

// exp(-|n(a) - n(b)|) on turn counts. Requires both trajectories to carry
// actions.
double turn_count_similarity(const Trajectory& a, const Trajectory& b);

// Named similarity choice, so environments and config files can select one.
struct SimilaritySpec {
    enum class Kind { kRbf, kUnsquaredDistance, kTurnCount };

    Kind kind = Kind::kRbf;
    double scale = 1.0;  // sigma for kRbf, scale for kUnsquaredDistance

    double operator()(const Trajectory& a, const Trajectory& b) const;

    std::string name() const;
    static SimilaritySpec from_name(const std::string& name, double scale);
};

}  // namespace irl

#endif  // IRL_SIMILARITY_HPP_
