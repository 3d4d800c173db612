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

#include "irl/similarity.hpp"

#include <cmath>
#include <cstdlib>
#include <stdexcept>

#include "irl/numeric.hpp"

namespace irl {

double rbf_similarity(std::span<const double> fa, std::span<const double> fb, double sigma) {
    if (sigma <= 0.0) throw std::invalid_argument("rbf_similarity: sigma must be positive");
    const auto diff = subtract(fa, fb);
    double sq = 0.0;
    for (double x : diff) sq += x * x;
    return std::exp(-sq / (2.0 * sigma));
}

double unsquared_distance_similarity(std::span<const double> fa, std::span<const double> fb,
                                     double scale) {
    if (scale <= 0.0)
        throw std::invalid_argument("unsquared_distance_similarity: scale must be positive");
    return std::exp(-l2_norm(subtract(fa, fb)) / scale);
}

int turn_count(const Trajectory& trajectory) {
    if (trajectory.actions.empty())
        throw std::invalid_argument("turn_count: trajectory carries no actions");
    int n = 0;
    for (std::size_t t = 0; t + 1 < trajectory.actions.size(); ++t)
        if (trajectory.actions[t + 1] != trajectory.actions[t]) ++n;
    return n;
}

double turn_count_similarity(const Trajectory& a, const Trajectory& b) {
    return std::exp(-std::abs(turn_count(a) - turn_count(b)));
}

double SimilaritySpec::operator()(const Trajectory& a, const Trajectory& b) const {
    switch (kind) {
        case Kind::kRbf:
            return rbf_similarity(a.feature_count, b.feature_count, scale);
        case Kind::kUnsquaredDistance:
            return unsquared_distance_similarity(a.feature_count, b.feature_count, scale);
        case Kind::kTurnCount:
            return turn_count_similarity(a, b);
    }
    throw std::logic_error("SimilaritySpec: unknown kind");
}

std::string SimilaritySpec::name() const {
    switch (kind) {
        case Kind::kRbf: return "rbf";
        case Kind::kUnsquaredDistance: return "unsquared_distance";
        case Kind::kTurnCount: return "turn_count";
    }
    throw std::logic_error("SimilaritySpec: unknown kind");
}

SimilaritySpec SimilaritySpec::from_name(const std::string& name, double scale) {
    if (name == "rbf") return {Kind::kRbf, scale};
    if (name == "unsquared_distance") return {Kind::kUnsquaredDistance, scale};
    if (name == "turn_count") return {Kind::kTurnCount, scale};
    throw std::invalid_argument("SimilaritySpec: unknown similarity '" + name + "'");
}

}  // namespace irl
