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

#include "irl/training_set.hpp"

#include <cmath>
#include <stdexcept>

namespace irl {

namespace {

std::vector<double> mean_feature_count(const std::vector<Trajectory>& expert) {
    if (expert.empty()) throw std::invalid_argument("TrainingSet: no expert trajectories");
    const auto d = expert.front().feature_count.size();
    std::vector<double> mean(d, 0.0);
    for (const auto& t : expert) {
        if (t.feature_count.size() != d)
            throw std::invalid_argument("TrainingSet: inconsistent feature dimensions");
        for (std::size_t i = 0; i < d; ++i) mean[i] += t.feature_count[i];
    }
    for (double& x : mean) x /= static_cast<double>(expert.size());
    return mean;
}

}  // namespace

TrainingSet::TrainingSet(std::vector<Trajectory> expert, std::vector<Trajectory> unsupervised,
                         const SimilaritySpec& similarity)
    : expert_(std::move(expert)), unsupervised_(std::move(unsupervised)) {
    expert_mean_fc_ = mean_feature_count(expert_);

    const int n = size();
    similarity_.assign(static_cast<std::size_t>(n) * n, 0.0);
    for (int i = 0; i < n; ++i) {
        similarity_[static_cast<std::size_t>(i) * n + i] = 1.0;
        for (int j = i + 1; j < n; ++j) {
            const double s = similarity(trajectory(i), trajectory(j));
            similarity_[static_cast<std::size_t>(i) * n + j] = s;
            similarity_[static_cast<std::size_t>(j) * n + i] = s;
        }
    }
}

TrainingSet::TrainingSet(std::vector<Trajectory> expert, std::vector<Trajectory> unsupervised,
                         std::vector<double> similarity_matrix)
    : expert_(std::move(expert)),
      unsupervised_(std::move(unsupervised)),
      similarity_(std::move(similarity_matrix)) {
    expert_mean_fc_ = mean_feature_count(expert_);

    const int n = size();
    if (similarity_.size() != static_cast<std::size_t>(n) * n)
        throw std::invalid_argument("TrainingSet: similarity matrix has wrong size");
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            const double s = similarity_[static_cast<std::size_t>(i) * n + j];
            if (s < 0.0 || s > 1.0)
                throw std::invalid_argument("TrainingSet: similarity outside [0,1]");
            if (std::abs(s - similarity_[static_cast<std::size_t>(j) * n + i]) > 1e-12)
                throw std::invalid_argument("TrainingSet: similarity matrix not symmetric");
        }
}

}  // namespace irl
