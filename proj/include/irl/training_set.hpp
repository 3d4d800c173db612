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

#ifndef IRL_TRAINING_SET_HPP_
#define IRL_TRAINING_SET_HPP_

#include <vector>

#include "irl/mdp.hpp"
#include "irl/similarity.hpp"

namespace irl {

// Expert and unsupervised trajectories plus the precomputed pairwise
// similarity matrix over their union. The matrix is independent of theta, so
// it is built once at construction.
class TrainingSet {
  public:
    TrainingSet(std::vector<Trajectory> expert, std::vector<Trajectory> unsupervised,
                const SimilaritySpec& similarity);

    // Custom pairwise similarities, row-major over the union (experts first).
    // The matrix must be symmetric with entries in [0, 1].
    TrainingSet(std::vector<Trajectory> expert, std::vector<Trajectory> unsupervised,
                std::vector<double> similarity_matrix);

    const std::vector<Trajectory>& expert() const { return expert_; }
    const std::vector<Trajectory>& unsupervised() const { return unsupervised_; }

    int n_expert() const { return static_cast<int>(expert_.size()); }
    int n_unsupervised() const { return static_cast<int>(unsupervised_.size()); }
    int size() const { return n_expert() + n_unsupervised(); }

    // Union indexing: experts first, then unsupervised.
    const Trajectory& trajectory(int i) const {
        return i < n_expert() ? expert_[i] : unsupervised_[i - n_expert()];
    }

    double similarity(int i, int j) const {
        return similarity_[static_cast<std::size_t>(i) * size() + j];
    }

    // Mean expert feature count.
    const std::vector<double>& expert_mean_fc() const { return expert_mean_fc_; }

  private:
    std::vector<Trajectory> expert_;
    std::vector<Trajectory> unsupervised_;
    std::vector<double> similarity_;  // (l+u) x (l+u), row-major
    std::vector<double> expert_mean_fc_;
};

}  // namespace irl

#endif  // IRL_TRAINING_SET_HPP_
