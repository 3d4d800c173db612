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

#ifndef IRL_MDP_IO_HPP_
#define IRL_MDP_IO_HPP_

#include <string>
#include <vector>

#include "irl/mdp.hpp"

namespace irl {

// JSON document with fields n_states, n_actions, transition (dense nested
// arrays), features, initial_dist, discount, terminal_states, and
// features_normalized. Loading validates every model invariant.
std::string mdp_to_json(const MdpModel& mdp);
MdpModel mdp_from_json(const std::string& json_text);

void save_mdp(const MdpModel& mdp, const std::string& path);
MdpModel load_mdp(const std::string& path);

// Line-oriented trajectory format: per line, comma-separated states,
// optionally followed by '|' and comma-separated actions. Loading recomputes
// and caches feature counts against the given model.
std::string trajectories_to_text(const std::vector<Trajectory>& trajectories);
std::vector<Trajectory> trajectories_from_text(const std::string& text, const MdpModel& mdp);

void save_trajectories(const std::vector<Trajectory>& trajectories, const std::string& path);
std::vector<Trajectory> load_trajectories(const std::string& path, const MdpModel& mdp);

}  // namespace irl

#endif  // IRL_MDP_IO_HPP_
