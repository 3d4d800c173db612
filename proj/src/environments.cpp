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

#include "irl/environments.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "irl/numeric.hpp"
#include "irl/soft_dp.hpp"

namespace irl {

namespace {

// Grid actions shared by the grid world and the pit world.
enum GridAction { kUp = 0, kDown = 1, kLeft = 2, kRight = 3 };
constexpr int kGridActions = 4;

int clamp_move(int x, int y, int action, int side, int& nx, int& ny) {
    nx = x;
    ny = y;
    switch (action) {
        case kUp: ny = std::min(y + 1, side - 1); break;
        case kDown: ny = std::max(y - 1, 0); break;
        case kLeft: nx = std::max(x - 1, 0); break;
        case kRight: nx = std::min(x + 1, side - 1); break;
        default: throw std::logic_error("unknown grid action");
    }
    return ny * side + nx;
}

// Intended move with probability success_prob, otherwise one of the other
// three moves uniformly. Clamped moves can stack mass on the same cell.
std::vector<std::vector<std::vector<double>>> noisy_grid_transitions(int side,
                                                                     double success_prob,
                                                                     const std::vector<int>& terminals) {
    const int S = side * side;
    std::vector<char> terminal_mask(S, 0);
    for (int t : terminals) terminal_mask[t] = 1;

    std::vector<std::vector<std::vector<double>>> p(
        S, std::vector<std::vector<double>>(kGridActions, std::vector<double>(S, 0.0)));
    const double slip = (1.0 - success_prob) / (kGridActions - 1);
    for (int y = 0; y < side; ++y) {
        for (int x = 0; x < side; ++x) {
            const int s = y * side + x;
            for (int a = 0; a < kGridActions; ++a) {
                if (terminal_mask[s]) {
                    p[s][a][s] = 1.0;
                    continue;
                }
                int nx, ny;
                for (int move = 0; move < kGridActions; ++move) {
                    const int target = clamp_move(x, y, move, side, nx, ny);
                    p[s][a][target] += move == a ? success_prob : slip;
                }
            }
        }
    }
    return p;
}

// Every component strictly negative except `n_positive` random ones.
std::vector<double> random_grid_reward(int d, int n_positive, Rng& rng) {
    std::vector<double> theta(d);
    for (double& x : theta) x = uniform_in(rng, -1.0, -0.1);
    std::vector<int> idx(d);
    for (int i = 0; i < d; ++i) idx[i] = i;
    for (int i = 0; i < n_positive; ++i) {
        const int j = i + static_cast<int>(uniform01(rng) * (d - i));
        std::swap(idx[i], idx[std::min(j, d - 1)]);
        theta[idx[i]] = uniform_in(rng, 0.5, 1.0);
    }
    return theta;
}

}  // namespace

double PerformanceMetric::operator()(std::span<const double> f,
                                     std::span<const double> theta_star) const {
    switch (kind) {
        case Kind::kTrueReward:
            return dot(f, theta_star);
        case Kind::kHighwaySafety:
            return -(f[0] + f[1]);  // collision + off-road
        case Kind::kPitAvoidance:
            return -f[2];  // pit
    }
    throw std::logic_error("PerformanceMetric: unknown kind");
}

EnvironmentBundle build_gridworld(int side, int macro_side, double success_prob, Rng& rng,
                                  int horizon, double discount) {
    if (side < 1 || macro_side < 1 || side % macro_side != 0)
        throw std::invalid_argument("build_gridworld: side must be divisible by macro_side");
    if (success_prob < 0.0 || success_prob > 1.0)
        throw std::invalid_argument("build_gridworld: success_prob must lie in [0,1]");

    const int S = side * side;
    const int macros = side / macro_side;
    const int d = macros * macros;

    std::vector<std::vector<double>> features(S, std::vector<double>(d, 0.0));
    for (int y = 0; y < side; ++y)
        for (int x = 0; x < side; ++x)
            features[y * side + x][(y / macro_side) * macros + (x / macro_side)] = 1.0;

    std::vector<double> initial(S, 0.0);
    initial[0] = 1.0;  // bottom-left corner

    MdpModel mdp(S, kGridActions, noisy_grid_transitions(side, success_prob, {}),
                 std::move(features), std::move(initial), discount);

    const int n_positive = std::min(3, d);
    EnvironmentBundle bundle{
        normalize_features(mdp),
        random_grid_reward(d, n_positive, rng),
        random_grid_reward(d, n_positive, rng),
        random_grid_reward(d, n_positive, rng),
        PerformanceMetric{PerformanceMetric::Kind::kTrueReward, "true_reward"},
        SimilaritySpec{SimilaritySpec::Kind::kUnsquaredDistance, 10.0},
        horizon,
        "gridworld",
        nullptr};
    return bundle;
}

namespace {

constexpr int kHighwayPatternLength = 16;

// Periodic traffic pattern: row 0 is clear, later rows hold 0-2 cars.
std::vector<std::vector<char>> traffic_pattern(int n_lanes, std::uint64_t traffic_seed) {
    Rng rng(split_mix64(traffic_seed));
    std::vector<std::vector<char>> occupied(kHighwayPatternLength,
                                            std::vector<char>(n_lanes + 2, 0));
    const double count_probs[3] = {0.30, 0.45, 0.25};
    for (int row = 1; row < kHighwayPatternLength; ++row) {
        const int cars = sample_categorical(count_probs, rng);
        for (int c = 0; c < cars; ++c) {
            int lane;
            do {
                lane = 1 + static_cast<int>(uniform01(rng) * n_lanes);
                lane = std::min(lane, n_lanes);
            } while (occupied[row][lane]);
            occupied[row][lane] = 1;
        }
    }
    return occupied;
}

}  // namespace

EnvironmentBundle build_highway(int n_lanes, int horizon, std::uint64_t traffic_seed,
                                double discount) {
    if (n_lanes < 2) throw std::invalid_argument("build_highway: need at least 2 lanes");
    if (horizon < 1) throw std::invalid_argument("build_highway: horizon must be >= 1");

    const int positions = n_lanes + 2;  // off-road, lanes 1..n, off-road
    const int L = kHighwayPatternLength;
    const int S = L * positions;
    const int A = 3;  // left, stay, right
    const auto occupied = traffic_pattern(n_lanes, traffic_seed);

    // Lateral move resolves first, then the traffic scrolls one row.
    std::vector<std::vector<std::vector<double>>> p(
        S, std::vector<std::vector<double>>(A, std::vector<double>(S, 0.0)));
    for (int phase = 0; phase < L; ++phase) {
        for (int pos = 0; pos < positions; ++pos) {
            const int s = phase * positions + pos;
            for (int a = 0; a < A; ++a) {
                const int npos = std::clamp(pos + (a - 1), 0, positions - 1);
                const int nphase = (phase + 1) % L;
                p[s][a][nphase * positions + npos] = 1.0;
            }
        }
    }

    // d = 4: collision, off-road, left half, right half.
    std::vector<std::vector<double>> features(S, std::vector<double>(4, 0.0));
    for (int phase = 0; phase < L; ++phase) {
        for (int pos = 0; pos < positions; ++pos) {
            auto& f = features[phase * positions + pos];
            const bool in_lane = pos >= 1 && pos <= n_lanes;
            f[0] = in_lane && occupied[phase][pos] ? 1.0 : 0.0;
            f[1] = in_lane ? 0.0 : 1.0;
            f[2] = pos == 1 || pos == 2 ? 1.0 : 0.0;
            f[3] = pos == n_lanes - 1 || pos == n_lanes ? 1.0 : 0.0;
        }
    }

    std::vector<double> initial(S, 0.0);
    initial[2] = 1.0;  // lane 2, phase 0 (clear row)

    MdpModel mdp(S, A, p, std::move(features), std::move(initial), discount);

    EnvironmentBundle bundle{
        normalize_features(mdp),
        {-50.0, -50.0, 0.0, 0.0},  // heavy collision/off-road penalty, lane-agnostic
        {-5.0, -5.0, 0.0, 0.0},    // same shape, weaker
        {0.0, -50.0, 0.0, 0.0},    // ignores collisions
        PerformanceMetric{PerformanceMetric::Kind::kHighwaySafety, "safety"},
        SimilaritySpec{SimilaritySpec::Kind::kRbf, 5.0},
        horizon,
        "highway",
        nullptr};
    return bundle;
}

namespace {

constexpr int kPitSide = 6;

// Region map, rows listed top (y=6) down to bottom (y=1):
//   L = left edge (left column and top row), R = right edge (bottom row and
//   right column), P = the central pit, T = terminal corner (6,6).
constexpr const char* kPitLayout[kPitSide] = {
    "LLLLLT",  // y = 6
    "LPPPPR",  // y = 5
    "LPPPPR",  // y = 4
    "LPPPPR",  // y = 3
    "LPPPPR",  // y = 2
    "RRRRRR",  // y = 1
};

int pit_state(int x, int y) { return (y - 1) * kPitSide + (x - 1); }  // 1-based coords

char pit_cell(int x, int y) { return kPitLayout[kPitSide - y][x - 1]; }

Trajectory pit_expert_path(const MdpModel& mdp, bool clockwise) {
    std::vector<int> states;
    std::vector<int> actions;
    if (!clockwise) {
        // Around the pit via the bottom row and right column.
        for (int x = 1; x <= 6; ++x) states.push_back(pit_state(x, 1));
        for (int y = 2; y <= 6; ++y) states.push_back(pit_state(6, y));
        actions.assign(5, kRight);
        actions.insert(actions.end(), 5, kUp);
    } else {
        // Mirrored: up the left column, then along the top row.
        for (int y = 1; y <= 6; ++y) states.push_back(pit_state(1, y));
        for (int x = 2; x <= 6; ++x) states.push_back(pit_state(x, 6));
        actions.assign(5, kUp);
        actions.insert(actions.end(), 5, kRight);
    }
    return make_trajectory(std::move(states), std::move(actions), mdp);
}

}  // namespace

EnvironmentBundle build_pit() {
    const int S = kPitSide * kPitSide;
    const int terminal = pit_state(6, 6);

    std::vector<std::vector<double>> features(S, std::vector<double>(3, 0.0));
    for (int y = 1; y <= kPitSide; ++y) {
        for (int x = 1; x <= kPitSide; ++x) {
            switch (pit_cell(x, y)) {
                case 'L': features[pit_state(x, y)][0] = 1.0; break;
                case 'R': features[pit_state(x, y)][1] = 1.0; break;
                case 'P': features[pit_state(x, y)][2] = 1.0; break;
                case 'T': break;  // terminal keeps zero features
                default: throw std::logic_error("build_pit: bad layout cell");
            }
        }
    }

    std::vector<double> initial(S, 0.0);
    initial[pit_state(1, 1)] = 1.0;

    MdpModel mdp(S, kGridActions, noisy_grid_transitions(kPitSide, 0.85, {terminal}),
                 std::move(features), std::move(initial), 0.9, {terminal});

    EnvironmentBundle bundle{
        normalize_features(mdp),
        {0.0, 0.0, -1.0},    // penalize the pit only; the goal is the absorbing corner
        {-1.0, -1.0, 0.0},   // edge-averse reward whose policy cuts through the pit
        {0.0, 0.0, 0.0},     // indifferent (near-uniform behavior)
        PerformanceMetric{PerformanceMetric::Kind::kPitAvoidance, "pit_avoidance"},
        SimilaritySpec{SimilaritySpec::Kind::kTurnCount, 1.0},
        24,
        "pit",
        nullptr};
    bundle.handcrafted_expert = pit_expert_path;
    return bundle;
}

double apply_metric(const EnvironmentBundle& bundle, std::span<const double> f) {
    if (f.size() != bundle.theta_star.size())
        throw std::invalid_argument("apply_metric: dimension mismatch");
    return bundle.metric(f, bundle.theta_star);
}

double evaluate_policy(const EnvironmentBundle& bundle, const RewardVector& theta, int horizon) {
    if (theta.dim() != bundle.mdp.n_features())
        throw std::invalid_argument("evaluate_policy: dimension mismatch");
    const auto policy = backward_pass(bundle.mdp, theta);
    const auto rho = forward_pass(bundle.mdp, policy, horizon);
    return apply_metric(bundle, expected_feature_count(bundle.mdp, rho));
}

}  // namespace irl
