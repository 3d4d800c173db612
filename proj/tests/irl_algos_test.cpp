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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "irl/learner.hpp"
#include "irl/numeric.hpp"
#include "test_util.hpp"

using namespace irl;
using namespace irl::test;

namespace {

Trajectory fake_trajectory(std::vector<double> fc, std::vector<int> actions = {0}) {
    Trajectory t;
    t.states.assign(actions.size() + 1, 0);
    t.actions = std::move(actions);
    t.feature_count = std::move(fc);
    return t;
}

// Two straight trajectories (turn count 0 each, so similarity exactly 1)
// whose feature counts differ by [1, 0].
TrainingSet two_trajectory_fixture() {
    return TrainingSet({fake_trajectory({1.0, 0.0})}, {fake_trajectory({0.0, 0.0})},
                       SimilaritySpec{SimilaritySpec::Kind::kTurnCount, 1.0});
}

TrainingSet random_training_set(int d, int n, Rng& rng) {
    std::vector<Trajectory> expert, unsup;
    const int l = 1 + static_cast<int>(uniform01(rng) * std::min(3, n - 1));
    for (int i = 0; i < n; ++i) {
        auto t = fake_trajectory(random_theta(d, 1.0, rng));
        (i < l ? expert : unsup).push_back(std::move(t));
    }
    return TrainingSet(std::move(expert), std::move(unsup),
                       SimilaritySpec{SimilaritySpec::Kind::kRbf, 0.5 + uniform01(rng)});
}

std::vector<double> central_difference_gradient(const RewardVector& theta, const TrainingSet& ts,
                                                double h) {
    std::vector<double> grad(theta.dim());
    for (int k = 0; k < theta.dim(); ++k) {
        RewardVector plus = theta, minus = theta;
        plus.theta[k] += h;
        minus.theta[k] -= h;
        grad[k] = (pairwise_penalty(plus, ts) - pairwise_penalty(minus, ts)) / (2.0 * h);
    }
    return grad;
}

}  // namespace

TEST_CASE("pairwise_penalty basics") {
    const auto ts = two_trajectory_fixture();
    CHECK(pairwise_penalty({{0.0, 0.0}, 500.0}, ts) == 0.0);

    // identical feature counts: zero for any theta
    TrainingSet same({fake_trajectory({0.3, 0.4})}, {fake_trajectory({0.3, 0.4})},
                     SimilaritySpec{SimilaritySpec::Kind::kTurnCount, 1.0});
    CHECK(pairwise_penalty({{7.0, -3.0}, 500.0}, same) == doctest::Approx(0.0));

    // hand-evaluated double sum: (1/(2*2)) * (4 + 4) = 2
    CHECK(pairwise_penalty({{2.0, 0.0}, 500.0}, ts) == doctest::Approx(2.0).epsilon(1e-12));
}

TEST_CASE("pairwise_penalty is non-negative on random instances") {
    Rng rng(31);
    for (int rep = 0; rep < 25; ++rep) {
        const auto ts = random_training_set(4, 5, rng);
        CHECK(pairwise_penalty({random_theta(4, 10.0, rng), 500.0}, ts) >= 0.0);
    }
}

TEST_CASE("penalty_gradient on the hand-evaluated example") {
    const auto ts = two_trajectory_fixture();
    CHECK(penalty_gradient({{0.0, 0.0}, 500.0}, ts) == std::vector<double>{0.0, 0.0});

    // d/dtheta of theta_1^2/2 at theta_1 = 2, confirmed by central differences.
    const RewardVector theta{{2.0, 0.0}, 500.0};
    const auto grad = penalty_gradient(theta, ts);
    CHECK(grad[0] == doctest::Approx(2.0).epsilon(1e-12));
    CHECK(grad[1] == doctest::Approx(0.0));
    const auto fd = central_difference_gradient(theta, ts, 1e-5);
    CHECK(grad[0] == doctest::Approx(fd[0]).epsilon(1e-5));
}

TEST_CASE("penalty_gradient matches central finite differences") {
    Rng rng(32);
    for (int rep = 0; rep < 100; ++rep) {
        const int d = 2 + static_cast<int>(uniform01(rng) * 9);  // <= 10
        const int n = 2 + static_cast<int>(uniform01(rng) * 7);  // <= 8
        const auto ts = random_training_set(d, n, rng);
        const RewardVector theta{random_theta(d, 3.0, rng), 500.0};

        const auto grad = penalty_gradient(theta, ts);
        const auto fd = central_difference_gradient(theta, ts, 1e-5);
        const double rel = l2_norm(subtract(grad, fd)) / std::max(l2_norm(fd), 1e-8);
        CHECK(rel <= 1e-5);
    }
}

TEST_CASE("penalty and gradient are linear in the similarity matrix") {
    Rng rng(33);
    const int d = 3, n = 4;
    std::vector<Trajectory> expert = {fake_trajectory(random_theta(d, 1.0, rng))};
    std::vector<Trajectory> unsup;
    for (int i = 1; i < n; ++i) unsup.push_back(fake_trajectory(random_theta(d, 1.0, rng)));

    std::vector<double> matrix(n * n);
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j)
            matrix[i * n + j] = matrix[j * n + i] = i == j ? 1.0 : 0.2 + 0.6 * uniform01(rng);

    const double c = 0.5;
    auto scaled = matrix;
    for (double& s : scaled) s *= c;

    TrainingSet ts(expert, unsup, matrix);
    TrainingSet ts_scaled(expert, unsup, scaled);
    const RewardVector theta{random_theta(d, 5.0, rng), 500.0};

    CHECK(pairwise_penalty(theta, ts_scaled) ==
          doctest::Approx(c * pairwise_penalty(theta, ts)).epsilon(1e-12));
    const auto g = penalty_gradient(theta, ts);
    const auto gs = penalty_gradient(theta, ts_scaled);
    for (int k = 0; k < d; ++k) CHECK(gs[k] == doctest::Approx(c * g[k]).epsilon(1e-12));
}

TEST_CASE("similarity kernels match their closed forms") {
    const std::vector<double> a{1.0, 2.0};

    CHECK(rbf_similarity(a, a, 5.0) == 1.0);
    // squared distance 2*sigma -> 1/e
    const std::vector<double> b{1.0 + std::sqrt(10.0), 2.0};
    CHECK(rbf_similarity(a, b, 5.0) == doctest::Approx(std::exp(-1.0)).epsilon(1e-12));
    CHECK_THROWS_AS(rbf_similarity(a, b, 0.0), std::invalid_argument);

    CHECK(unsquared_distance_similarity(a, a, 10.0) == 1.0);
    const std::vector<double> c{11.0, 2.0};  // distance 10
    CHECK(unsquared_distance_similarity(a, c, 10.0) ==
          doctest::Approx(std::exp(-1.0)).epsilon(1e-12));
    const std::vector<double> e{6.0, 2.0};  // distance 5
    CHECK(unsquared_distance_similarity(a, e, 10.0) ==
          doctest::Approx(std::exp(-0.5)).epsilon(1e-12));
    CHECK_THROWS_AS(unsquared_distance_similarity(a, c, -1.0), std::invalid_argument);
}

TEST_CASE("turn_count_similarity counts direction changes") {
    const auto straight_a = fake_trajectory({0.0}, {3, 3, 3});
    const auto straight_b = fake_trajectory({0.0}, {0, 0, 0, 0});
    CHECK(turn_count(straight_a) == 0);
    CHECK(turn_count_similarity(straight_a, straight_b) == 1.0);

    const auto one_turn = fake_trajectory({0.0}, {3, 3, 0});
    const auto one_turn_b = fake_trajectory({0.0}, {0, 1});
    CHECK(turn_count(one_turn) == 1);
    CHECK(turn_count_similarity(one_turn, one_turn_b) == 1.0);

    const auto three_turns = fake_trajectory({0.0}, {0, 1, 0, 1});
    CHECK(turn_count(three_turns) == 3);
    CHECK(turn_count_similarity(one_turn, three_turns) ==
          doctest::Approx(std::exp(-2.0)).epsilon(1e-12));

    Trajectory no_actions;
    no_actions.states = {0, 1};
    no_actions.feature_count = {0.0};
    CHECK_THROWS_AS(turn_count_similarity(no_actions, one_turn), std::invalid_argument);
}

TEST_CASE("similarity kernels are symmetric, in (0,1], with unit self-similarity") {
    Rng rng(34);
    for (int rep = 0; rep < 30; ++rep) {
        const auto fa = random_theta(4, 3.0, rng);
        const auto fb = random_theta(4, 3.0, rng);
        for (double s : {rbf_similarity(fa, fb, 2.0), unsquared_distance_similarity(fa, fb, 3.0)}) {
            CHECK(s > 0.0);
            CHECK(s <= 1.0);
        }
        CHECK(rbf_similarity(fa, fb, 2.0) == rbf_similarity(fb, fa, 2.0));
        CHECK(unsquared_distance_similarity(fa, fb, 3.0) ==
              unsquared_distance_similarity(fb, fa, 3.0));
        CHECK(rbf_similarity(fa, fa, 2.0) == 1.0);
    }
}

TEST_CASE("project_inf_ball") {
    const std::vector<double> inside{100.0, -40.0};
    CHECK(project_inf_ball(inside, 500.0) == inside);

    const auto projected = project_inf_ball(std::vector<double>{1000.0, -200.0}, 500.0);
    CHECK(projected[0] == doctest::Approx(500.0));
    CHECK(projected[1] == doctest::Approx(-100.0));

    CHECK(project_inf_ball(std::vector<double>{0.0, 0.0}, 500.0) ==
          std::vector<double>{0.0, 0.0});
}

TEST_CASE("projection preserves the argmax component and all signs") {
    Rng rng(35);
    for (int rep = 0; rep < 50; ++rep) {
        const auto theta = random_theta(6, 2000.0, rng);
        const auto projected = project_inf_ball(theta, 500.0);
        CHECK(inf_norm(projected) <= 500.0 + 1e-9);
        int argmax_before = 0, argmax_after = 0;
        for (int i = 0; i < 6; ++i) {
            if (std::abs(theta[i]) > std::abs(theta[argmax_before])) argmax_before = i;
            if (std::abs(projected[i]) > std::abs(projected[argmax_after])) argmax_after = i;
            CHECK((theta[i] >= 0.0) == (projected[i] >= 0.0));
        }
        CHECK(argmax_before == argmax_after);
    }
}

TEST_CASE("messi_step fixed point and single-step behavior") {
    const auto ts = two_trajectory_fixture();
    LearnerConfig cfg;
    cfg.lambda0 = 0.0;
    cfg.horizon = 10;

    // f_t = f*: theta unchanged
    const RewardVector theta{{3.0, -1.0}, 500.0};
    const auto fixed = messi_step(theta, ts, ts.expert_mean_fc(), cfg);
    CHECK(fixed.theta == theta.theta);

    // theta = 0: one unconstrained step lands on the gradient
    const RewardVector zero{{0.0, 0.0}, 500.0};
    const std::vector<double> f_t{0.25, -0.5};
    const auto stepped = messi_step(zero, ts, f_t, cfg);
    CHECK(stepped.theta[0] == doctest::Approx(ts.expert_mean_fc()[0] - 0.25));
    CHECK(stepped.theta[1] == doctest::Approx(ts.expert_mean_fc()[1] + 0.5));

    CHECK_THROWS_AS(messi_step(zero, ts, std::vector<double>{0.1}, cfg), std::invalid_argument);
}

TEST_CASE("messi_step composes the verified sub-operations") {
    const auto ts = two_trajectory_fixture();
    LearnerConfig cfg;
    cfg.lambda0 = 0.05;
    cfg.theta_max = 500.0;
    cfg.horizon = 10;

    const RewardVector theta{{2.0, 0.0}, 500.0};
    const std::vector<double> f_t{0.4, 0.1};

    // penalty gradient at theta is [2, 0] (finite-difference checked above)
    std::vector<double> expected{
        2.0 + (ts.expert_mean_fc()[0] - 0.4) - 0.05 / 500.0 * 2.0,
        0.0 + (ts.expert_mean_fc()[1] - 0.1),
    };
    expected = project_inf_ball(expected, 500.0);

    const auto stepped = messi_step(theta, ts, f_t, cfg);
    CHECK(stepped.theta[0] == doctest::Approx(expected[0]).epsilon(1e-12));
    CHECK(stepped.theta[1] == doctest::Approx(expected[1]).epsilon(1e-12));
}

TEST_CASE("run_messi with lambda0 = 0 equals run_maxent bit for bit") {
    Rng rng(36);
    const auto mdp = random_stochastic_mdp(4, 2, 3, 0.9, rng);
    const auto expert_policy = backward_pass(mdp, {{0.5, -0.2, 0.1}, 500.0});

    std::vector<Trajectory> expert, unsup;
    Rng sample_rng(100);
    for (int i = 0; i < 2; ++i)
        expert.push_back(sample_trajectory(mdp, expert_policy, 8, sample_rng));
    for (int i = 0; i < 5; ++i)
        unsup.push_back(sample_trajectory(mdp, expert_policy, 8, sample_rng));

    LearnerConfig cfg;
    cfg.iterations = 7;
    cfg.lambda0 = 0.0;
    cfg.seed = 17;
    cfg.horizon = 8;

    TrainingSet ts(expert, unsup, SimilaritySpec{SimilaritySpec::Kind::kRbf, 5.0});
    const auto messi = run_messi(mdp, ts, cfg);
    const auto maxent = run_maxent(mdp, expert, cfg);

    REQUIRE(messi.history.size() == maxent.history.size());
    for (std::size_t t = 0; t < messi.history.size(); ++t) {
        CHECK(messi.history[t].theta == maxent.history[t].theta);
        CHECK(messi.history[t].f_t == maxent.history[t].f_t);
    }
}

TEST_CASE("run_messi is deterministic per seed and bounded by theta_max") {
    Rng rng(37);
    const auto mdp = random_stochastic_mdp(4, 2, 3, 0.9, rng);
    std::vector<Trajectory> expert{fake_trajectory({0.5, 0.1, 0.2}, {0, 1, 0})};
    TrainingSet ts(expert, {}, SimilaritySpec{SimilaritySpec::Kind::kRbf, 5.0});

    LearnerConfig cfg;
    cfg.iterations = 5;
    cfg.lambda0 = 0.05;
    cfg.seed = 23;
    cfg.horizon = 8;
    cfg.theta_max = 2.0;  // tight bound so projection actually engages

    const auto a = run_messi(mdp, ts, cfg);
    const auto b = run_messi(mdp, ts, cfg);
    for (std::size_t t = 0; t < a.history.size(); ++t) {
        CHECK(a.history[t].theta == b.history[t].theta);
        CHECK(inf_norm(a.history[t].theta) <= 2.0 + 1e-12);
    }
}

TEST_CASE("run_messi T=1 with lambda0=0 is exactly one MaxEnt ascent step") {
    Rng rng(38);
    const auto mdp = random_stochastic_mdp(3, 2, 2, 0.85, rng);
    std::vector<Trajectory> expert{fake_trajectory({0.4, 0.2}, {0})};
    TrainingSet ts(expert, {}, SimilaritySpec{SimilaritySpec::Kind::kRbf, 5.0});

    LearnerConfig cfg;
    cfg.iterations = 1;
    cfg.lambda0 = 0.0;
    cfg.seed = 5;
    cfg.horizon = 6;

    const auto result = run_messi(mdp, ts, cfg);
    const auto& theta0 = result.history[0].theta;
    const auto rho = forward_pass(mdp, backward_pass(mdp, {theta0, cfg.theta_max}), cfg.horizon);
    const auto f0 = expected_feature_count(mdp, rho);
    for (int k = 0; k < 2; ++k)
        CHECK(result.theta.theta[k] ==
              doctest::Approx(theta0[k] + ts.expert_mean_fc()[k] - f0[k]).epsilon(1e-12));
}

TEST_CASE("run_maxent drives the expected feature count toward the expert's") {
    // Two regions; the expert sits in region 0 the whole time.
    auto p = zero_transitions(2, 2);
    p[0][0][0] = 1.0;  // action 0 -> state 0
    p[0][1][1] = 1.0;  // action 1 -> state 1
    p[1][0][0] = 1.0;
    p[1][1][1] = 1.0;
    const double g = 0.9;
    const MdpModel mdp(2, 2, p, {{1.0 - g, 0.0}, {0.0, 1.0 - g}}, {0.5, 0.5}, g, {}, true);

    const int horizon = 30;
    std::vector<int> states(horizon, 0);
    std::vector<Trajectory> expert{
        make_trajectory(std::move(states), std::vector<int>(horizon - 1, 0), mdp)};

    LearnerConfig cfg;
    cfg.iterations = 100;
    cfg.seed = 3;
    cfg.horizon = horizon;

    const auto result = run_maxent(mdp, expert, cfg);
    CHECK(result.theta.theta[0] > 0.0);  // visited feature pushed positive
    CHECK(result.history.back().feature_gap < 0.5 * result.history.front().feature_gap);
}

TEST_CASE("em_maxent weights form a distribution and degenerate to MaxEnt") {
    Rng rng(39);
    const auto mdp = random_stochastic_mdp(4, 2, 3, 0.9, rng);
    const auto policy = backward_pass(mdp, {{0.3, -0.4, 0.2}, 500.0});

    std::vector<Trajectory> expert;
    Rng sample_rng(55);
    for (int i = 0; i < 3; ++i) expert.push_back(sample_trajectory(mdp, policy, 6, sample_rng));
    std::vector<Trajectory> unsup;
    for (int i = 0; i < 4; ++i) unsup.push_back(sample_trajectory(mdp, policy, 6, sample_rng));

    LearnerConfig cfg;
    cfg.iterations = 6;
    cfg.seed = 9;
    cfg.horizon = 6;

    TrainingSet ts(expert, unsup, SimilaritySpec{SimilaritySpec::Kind::kRbf, 5.0});
    const auto result = em_maxent(mdp, ts, cfg, /*eta=*/2, /*rounds=*/3);
    CHECK(result.rounds.size() == 3);
    CHECK(result.history.size() == 3 * 2 + 1);
    for (const auto& round : result.rounds) {
        double sum = 0.0;
        for (double w : round.weights) {
            CHECK(w >= 0.0);
            sum += w;
        }
        CHECK(sum == doctest::Approx(1.0).epsilon(1e-9));
    }

    // Identical trajectories: weights are uniform and the target is f*.
    std::vector<Trajectory> copies(3, expert.front());
    TrainingSet ts_same(copies, {}, SimilaritySpec{SimilaritySpec::Kind::kRbf, 5.0});
    const auto degenerate = em_maxent(mdp, ts_same, cfg, 2, 2);
    for (const auto& round : degenerate.rounds) {
        for (double w : round.weights) CHECK(w == doctest::Approx(1.0 / 3.0).epsilon(1e-12));
        for (std::size_t k = 0; k < round.f_target.size(); ++k)
            CHECK(round.f_target[k] ==
                  doctest::Approx(ts_same.expert_mean_fc()[k]).epsilon(1e-12));
    }
}

TEST_CASE("em_maxent rejects infeasible data and bad arguments") {
    auto p = zero_transitions(2, 1);
    p[0][0][1] = 1.0;
    p[1][0][1] = 1.0;
    const MdpModel mdp(2, 1, p, {{0.1}, {0.0}}, {1.0, 0.0}, 0.9, {}, true);

    // p(0|1,0) = 0, so this trajectory is infeasible.
    const auto infeasible = make_trajectory({1, 0}, {0}, mdp);
    TrainingSet ts({infeasible}, {}, SimilaritySpec{SimilaritySpec::Kind::kRbf, 5.0});

    LearnerConfig cfg;
    cfg.iterations = 2;
    cfg.horizon = 4;
    CHECK_THROWS_AS(em_maxent(mdp, ts, cfg, 1, 1), std::runtime_error);
    CHECK_THROWS_AS(em_maxent(mdp, ts, cfg, 0, 1), std::invalid_argument);
}

TEST_CASE("LearnerConfig validation") {
    LearnerConfig cfg;
    cfg.horizon = 10;
    CHECK_NOTHROW(cfg.validate());
    cfg.iterations = 0;
    CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
    cfg.iterations = 10;
    cfg.theta_max = 0.0;
    CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
    cfg.theta_max = 500.0;
    cfg.lambda0 = -0.1;
    CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
}
