// Copyright 2026 The symvqc Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "symvqc/models.hpp"
#include "symvqc/varopt.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

using namespace symvqc;
using std::numbers::pi;

namespace {

Circuit rx_toy() {
    Circuit c(1);
    c.append_free(GateKind::Rx, {0});
    return c;
}

PauliSum single_z() {
    PauliSum h(1);
    h.add(1.0, "Z");
    return h;
}

void expect_monotone_nonincreasing(const std::vector<double> &t) {
    for (std::size_t k = 1; k < t.size(); ++k) ASSERT_LE(t[k], t[k - 1]) << "step " << k;
}

}  // namespace

TEST(OptimizerConfig, Validation) {
    OptimizerConfig cfg;
    EXPECT_NO_THROW(cfg.validate());
    cfg.max_iterations = 2;
    EXPECT_THROW(cfg.validate(), std::invalid_argument);
    cfg = {};
    cfg.starts = 0;
    EXPECT_THROW(cfg.validate(), std::invalid_argument);
    EXPECT_EQ(parse_optimizer_method("spsa"), OptimizerMethod::Spsa);
    EXPECT_STREQ(to_string(OptimizerMethod::NelderMead), "nelder-mead");
    EXPECT_FALSE(parse_optimizer_method("cobyla").has_value());
}

TEST(Minimize, QuadraticBowl) {
    const Objective f = [](std::span<const double> x) {
        double s = 0.0;
        for (std::size_t i = 0; i < x.size(); ++i) s += (i + 1.0) * (x[i] - 0.5) * (x[i] - 0.5);
        return s;
    };
    OptimizerConfig cfg;
    cfg.max_iterations = 3000;
    const std::vector<double> x0{2.0, -1.0, 0.0, 3.0};
    const auto r = minimize(f, x0, cfg, 1);
    EXPECT_LT(r.value, 1e-9);
    for (double xi : r.x) EXPECT_NEAR(xi, 0.5, 1e-4);
    // Converged starts stop before the budget is spent.
    EXPECT_LE(r.trace.size(), cfg.max_iterations);
    expect_monotone_nonincreasing(r.trace);
    EXPECT_DOUBLE_EQ(r.trace.back(), r.value);
}

TEST(Minimize, OneDimensionalAndSpsa) {
    const Objective f = [](std::span<const double> x) { return std::cos(x[0]); };
    for (auto m : {OptimizerMethod::NelderMead, OptimizerMethod::Spsa}) {
        OptimizerConfig cfg;
        cfg.method = m;
        cfg.max_iterations = 2000;
        const std::vector<double> x0{0.7};
        const auto r = minimize(f, x0, cfg, 3);
        EXPECT_NEAR(r.value, -1.0, 1e-6) << to_string(m);
        expect_monotone_nonincreasing(r.trace);
    }
}

TEST(MinimizeEnergy, RxToyReachesMinusOne) {
    OptimizerConfig cfg;
    cfg.max_iterations = 500;
    cfg.seed = 4;
    const auto r = minimize_energy(rx_toy(), single_z(), cfg, EnergyEstimator::exact());
    EXPECT_NEAR(r.final_value, -1.0, 1e-6);
    EXPECT_NEAR(std::cos(r.final_params[0]), -1.0, 1e-6);
    EXPECT_NEAR(std::remainder(r.final_params[0] - pi, 2 * pi), 0.0, 2e-3);
}

TEST(MinimizeEnergy, SpsaRxToy) {
    OptimizerConfig cfg;
    cfg.method = OptimizerMethod::Spsa;
    cfg.max_iterations = 2000;
    cfg.seed = 2;
    const auto r = minimize_energy(rx_toy(), single_z(), cfg, EnergyEstimator::exact());
    EXPECT_NEAR(r.final_value, -1.0, 1e-4);
}

TEST(MinimizeEnergy, TraceMonotoneAndNeverWorseThanStart) {
    const auto c = build_brickwall(4, 2, GateKind::AGate);
    const auto h = xxz_hamiltonian({4, 1.0, Boundary::Open});
    OptimizerConfig cfg;
    cfg.max_iterations = 300;
    cfg.seed = 17;
    const auto r = minimize_energy(c, h, cfg, EnergyEstimator::exact());
    expect_monotone_nonincreasing(r.trace);
    EXPECT_EQ(r.initial_params, initial_parameters(10, 17));
    const double start = expectation(h, apply_circuit(c, r.initial_params, StateVector(4)));
    EXPECT_DOUBLE_EQ(r.trace.front(), start);
    EXPECT_LE(r.final_value, start);
    EXPECT_GE(r.final_value, exact_ground(h, 2).energy - 1e-9);
    EXPECT_DOUBLE_EQ(expectation(h, apply_circuit(c, r.final_params, StateVector(4))), r.final_value);
}

TEST(MinimizeEnergy, BitReproducible) {
    const auto c = build_brickwall(4, 2, GateKind::BGate);
    const auto h = xxz_hamiltonian({4, 1.0, Boundary::Open});
    OptimizerConfig cfg;
    cfg.max_iterations = 200;
    cfg.seed = 5;
    for (const auto &est : {EnergyEstimator::exact(), EnergyEstimator::sampled(256)}) {
        const auto a = minimize_energy(c, h, cfg, est);
        const auto b = minimize_energy(c, h, cfg, est);
        EXPECT_EQ(a.trace, b.trace);
        EXPECT_EQ(a.final_params, b.final_params);
        EXPECT_EQ(a.final_value, b.final_value);
    }
}

TEST(MinimizeEnergy, DimensionMismatchThrows) {
    OptimizerConfig cfg;
    EXPECT_THROW(minimize_energy(build_brickwall(4, 2, GateKind::AGate), xxz_hamiltonian({3, 1.0, Boundary::Open}), cfg,
                                 EnergyEstimator::exact()),
                 std::invalid_argument);
}

TEST(InitialParameters, RangeAndDeterminism) {
    const auto p = initial_parameters(200, 9);
    for (double x : p) {
        EXPECT_GE(x, -pi);
        EXPECT_LT(x, pi);
    }
    EXPECT_EQ(p, initial_parameters(200, 9));
    EXPECT_NE(p, initial_parameters(200, 10));
}

TEST(MaximizeFidelity, RealizableTargetReachesOne) {
    const auto c = build_brickwall(4, 2, GateKind::AGate);
    const auto target = apply_circuit(c, initial_parameters(10, 77), StateVector(4));
    OptimizerConfig cfg;
    cfg.max_iterations = 3000;
    cfg.starts = 5;
    const std::vector<StateVector> targets{target};
    const auto r = maximize_fidelity(c, targets, cfg);
    ASSERT_EQ(r.per_target.size(), 1U);
    EXPECT_NEAR(r.mean_fidelity, 1.0, 1e-6);
    const auto &t = r.per_target[0].trace;
    for (std::size_t k = 1; k < t.size(); ++k) ASSERT_GE(t[k], t[k - 1]);
}

TEST(MaximizeFidelity, OutOfSectorTargetThrows) {
    const auto c = build_brickwall(4, 2, GateKind::AGate);
    const std::vector<StateVector> targets{haar_random_sector_state(4, 1, 3)};
    EXPECT_THROW(maximize_fidelity(c, targets, OptimizerConfig{}), std::invalid_argument);
    EXPECT_EQ(circuit_particle_number(c), 2U);
}

TEST(RunTrials, SingleTrialHasZeroStderrAndMatchesDirectRun) {
    const auto c = build_brickwall(4, 2, GateKind::BGate);
    const auto h = xxz_hamiltonian({4, 1.0, Boundary::Open});
    TrialPlan plan;
    plan.cfg.max_iterations = 150;
    plan.num_trials = 1;
    plan.base_seed = 40;
    plan.reference_energy = exact_ground(h, 2).energy;
    const auto agg = run_trials(c, h, plan);
    ASSERT_EQ(agg.trial_count, 1U);
    OptimizerConfig cfg = plan.cfg;
    cfg.seed = 40;
    const auto direct = minimize_energy(c, h, cfg, plan.estimator);
    EXPECT_EQ(agg.trials[0].trace, direct.trace);
    for (std::size_t k = 0; k < agg.delta_e_mean.size(); ++k) {
        EXPECT_EQ(agg.delta_e_stderr[k], 0.0);
        EXPECT_DOUBLE_EQ(agg.delta_e_mean[k], direct.trace[k] - plan.reference_energy);
    }
}

TEST(RunTrials, PairedSeedsShareInitialParameters) {
    const auto h = xxz_hamiltonian({4, 1.0, Boundary::Open});
    TrialPlan plan;
    plan.cfg.max_iterations = 20;
    plan.num_trials = 4;
    plan.base_seed = 11;
    const auto a = run_trials(build_brickwall(4, 2, GateKind::AGate), h, plan);
    const auto b = run_trials(build_brickwall(4, 2, GateKind::BGate), h, plan);
    for (std::size_t k = 0; k < 4; ++k) {
        EXPECT_EQ(a.trials[k].initial_params, b.trials[k].initial_params);
        EXPECT_EQ(a.trials[k].initial_params, initial_parameters(10, 11 + k));
    }
    EXPECT_NE(a.trials[0].initial_params, a.trials[1].initial_params);
}

TEST(RunTrials, ThreadCountDoesNotChangeResults) {
    const auto c = build_brickwall(4, 2, GateKind::AGate);
    const auto h = xxz_hamiltonian({4, 1.0, Boundary::Open});
    TrialPlan plan;
    plan.cfg.max_iterations = 60;
    plan.num_trials = 5;
    plan.estimator = EnergyEstimator::sampled(128);
    const auto one = run_trials(c, h, plan);
    plan.threads = 3;
    const auto three = run_trials(c, h, plan);
    EXPECT_EQ(one.delta_e_mean, three.delta_e_mean);
    EXPECT_EQ(one.final_deltas(), three.final_deltas());
}

TEST(RunTrials, ZeroNoiseEqualsNoiseless) {
    const auto c = build_brickwall(4, 2, GateKind::BGate);
    const auto h = xxz_hamiltonian({4, 1.0, Boundary::Open});
    TrialPlan plan;
    plan.cfg.max_iterations = 80;
    plan.num_trials = 3;
    const auto clean = run_trials(c, h, plan);
    plan.estimator.noise = NoiseSpec{0.0, 0.0, 0.0};
    plan.estimator.trajectories = 7;
    const auto zero = run_trials(c, h, plan);
    EXPECT_EQ(clean.delta_e_mean, zero.delta_e_mean);
    EXPECT_EQ(clean.final_deltas(), zero.final_deltas());
}

TEST(Aggregate, PadsShortTracesAndComputesStderr) {
    TrialResult a, b;
    a.trace = {3.0, 2.0};
    a.final_value = 2.0;
    b.trace = {5.0, 4.0, 1.0};
    b.final_value = 1.0;
    const auto agg = aggregate({a, b}, 1.0);
    ASSERT_EQ(agg.delta_e_mean.size(), 3U);
    EXPECT_DOUBLE_EQ(agg.delta_e_mean[0], 3.0);
    EXPECT_DOUBLE_EQ(agg.delta_e_mean[2], 0.5);
    // Sample standard deviation over sqrt(n): |1 - 0| / sqrt(2) / sqrt(2).
    EXPECT_NEAR(agg.delta_e_stderr[2], 0.5, 1e-15);
    EXPECT_EQ(agg.final_deltas(), (std::vector<double>{1.0, 0.0}));
}

TEST(Aggregate, CsvLayout) {
    TrialResult a;
    a.trace = {2.0, 1.5};
    const auto csv = aggregate_to_csv(aggregate({a}, 1.0));
    std::istringstream in(csv);
    std::string line;
    std::getline(in, line);
    EXPECT_EQ(line, "step,delta_e_mean,delta_e_stderr");
    std::getline(in, line);
    EXPECT_EQ(line.rfind("1,1,0", 0), 0U);
    std::getline(in, line);
    EXPECT_EQ(line.rfind("2,0.5,0", 0), 0U);
}
