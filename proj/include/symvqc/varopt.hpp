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

/**
 * @file
 * Variational loops: derivative-free minimization (Nelder-Mead, SPSA), VQE
 * energy minimization, fidelity maximization and multi-trial aggregation.
 *
 * An optimization "step" is one objective evaluation. Traces record the best
 * value seen after every evaluation, so they are monotone.
 */
#pragma once

#include "symvqc/circuit.hpp"
#include "symvqc/simulator.hpp"

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace symvqc {

enum class OptimizerMethod { NelderMead, Spsa };

const char *to_string(OptimizerMethod m);
std::optional<OptimizerMethod> parse_optimizer_method(const std::string &name);

struct OptimizerConfig {
    OptimizerMethod method = OptimizerMethod::NelderMead;
    /// Objective evaluations allowed per start.
    std::size_t max_iterations = 1000;
    /// Nelder-Mead: simplex spread at which a start is considered converged.
    double tolerance = 1e-10;
    std::uint64_t seed = 0;
    /// Independent random starts; the best result is kept.
    std::size_t starts = 1;
    /// Edge length of the initial Nelder-Mead simplex.
    double initial_step = 0.5;
    /// SPSA gain constants (Spall's notation).
    double spsa_a = 0.2;
    double spsa_c = 0.1;
    double spsa_alpha = 0.602;
    double spsa_gamma = 0.101;

    void validate() const;
};

using Objective = std::function<double(std::span<const double>)>;

struct OptimizeResult {
    std::vector<double> trace;  // best-so-far after each evaluation
    std::vector<double> x;
    double value = 0.0;
};

/// Minimizes from x0 with a budget of cfg.max_iterations evaluations. The
/// objective may be stochastic; `seed` drives SPSA perturbations.
OptimizeResult minimize(const Objective &f, std::span<const double> x0, const OptimizerConfig &cfg,
                        std::uint64_t seed);

/// Uniform in [-pi, pi) per slot, from Rng(seed).
ParameterBinding initial_parameters(std::size_t count, std::uint64_t seed);

struct EnergyEstimator {
    /// 0 = exact expectation; otherwise shots per measurement group.
    std::size_t shots = 0;
    NoiseSpec noise;
    /// Trajectories averaged per evaluation when gate noise is present.
    std::size_t trajectories = 16;
    /// Trajectories for the fresh estimate of the final energy.
    std::size_t final_trajectories = 256;

    static EnergyEstimator exact() { return {}; }
    static EnergyEstimator sampled(std::size_t shots) {
        EnergyEstimator e;
        e.shots = shots;
        return e;
    }

    bool is_exact() const { return shots == 0; }
    /// Exact expectations without gate noise: evaluations are deterministic.
    bool is_deterministic() const { return shots == 0 && noise.p1 == 0.0 && noise.p2 == 0.0; }
};

struct TrialResult {
    /// Best-so-far objective values as seen by the optimizer.
    std::vector<double> trace;
    ParameterBinding initial_params;
    ParameterBinding final_params;
    /// Objective at final_params. For stochastic energy estimators this is an
    /// independent re-estimate, free of the optimizer's selection bias.
    double final_value = 0.0;
};

/// Builds the energy objective for a circuit started from |0...0>.
/// `stream` separates the random streams of different trials.
Objective energy_objective(const Circuit &c, const PauliSum &h, const EnergyEstimator &est,
                           std::uint64_t stream);

/// VQE. Starts from initial_parameters(n, cfg.seed) (further starts draw
/// from derived seeds).
TrialResult minimize_energy(const Circuit &c, const PauliSum &h, const OptimizerConfig &cfg,
                            const EnergyEstimator &est);

struct FidelityReport {
    std::vector<TrialResult> per_target;  // values and traces are fidelities
    double mean_fidelity = 0.0;
};

/// Particle number of the circuit's output sector (from |0...0>).
std::size_t circuit_particle_number(const Circuit &c);

/// Independently maximizes |<target_i|circuit(x)>|^2 for every target. Starts
/// are repeated (up to cfg.starts) until a start reaches 1 - 1e-9.
FidelityReport maximize_fidelity(const Circuit &c, std::span<const StateVector> targets,
                                 const OptimizerConfig &cfg);

struct AggregateResult {
    std::vector<double> delta_e_mean;    // per step
    std::vector<double> delta_e_stderr;  // per step
    std::size_t trial_count = 0;
    std::vector<TrialResult> trials;
    double reference_energy = 0.0;

    /// final_value - reference for each trial.
    std::vector<double> final_deltas() const;
};

struct TrialPlan {
    OptimizerConfig cfg;
    EnergyEstimator estimator;
    std::size_t num_trials = 1;
    std::uint64_t base_seed = 0;
    double reference_energy = 0.0;
    /// Worker threads; trials are independent and results do not depend on it.
    std::size_t threads = 1;
};

/// Trial k runs minimize_energy with seed base_seed + k, so two circuits with
/// the same parameter count share initial parameters trial by trial.
AggregateResult run_trials(const Circuit &c, const PauliSum &h, const TrialPlan &plan);

/// Reduces per-trial traces (padded with their last value) to mean and
/// standard error of (trace - reference).
AggregateResult aggregate(std::vector<TrialResult> trials, double reference);

/// "step,delta_e_mean,delta_e_stderr" with step counted from 1.
std::string aggregate_to_csv(const AggregateResult &r);

}  // namespace symvqc
