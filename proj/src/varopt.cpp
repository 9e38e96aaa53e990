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

#include "symvqc/varopt.hpp"

#include "symvqc/models.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <exception>
#include <limits>
#include <memory>
#include <mutex>
#include <numbers>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace symvqc {

namespace {

struct BudgetExhausted {};

/// Counts evaluations, keeps the best point and the best-so-far trace.
class Tracker {
  public:
    Tracker(const Objective &f, std::size_t budget) : f_(f), budget_(budget) {}

    double operator()(std::span<const double> x) {
        if (trace_.size() >= budget_) {
            throw BudgetExhausted{};
        }
        const double v = f_(x);
        if (!std::isfinite(v)) {
            throw std::domain_error("objective returned a non-finite value");
        }
        if (trace_.empty() || v < best_) {
            best_ = v;
            best_x_.assign(x.begin(), x.end());
        }
        trace_.push_back(best_);
        return v;
    }

    std::size_t remaining() const { return budget_ - trace_.size(); }

    OptimizeResult result() && { return {std::move(trace_), std::move(best_x_), best_}; }

  private:
    const Objective &f_;
    std::size_t budget_;
    std::vector<double> trace_;
    std::vector<double> best_x_;
    double best_ = std::numeric_limits<double>::infinity();
};

/// Adaptive-coefficient Nelder-Mead. A converged simplex is rebuilt around the
/// best vertex while budget remains; two rebuilds without improvement stop it.
void nelder_mead(Tracker &eval, std::span<const double> x0, const OptimizerConfig &cfg) {
    const std::size_t n = x0.size();
    const double dn = static_cast<double>(n);
    // Adaptive coefficients degenerate at n = 1 (no shrink); use the n = 2
    // values, which are the classical ones.
    const double da = static_cast<double>(std::max<std::size_t>(n, 2));
    const double alpha = 1.0;
    const double beta = 1.0 + 2.0 / da;
    const double gamma = 0.75 - 1.0 / (2.0 * da);
    const double delta = 1.0 - 1.0 / da;

    std::vector<std::vector<double>> xs(n + 1);
    std::vector<double> fs(n + 1);
    std::vector<double> start(x0.begin(), x0.end());
    double step = cfg.initial_step;
    double last_restart_best = std::numeric_limits<double>::infinity();
    int stale = 0;

    auto build = [&](const std::vector<double> &centre) {
        xs[0] = centre;
        fs[0] = eval(xs[0]);
        for (std::size_t i = 0; i < n; ++i) {
            xs[i + 1] = centre;
            xs[i + 1][i] += step;
            fs[i + 1] = eval(xs[i + 1]);
        }
    };
    build(start);

    std::vector<std::size_t> order(n + 1);
    std::vector<double> centroid(n), xr(n), xe(n), xc(n);
    for (;;) {
        std::iota(order.begin(), order.end(), 0);
        std::sort(order.begin(), order.end(), [&](auto a, auto b) { return fs[a] < fs[b]; });
        const std::size_t best = order.front(), worst = order.back(), second = order[n - 1];

        double spread = 0.0;
        for (std::size_t i = 0; i <= n; ++i) {
            for (std::size_t k = 0; k < n; ++k) {
                spread = std::max(spread, std::abs(xs[i][k] - xs[best][k]));
            }
        }
        if (spread <= cfg.tolerance || fs[worst] - fs[best] <= cfg.tolerance * 1e-2) {
            if (fs[best] < last_restart_best - cfg.tolerance) {
                stale = 0;
            } else if (++stale >= 2) {
                return;
            }
            last_restart_best = fs[best];
            step = std::max(cfg.initial_step * 0.5, 1e-3);
            build(xs[best]);
            continue;
        }

        std::fill(centroid.begin(), centroid.end(), 0.0);
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t k = 0; k < n; ++k) {
                centroid[k] += xs[order[i]][k] / dn;
            }
        }
        for (std::size_t k = 0; k < n; ++k) {
            xr[k] = centroid[k] + alpha * (centroid[k] - xs[worst][k]);
        }
        const double fr = eval(xr);
        if (fr < fs[best]) {
            for (std::size_t k = 0; k < n; ++k) {
                xe[k] = centroid[k] + beta * (xr[k] - centroid[k]);
            }
            const double fe = eval(xe);
            if (fe < fr) {
                xs[worst] = xe;
                fs[worst] = fe;
            } else {
                xs[worst] = xr;
                fs[worst] = fr;
            }
            continue;
        }
        if (fr < fs[second]) {
            xs[worst] = xr;
            fs[worst] = fr;
            continue;
        }
        const bool outside = fr < fs[worst];
        for (std::size_t k = 0; k < n; ++k) {
            xc[k] = outside ? centroid[k] + gamma * (xr[k] - centroid[k])
                            : centroid[k] - gamma * (centroid[k] - xs[worst][k]);
        }
        const double fc = eval(xc);
        if (fc < (outside ? fr : fs[worst])) {
            xs[worst] = xc;
            fs[worst] = fc;
            continue;
        }
        for (std::size_t i = 1; i <= n; ++i) {
            const std::size_t v = order[i];
            for (std::size_t k = 0; k < n; ++k) {
                xs[v][k] = xs[best][k] + delta * (xs[v][k] - xs[best][k]);
            }
            fs[v] = eval(xs[v]);
        }
    }
}

void spsa(Tracker &eval, std::span<const double> x0, const OptimizerConfig &cfg, std::uint64_t seed) {
    Rng rng(seed);
    std::vector<double> x(x0.begin(), x0.end());
    std::vector<double> plus(x.size()), minus(x.size()), dir(x.size());
    const double stability = 0.05 * static_cast<double>(cfg.max_iterations) / 2.0;
    eval(x);
    for (std::size_t k = 0; eval.remaining() >= 2; ++k) {
        const double kk = static_cast<double>(k);
        const double ak = cfg.spsa_a / std::pow(kk + 1.0 + stability, cfg.spsa_alpha);
        const double ck = cfg.spsa_c / std::pow(kk + 1.0, cfg.spsa_gamma);
        for (std::size_t i = 0; i < x.size(); ++i) {
            dir[i] = rng.below(2) == 0 ? -1.0 : 1.0;
            plus[i] = x[i] + ck * dir[i];
            minus[i] = x[i] - ck * dir[i];
        }
        const double diff = eval(plus) - eval(minus);
        for (std::size_t i = 0; i < x.size(); ++i) {
            x[i] -= ak * diff / (2.0 * ck * dir[i]);
        }
    }
}

double mean_of(const std::vector<double> &v) {
    return std::accumulate(v.begin(), v.end(), 0.0) / static_cast<double>(v.size());
}

}  // namespace

const char *to_string(OptimizerMethod m) { return m == OptimizerMethod::NelderMead ? "nelder-mead" : "spsa"; }

std::optional<OptimizerMethod> parse_optimizer_method(const std::string &name) {
    if (name == "nelder-mead") {
        return OptimizerMethod::NelderMead;
    }
    if (name == "spsa") {
        return OptimizerMethod::Spsa;
    }
    return std::nullopt;
}

void OptimizerConfig::validate() const {
    if (max_iterations < 3) {
        throw std::invalid_argument("optimizer: max_iterations must be at least 3");
    }
    if (!(tolerance >= 0.0) || !std::isfinite(tolerance)) {
        throw std::invalid_argument("optimizer: tolerance must be finite and non-negative");
    }
    if (starts == 0) {
        throw std::invalid_argument("optimizer: starts must be at least 1");
    }
    if (!(initial_step > 0.0) || !std::isfinite(initial_step)) {
        throw std::invalid_argument("optimizer: initial_step must be positive");
    }
    if (!(spsa_a > 0.0) || !(spsa_c > 0.0)) {
        throw std::invalid_argument("optimizer: SPSA gains must be positive");
    }
}

OptimizeResult minimize(const Objective &f, std::span<const double> x0, const OptimizerConfig &cfg,
                        std::uint64_t seed) {
    cfg.validate();
    Tracker eval(f, cfg.max_iterations);
    try {
        if (x0.empty()) {
            eval(x0);
        } else if (cfg.method == OptimizerMethod::NelderMead) {
            nelder_mead(eval, x0, cfg);
        } else {
            spsa(eval, x0, cfg, seed);
        }
    } catch (const BudgetExhausted &) {
    }
    return std::move(eval).result();
}

ParameterBinding initial_parameters(std::size_t count, std::uint64_t seed) {
    Rng rng(seed);
    ParameterBinding x(count);
    for (auto &v : x) {
        v = (2.0 * rng.uniform() - 1.0) * std::numbers::pi;
    }
    return x;
}

Objective energy_objective(const Circuit &c, const PauliSum &h, const EnergyEstimator &est,
                           std::uint64_t stream) {
    est.noise.validate();
    if (h.num_qubits() != c.num_qubits()) {
        throw std::invalid_argument("energy objective: Hamiltonian and circuit widths differ");
    }
    const bool gate_noise = est.noise.p1 > 0.0 || est.noise.p2 > 0.0;
    if (gate_noise && est.trajectories == 0) {
        throw std::invalid_argument("energy objective: trajectories must be positive");
    }
    auto calls = std::make_shared<std::uint64_t>(0);
    return [&c, &h, est, stream, gate_noise, calls](std::span<const double> x) {
        const std::uint64_t call_seed = derive_seed(stream, (*calls)++);
        const StateVector input(c.num_qubits());
        auto measure = [&](const StateVector &psi, std::uint64_t s) {
            return est.is_exact() ? expectation(h, psi)
                                  : sampled_expectation(h, psi, est.shots, s, est.noise.p_readout);
        };
        if (!gate_noise) {
            return measure(apply_circuit(c, x, input), call_seed);
        }
        double sum = 0.0;
        for (std::size_t t = 0; t < est.trajectories; ++t) {
            const std::uint64_t s = derive_seed(call_seed, t);
            sum += measure(apply_circuit_noisy(c, x, input, est.noise, s), derive_seed(s, 1));
        }
        return sum / static_cast<double>(est.trajectories);
    };
}

TrialResult minimize_energy(const Circuit &c, const PauliSum &h, const OptimizerConfig &cfg,
                            const EnergyEstimator &est) {
    cfg.validate();
    TrialResult best;
    double best_seen = 0.0;
    for (std::size_t s = 0; s < cfg.starts; ++s) {
        const std::uint64_t seed = s == 0 ? cfg.seed : derive_seed(cfg.seed, s);
        const ParameterBinding x0 = initial_parameters(c.num_free_parameters(), seed);
        const Objective f = energy_objective(c, h, est, derive_seed(seed, 0x5eed));
        OptimizeResult r = minimize(f, x0, cfg, derive_seed(seed, 0x5a5a));
        if (s == 0 || r.value < best_seen) {
            best_seen = r.value;
            best = {std::move(r.trace), x0, std::move(r.x), r.value};
        }
    }
    if (!est.is_deterministic()) {
        EnergyEstimator fresh = est;
        fresh.trajectories = est.final_trajectories;
        best.final_value = energy_objective(c, h, fresh, derive_seed(cfg.seed, 0xf1a1))(best.final_params);
    }
    return best;
}

std::size_t circuit_particle_number(const Circuit &c) {
    const ParameterBinding zero(c.num_free_parameters(), 0.0);
    const StateVector psi = apply_circuit(c, zero, StateVector(c.num_qubits()));
    const double n = expectation(number_operator(c.num_qubits()), psi);
    const double rounded = std::round(n);
    if (std::abs(n - rounded) > 1e-9 || sector_weight(psi, static_cast<std::size_t>(rounded)) < 1 - 1e-9) {
        throw std::logic_error("circuit does not prepare a fixed particle number");
    }
    return static_cast<std::size_t>(rounded);
}

FidelityReport maximize_fidelity(const Circuit &c, std::span<const StateVector> targets,
                                 const OptimizerConfig &cfg) {
    cfg.validate();
    const std::size_t n = circuit_particle_number(c);
    for (std::size_t i = 0; i < targets.size(); ++i) {
        if (targets[i].num_qubits() != c.num_qubits()) {
            throw std::invalid_argument("maximize_fidelity: target width differs from circuit");
        }
        if (sector_weight(targets[i], n) < 1.0 - 1e-9) {
            throw std::invalid_argument("maximize_fidelity: target " + std::to_string(i) +
                                        " is not in the circuit's particle-number sector");
        }
    }
    FidelityReport report;
    const StateVector input(c.num_qubits());
    for (std::size_t i = 0; i < targets.size(); ++i) {
        const StateVector &target = targets[i];
        const Objective infidelity = [&](std::span<const double> x) {
            return 1.0 - fidelity(target, apply_circuit(c, x, input));
        };
        const std::uint64_t target_seed = derive_seed(cfg.seed, i);
        TrialResult best;
        for (std::size_t s = 0; s < cfg.starts; ++s) {
            const std::uint64_t seed = derive_seed(target_seed, s);
            const ParameterBinding x0 = initial_parameters(c.num_free_parameters(), seed);
            OptimizeResult r = minimize(infidelity, x0, cfg, seed);
            if (s == 0 || r.value < 1.0 - best.final_value) {
                for (auto &v : r.trace) {
                    v = 1.0 - v;
                }
                best = {std::move(r.trace), x0, std::move(r.x), 1.0 - r.value};
            }
            if (best.final_value >= 1.0 - 1e-9) {
                break;
            }
        }
        report.per_target.push_back(std::move(best));
    }
    double sum = 0.0;
    for (const auto &t : report.per_target) {
        sum += t.final_value;
    }
    report.mean_fidelity = targets.empty() ? 0.0 : sum / static_cast<double>(targets.size());
    return report;
}

std::vector<double> AggregateResult::final_deltas() const {
    std::vector<double> out;
    out.reserve(trials.size());
    for (const auto &t : trials) {
        out.push_back(t.final_value - reference_energy);
    }
    return out;
}

AggregateResult aggregate(std::vector<TrialResult> trials, double reference) {
    AggregateResult r;
    r.trial_count = trials.size();
    r.reference_energy = reference;
    std::size_t steps = 0;
    for (const auto &t : trials) {
        if (t.trace.empty()) {
            throw std::invalid_argument("aggregate: empty trace");
        }
        steps = std::max(steps, t.trace.size());
    }
    r.delta_e_mean.resize(steps);
    r.delta_e_stderr.resize(steps);
    std::vector<double> column(trials.size());
    for (std::size_t s = 0; s < steps; ++s) {
        for (std::size_t k = 0; k < trials.size(); ++k) {
            const auto &tr = trials[k].trace;
            column[k] = tr[std::min(s, tr.size() - 1)] - reference;
        }
        const double m = mean_of(column);
        double var = 0.0;
        for (double v : column) {
            var += (v - m) * (v - m);
        }
        const double count = static_cast<double>(column.size());
        r.delta_e_mean[s] = m;
        r.delta_e_stderr[s] = column.size() > 1 ? std::sqrt(var / (count - 1.0) / count) : 0.0;
    }
    r.trials = std::move(trials);
    return r;
}

AggregateResult run_trials(const Circuit &c, const PauliSum &h, const TrialPlan &plan) {
    plan.cfg.validate();
    if (plan.num_trials == 0) {
        throw std::invalid_argument("run_trials: need at least one trial");
    }
    std::vector<TrialResult> results(plan.num_trials);
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mu;
    auto worker = [&] {
        for (std::size_t k = next++; k < plan.num_trials; k = next++) {
            try {
                OptimizerConfig cfg = plan.cfg;
                cfg.seed = plan.base_seed + k;
                results[k] = minimize_energy(c, h, cfg, plan.estimator);
            } catch (...) {
                std::lock_guard lock(failure_mu);
                if (!failure) {
                    failure = std::current_exception();
                }
            }
        }
    };
    const std::size_t threads = std::clamp<std::size_t>(plan.threads, 1, plan.num_trials);
    if (threads == 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        for (std::size_t t = 0; t < threads; ++t) {
            pool.emplace_back(worker);
        }
    }
    if (failure) {
        std::rethrow_exception(failure);
    }
    return aggregate(std::move(results), plan.reference_energy);
}

std::string aggregate_to_csv(const AggregateResult &r) {
    std::string out = "step,delta_e_mean,delta_e_stderr\n";
    char line[96];
    for (std::size_t s = 0; s < r.delta_e_mean.size(); ++s) {
        std::snprintf(line, sizeof line, "%zu,%.17g,%.17g\n", s + 1, r.delta_e_mean[s], r.delta_e_stderr[s]);
        out += line;
    }
    return out;
}

}  // namespace symvqc
