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

#include "symvqc/symvqc.h"

#include "symvqc/circuit.hpp"
#include "symvqc/models.hpp"
#include "symvqc/varopt.hpp"
#include "symvqc/verify.hpp"

#include <json.hpp>

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <cmath>
#include <cstring>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>

#ifndef SYMVQC_VERSION_STRING
#define SYMVQC_VERSION_STRING "0.0.0"
#endif

struct symvqc_circuit {
    symvqc::Circuit circuit;
};

struct symvqc_fidelity_result {
    std::vector<double> fidelities;
    double mean = 0.0;
};

struct symvqc_vqe_result {
    symvqc::AggregateResult aggregate;
};

namespace {

thread_local std::string g_last_error;

symvqc_status fail(symvqc_status s, const std::string &msg) {
    g_last_error = msg;
    return s;
}

/// Runs body, translating exceptions into status codes.
template <typename F>
symvqc_status guarded(F &&body) {
    try {
        g_last_error.clear();
        body();
        return SYMVQC_OK;
    } catch (const nlohmann::json::exception &e) {
        return fail(SYMVQC_ERR_PARSE, e.what());
    } catch (const std::out_of_range &e) {
        return fail(SYMVQC_ERR_OUT_OF_RANGE, e.what());
    } catch (const std::invalid_argument &e) {
        return fail(SYMVQC_ERR_INVALID_ARGUMENT, e.what());
    } catch (const std::domain_error &e) {
        return fail(SYMVQC_ERR_INVALID_ARGUMENT, e.what());
    } catch (const std::exception &e) {
        return fail(SYMVQC_ERR_RUNTIME, e.what());
    } catch (...) {
        return fail(SYMVQC_ERR_RUNTIME, "unknown error");
    }
}

char *copy_string(const std::string &s) {
    char *out = static_cast<char *>(std::malloc(s.size() + 1));
    if (out == nullptr) {
        throw std::bad_alloc();
    }
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

symvqc::GateKind parse_gate(const char *gate) {
    const std::string g(gate);
    if (g == "a") {
        return symvqc::GateKind::AGate;
    }
    if (g == "b") {
        return symvqc::GateKind::BGate;
    }
    throw std::invalid_argument("gate must be \"a\" or \"b\", got \"" + g + "\"");
}

}  // namespace

extern "C" {

const char *symvqc_version(void) { return SYMVQC_VERSION_STRING; }

const char *symvqc_status_string(symvqc_status status) {
    switch (status) {
        case SYMVQC_OK:
            return "ok";
        case SYMVQC_ERR_NULL_ARGUMENT:
            return "null argument";
        case SYMVQC_ERR_INVALID_ARGUMENT:
            return "invalid argument";
        case SYMVQC_ERR_PARSE:
            return "parse error";
        case SYMVQC_ERR_OUT_OF_RANGE:
            return "out of range";
        case SYMVQC_ERR_RUNTIME:
            return "runtime error";
    }
    return "unknown status";
}

const char *symvqc_last_error(void) { return g_last_error.c_str(); }

void symvqc_string_free(char *s) { std::free(s); }

symvqc_status symvqc_circuit_build_brickwall(size_t sites, size_t particles, const char *gate,
                                             symvqc_circuit **out) {
    if (out == nullptr || gate == nullptr) {
        return fail(SYMVQC_ERR_NULL_ARGUMENT, out == nullptr ? "out is null" : "gate is null");
    }
    *out = nullptr;
    return guarded([&] {
        *out = new symvqc_circuit{symvqc::build_brickwall(sites, particles, parse_gate(gate))};
    });
}

symvqc_status symvqc_circuit_build_swap24(const char *gate, symvqc_circuit **out) {
    if (out == nullptr || gate == nullptr) {
        return fail(SYMVQC_ERR_NULL_ARGUMENT, out == nullptr ? "out is null" : "gate is null");
    }
    *out = nullptr;
    return guarded([&] { *out = new symvqc_circuit{symvqc::build_swap_variant_2on4(parse_gate(gate))}; });
}

symvqc_status symvqc_circuit_from_json(const char *json, symvqc_circuit **out) {
    if (out == nullptr || json == nullptr) {
        return fail(SYMVQC_ERR_NULL_ARGUMENT, "json or out is null");
    }
    *out = nullptr;
    try {
        g_last_error.clear();
        *out = new symvqc_circuit{symvqc::circuit_from_json(json)};
        return SYMVQC_OK;
    } catch (const std::exception &e) {
        return fail(SYMVQC_ERR_PARSE, e.what());
    }
}

symvqc_status symvqc_circuit_to_json(const symvqc_circuit *c, char **out) {
    if (c == nullptr || out == nullptr) {
        return fail(SYMVQC_ERR_NULL_ARGUMENT, "circuit or out is null");
    }
    *out = nullptr;
    return guarded([&] { *out = copy_string(symvqc::circuit_to_json(c->circuit)); });
}

void symvqc_circuit_free(symvqc_circuit *c) { delete c; }

symvqc_status symvqc_circuit_get_info(const symvqc_circuit *c, symvqc_circuit_info *info) {
    if (c == nullptr || info == nullptr) {
        return fail(SYMVQC_ERR_NULL_ARGUMENT, "circuit or info is null");
    }
    return guarded([&] {
        info->num_qubits = c->circuit.num_qubits();
        info->particles = symvqc::circuit_particle_number(c->circuit);
        info->parameterized_gates = c->circuit.parameterized_gate_count();
        info->free_parameters = c->circuit.num_free_parameters();
        info->cnots = symvqc::cnot_count(c->circuit);
    });
}

void symvqc_fidelity_options_init(symvqc_fidelity_options *opts) {
    if (opts == nullptr) {
        return;
    }
    opts->targets = 50;
    opts->seed = 0;
    opts->source = SYMVQC_TARGET_HAAR;
    opts->max_iterations = 4000;
    opts->starts = 10;
}

symvqc_status symvqc_fidelity_run(const symvqc_circuit *c, const symvqc_fidelity_options *opts,
                                  symvqc_fidelity_result **out) {
    if (c == nullptr || opts == nullptr || out == nullptr) {
        return fail(SYMVQC_ERR_NULL_ARGUMENT, "circuit, options or out is null");
    }
    *out = nullptr;
    return guarded([&] {
        if (opts->targets == 0) {
            throw std::invalid_argument("targets must be positive");
        }
        if (opts->source != SYMVQC_TARGET_HAAR && opts->source != SYMVQC_TARGET_CIRCUIT) {
            throw std::invalid_argument("unknown target source");
        }
        const symvqc::Circuit &circ = c->circuit;
        const std::size_t n = symvqc::circuit_particle_number(circ);
        std::vector<symvqc::StateVector> targets;
        for (std::size_t i = 0; i < opts->targets; ++i) {
            const std::uint64_t seed = symvqc::derive_seed(opts->seed, i);
            if (opts->source == SYMVQC_TARGET_HAAR) {
                targets.push_back(symvqc::haar_random_sector_state(circ.num_qubits(), n, seed));
            } else {
                const auto x = symvqc::initial_parameters(circ.num_free_parameters(), seed);
                targets.push_back(symvqc::apply_circuit(circ, x, symvqc::StateVector(circ.num_qubits())));
            }
        }
        symvqc::OptimizerConfig cfg;
        cfg.max_iterations = opts->max_iterations;
        cfg.starts = opts->starts;
        cfg.seed = symvqc::derive_seed(opts->seed, 0xf1de);
        const auto report = symvqc::maximize_fidelity(circ, targets, cfg);
        auto *r = new symvqc_fidelity_result;
        for (const auto &t : report.per_target) {
            r->fidelities.push_back(t.final_value);
        }
        r->mean = report.mean_fidelity;
        *out = r;
    });
}

size_t symvqc_fidelity_result_count(const symvqc_fidelity_result *r) { return r ? r->fidelities.size() : 0; }

double symvqc_fidelity_result_value(const symvqc_fidelity_result *r, size_t index) {
    if (r == nullptr || index >= r->fidelities.size()) {
        return std::numeric_limits<double>::quiet_NaN();
    }
    return r->fidelities[index];
}

double symvqc_fidelity_result_mean(const symvqc_fidelity_result *r) {
    return r ? r->mean : std::numeric_limits<double>::quiet_NaN();
}

symvqc_status symvqc_fidelity_result_csv(const symvqc_fidelity_result *r, char **out) {
    if (r == nullptr || out == nullptr) {
        return fail(SYMVQC_ERR_NULL_ARGUMENT, "result or out is null");
    }
    *out = nullptr;
    return guarded([&] {
        std::string csv = "target,fidelity\n";
        char line[64];
        for (std::size_t i = 0; i < r->fidelities.size(); ++i) {
            std::snprintf(line, sizeof line, "%zu,%.17g\n", i, r->fidelities[i]);
            csv += line;
        }
        *out = copy_string(csv);
    });
}

void symvqc_fidelity_result_free(symvqc_fidelity_result *r) { delete r; }

void symvqc_vqe_options_init(symvqc_vqe_options *opts) {
    if (opts == nullptr) {
        return;
    }
    opts->gamma = 1.0;
    opts->boundary = "open";
    opts->shots = 0;
    opts->p1 = 0.0;
    opts->p2 = 0.0;
    opts->p_readout = 0.0;
    opts->trajectories = 16;
    opts->trials = 20;
    opts->seed = 0;
    opts->optimizer = "nelder-mead";
    opts->max_iterations = 1000;
    opts->starts = 1;
    opts->threads = 1;
}

symvqc_status symvqc_vqe_run(const symvqc_circuit *c, const symvqc_vqe_options *opts, symvqc_vqe_result **out) {
    if (c == nullptr || opts == nullptr || out == nullptr) {
        return fail(SYMVQC_ERR_NULL_ARGUMENT, "circuit, options or out is null");
    }
    *out = nullptr;
    return guarded([&] {
        const auto boundary = symvqc::parse_boundary(opts->boundary ? opts->boundary : "");
        if (!boundary) {
            throw std::invalid_argument("boundary must be \"open\" or \"periodic\"");
        }
        const auto method = symvqc::parse_optimizer_method(opts->optimizer ? opts->optimizer : "");
        if (!method) {
            throw std::invalid_argument("optimizer must be \"nelder-mead\" or \"spsa\"");
        }
        if (!std::isfinite(opts->gamma)) {
            throw std::invalid_argument("gamma must be finite");
        }
        const symvqc::Circuit &circ = c->circuit;
        const symvqc::PauliSum h = symvqc::xxz_hamiltonian({circ.num_qubits(), opts->gamma, *boundary});
        const std::size_t n = symvqc::circuit_particle_number(circ);

        symvqc::TrialPlan plan;
        plan.cfg.method = *method;
        plan.cfg.max_iterations = opts->max_iterations;
        plan.cfg.starts = opts->starts;
        plan.estimator.shots = opts->shots;
        plan.estimator.noise = {opts->p1, opts->p2, opts->p_readout};
        plan.estimator.trajectories = opts->trajectories;
        plan.num_trials = opts->trials;
        plan.base_seed = opts->seed;
        plan.reference_energy = symvqc::exact_ground(h, n).energy;
        plan.threads = opts->threads;
        *out = new symvqc_vqe_result{symvqc::run_trials(circ, h, plan)};
    });
}

double symvqc_vqe_result_reference_energy(const symvqc_vqe_result *r) {
    return r ? r->aggregate.reference_energy : std::numeric_limits<double>::quiet_NaN();
}

size_t symvqc_vqe_result_steps(const symvqc_vqe_result *r) { return r ? r->aggregate.delta_e_mean.size() : 0; }

size_t symvqc_vqe_result_trials(const symvqc_vqe_result *r) { return r ? r->aggregate.trial_count : 0; }

double symvqc_vqe_result_final_mean_delta(const symvqc_vqe_result *r) {
    if (r == nullptr || r->aggregate.delta_e_mean.empty()) {
        return std::numeric_limits<double>::quiet_NaN();
    }
    return r->aggregate.delta_e_mean.back();
}

double symvqc_vqe_result_best_energy(const symvqc_vqe_result *r) {
    if (r == nullptr || r->aggregate.trials.empty()) {
        return std::numeric_limits<double>::quiet_NaN();
    }
    double best = std::numeric_limits<double>::infinity();
    for (const auto &t : r->aggregate.trials) {
        best = std::min(best, t.final_value);
    }
    return best;
}

double symvqc_vqe_result_trial_final_energy(const symvqc_vqe_result *r, size_t trial) {
    if (r == nullptr || trial >= r->aggregate.trials.size()) {
        return std::numeric_limits<double>::quiet_NaN();
    }
    return r->aggregate.trials[trial].final_value;
}

symvqc_status symvqc_vqe_result_csv(const symvqc_vqe_result *r, char **out) {
    if (r == nullptr || out == nullptr) {
        return fail(SYMVQC_ERR_NULL_ARGUMENT, "result or out is null");
    }
    *out = nullptr;
    return guarded([&] { *out = copy_string(symvqc::aggregate_to_csv(r->aggregate)); });
}

void symvqc_vqe_result_free(symvqc_vqe_result *r) { delete r; }

symvqc_status symvqc_verify(const char *suite, char **report, int *all_passed) {
    if (suite == nullptr || report == nullptr || all_passed == nullptr) {
        return fail(SYMVQC_ERR_NULL_ARGUMENT, "suite, report or all_passed is null");
    }
    *report = nullptr;
    *all_passed = 0;
    return guarded([&] {
        const auto checks = symvqc::run_verify_suite(suite);
        std::string text;
        bool ok = true;
        for (const auto &c : checks) {
            ok = ok && c.passed;
            text += c.passed ? "PASS  " : "FAIL  ";
            text += c.suite;
            text.append(std::max<std::size_t>(10 - c.suite.size(), 1), ' ');
            text += c.name;
            if (!c.detail.empty()) {
                text += "  [" + c.detail + "]";
            }
            text += '\n';
        }
        *report = copy_string(text);
        *all_passed = ok ? 1 : 0;
    });
}

}  // extern "C"
