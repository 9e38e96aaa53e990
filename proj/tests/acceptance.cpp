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

// End-to-end acceptance run. Prints one PASS/FAIL line per criterion.
//
//   acceptance [--only 1,3] [--known-unattainable 4]
//
// Exit status is 0 when every criterion passes, apart from those listed as
// known-unattainable (which are still run and reported).

#include "oracles.hpp"
#include "symvqc/circuit.hpp"
#include "symvqc/gatelib.hpp"
#include "symvqc/models.hpp"
#include "symvqc/simulator.hpp"
#include "symvqc/symmetry.hpp"
#include "symvqc/varopt.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <numbers>
#include <numeric>
#include <set>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

using namespace symvqc;
using std::numbers::pi;

namespace {

struct Outcome {
    bool passed = false;
    std::string detail;
};

std::string fmt(const char *f, auto... args) {
    char buf[512];
    std::snprintf(buf, sizeof buf, f, args...);
    return buf;
}

std::size_t worker_threads() { return std::max(1U, std::thread::hardware_concurrency()); }

Outcome gate_closed_forms() {
    double worst = 0.0;
    for (int i = 0; i < 10; ++i)
        for (int j = 0; j < 10; ++j) {
            const double t = -pi + 2 * pi * i / 9.0, p = -pi + 2 * pi * j / 9.0;
            worst = std::max(worst, oracle::max_diff(oracle::from(a_gate_bottom_up(t, p)), oracle::a_closed(t, p)));
            worst = std::max(worst, oracle::max_diff(oracle::from(b_gate_bottom_up(t, p)), oracle::b_closed(t, p)));
        }
    return {worst <= 1e-12, fmt("max deviation %.2e over 10x10 grid, both gates", worst)};
}

// Circuit with the particle-placing X gates removed.
Circuit body_of(const Circuit &c) {
    Circuit out(c.num_qubits());
    for (const auto &op : c.ops())
        if (op.kind != GateKind::X) out.append(op.kind, op.qubits, op.params);
    return out;
}

Outcome particle_conservation() {
    oracle::Mat n2(4);
    n2(1, 1) = 1.0;
    n2(2, 2) = 1.0;
    n2(3, 3) = 2.0;
    double comm = 0.0;
    Rng rng(2024);
    for (int k = 0; k < 200; ++k) {
        const double t = 4 * pi * (rng.uniform() - 0.5), p = 4 * pi * (rng.uniform() - 0.5);
        for (const auto &g : {oracle::from(a_gate(t, p)), oracle::from(b_gate(t, p))})
            comm = std::max(comm, oracle::max_diff(oracle::mul(g, n2), oracle::mul(n2, g)));
    }
    std::vector<std::pair<std::string, Circuit>> circuits;
    std::vector<std::size_t> particles;
    for (auto [l, n] : {std::pair<std::size_t, std::size_t>{2, 1}, {3, 1}, {4, 2}, {6, 3}})
        for (auto g : {GateKind::AGate, GateKind::BGate}) {
            circuits.emplace_back(fmt("(%zu,%zu)", l, n), build_brickwall(l, n, g));
            particles.push_back(n);
        }
    for (auto g : {GateKind::AGate, GateKind::BGate}) {
        circuits.emplace_back("swap", build_swap_variant_2on4(g));
        particles.push_back(2);
    }
    double leak = 0.0;
    for (std::size_t i = 0; i < circuits.size(); ++i) {
        const auto body = body_of(circuits[i].second);
        const std::size_t nq = body.num_qubits(), n = particles[i];
        for (std::uint64_t s = 0; s < 3; ++s) {
            const auto binding = initial_parameters(body.num_free_parameters(), 500 + s);
            for (auto idx : sector_basis_indices(nq, n)) {
                const auto out = apply_circuit(body, binding, StateVector::basis_state(nq, idx));
                leak = std::max(leak, std::abs(1.0 - sector_weight(out, n)));
            }
        }
        // Full circuit from the vacuum as well.
        const auto out = apply_circuit(circuits[i].second, initial_parameters(body.num_free_parameters(), 9),
                                       StateVector(nq));
        leak = std::max(leak, std::abs(1.0 - sector_weight(out, n)));
    }
    return {comm <= 1e-12 && leak < 1e-12,
            fmt("max |[G,N2]| %.2e, max leakage %.2e over %zu circuits", comm, leak, circuits.size())};
}

Outcome counting() {
    const auto a = build_brickwall(4, 2, GateKind::AGate);
    const auto s = build_swap_variant_2on4(GateKind::AGate);
    const std::size_t v[6] = {a.parameterized_gate_count(), a.num_free_parameters(), cnot_count(a),
                              s.parameterized_gate_count(), s.num_free_parameters(), cnot_count(s)};
    const bool ok = v[0] == 6 && v[1] == 10 && v[2] == 18 && v[3] == 5 && v[4] == 10 && v[5] == 27;
    return {ok, fmt("brickwall gates=%zu params=%zu cnots=%zu; swap gates=%zu params=%zu cnots=%zu", v[0], v[1], v[2],
                    v[3], v[4], v[5])};
}

Outcome fidelity_span() {
    std::vector<StateVector> targets;
    for (std::uint64_t i = 0; i < 50; ++i) targets.push_back(haar_random_sector_state(4, 2, derive_seed(2025, i)));
    OptimizerConfig cfg;
    cfg.max_iterations = 4000;
    cfg.starts = 10;
    cfg.seed = 7;
    const std::vector<std::pair<std::string, Circuit>> circuits{
        {"brickwall-A", build_brickwall(4, 2, GateKind::AGate)},
        {"brickwall-B", build_brickwall(4, 2, GateKind::BGate)},
        {"swap-A", build_swap_variant_2on4(GateKind::AGate)}};
    bool ok = true;
    std::string detail;
    for (const auto &[name, c] : circuits) {
        const auto r = maximize_fidelity(c, targets, cfg);
        double lo = 1.0;
        for (const auto &t : r.per_target) lo = std::min(lo, t.final_value);
        ok = ok && r.mean_fidelity >= 0.999;
        detail += fmt("%s mean %.6f min %.6f; ", name.c_str(), r.mean_fidelity, lo);
    }
    detail.resize(detail.size() - 2);
    return {ok, detail};
}

Outcome vqe_noiseless() {
    struct Case {
        std::size_t sites;
        std::size_t budget;
        double tol_b;
        double tol_a;
    };
    bool ok = true;
    std::string detail;
    for (const Case cs : {Case{4, 1000, 1e-3, 1e-2}, Case{6, 20000, 1e-2, 5e-2}}) {
        const std::size_t n = cs.sites / 2;
        const auto h = xxz_hamiltonian({cs.sites, 1.0, Boundary::Open});
        const double e0 = exact_ground(h, n).energy;
        for (auto g : {GateKind::BGate, GateKind::AGate}) {
            TrialPlan plan;
            plan.cfg.max_iterations = cs.budget;
            plan.num_trials = 20;
            plan.base_seed = 0;
            plan.reference_energy = e0;
            plan.threads = worker_threads();
            const auto agg = run_trials(build_brickwall(cs.sites, n, g), h, plan);
            double best = 1e300;
            for (const auto &t : agg.trials) best = std::min(best, t.final_value);
            const double tol = g == GateKind::BGate ? cs.tol_b : cs.tol_a;
            ok = ok && std::abs(best - e0) <= tol;
            detail += fmt("L=%zu %s best %.6f (E0 %.6f, gap %.1e, tol %.0e); ", cs.sites,
                          g == GateKind::BGate ? "B" : "A", best, e0, best - e0, tol);
        }
    }
    detail.resize(detail.size() - 2);
    return {ok, detail};
}

Outcome mapping() {
    double worst = 0.0;
    bool constant = true;
    for (std::size_t l : {2, 3, 4})
        for (std::size_t n = 0; n <= l; ++n) {
            const XXZSpec xs{l, 1.0, Boundary::Periodic};
            const auto c = xxz_bose_hubbard_constant(xs, n);
            if (!c) {
                constant = false;
                continue;
            }
            const auto lhs = sector_spectrum(xxz_hamiltonian(xs), n);
            const auto rhs = sector_spectrum(bose_hubbard_hamiltonian({l, 2.0, Boundary::Periodic}), n);
            for (std::size_t k = 0; k < lhs.size(); ++k) worst = std::max(worst, std::abs(lhs[k] - (2 * rhs[k] + *c)));
        }
    // Open chains: the operator identity with its site-dependent offset.
    bool open_identity = true;
    for (std::size_t l : {2, 3, 4}) {
        const XXZSpec xs{l, 1.0, Boundary::Open};
        auto expected = PauliPolynomial::identity(l, double(l - 1));
        for (auto [i, j] : chain_bonds(l, Boundary::Open))
            expected = expected - (hardcore_occupation(l, i) + hardcore_occupation(l, j)) * 2.0;
        const auto lhs = PauliPolynomial::from_sum(xxz_hamiltonian(xs));
        const auto rhs = PauliPolynomial::from_sum(bose_hubbard_hamiltonian({l, 2.0, Boundary::Open})) * 2.0 + expected;
        open_identity = open_identity && (lhs - rhs).is_zero(1e-12);
    }
    bool commute = true;
    for (std::size_t l : {2, 3, 4, 6})
        for (auto b : {Boundary::Open, Boundary::Periodic}) {
            const auto xxz = PauliPolynomial::from_sum(xxz_hamiltonian({l, 1.0, b}));
            const auto bh = PauliPolynomial::from_sum(bose_hubbard_hamiltonian({l, 2.0, b}));
            commute = commute && commutator(xxz, PauliPolynomial::from_sum(magnetization(l))).is_zero(0.0) &&
                      commutator(bh, PauliPolynomial::from_sum(number_operator(l))).is_zero(0.0);
        }
    return {constant && worst <= 1e-9 && open_identity && commute,
            fmt("periodic L=2..4 all N: max spectral deviation %.1e; open-chain operator identity %s; "
                "[XXZ,M]=0 and [BH,N]=0 exactly: %s",
                worst, open_identity ? "holds" : "FAILS", commute ? "yes" : "no")};
}

Outcome shot_estimator() {
    const auto h = xxz_hamiltonian({4, 1.0, Boundary::Open});
    const auto c = build_brickwall(4, 2, GateKind::BGate);
    const auto psi = apply_circuit(c, initial_parameters(c.num_free_parameters(), 31), StateVector(4));
    const double exact = expectation(h, psi);
    const double predicted = predicted_shot_stderr(h, psi, 1024);
    constexpr int kRuns = 500;
    std::vector<double> est;
    for (int k = 0; k < kRuns; ++k) est.push_back(sampled_expectation(h, psi, 1024, derive_seed(77, k)));
    const double mean = std::accumulate(est.begin(), est.end(), 0.0) / kRuns;
    double ss = 0.0;
    for (double e : est) ss += (e - mean) * (e - mean);
    const double sd = std::sqrt(ss / (kRuns - 1));
    const double z = (mean - exact) / (sd / std::sqrt(double(kRuns)));
    const double ratio = sd / predicted;
    return {std::abs(z) <= 4.0 && std::abs(ratio - 1.0) <= 0.2,
            fmt("grand mean %.5f vs exact %.5f (%.2f SE); empirical stderr %.4f vs predicted %.4f (ratio %.3f)", mean,
                exact, z, sd, predicted, ratio)};
}

Outcome noise_effect() {
    const auto h = xxz_hamiltonian({4, 1.0, Boundary::Open});
    const auto c = build_brickwall(4, 2, GateKind::BGate);
    TrialPlan plan;
    plan.cfg.max_iterations = 1000;
    plan.num_trials = 50;
    plan.reference_energy = exact_ground(h, 2).energy;
    plan.threads = worker_threads();
    const auto clean = run_trials(c, h, plan);
    auto mean_final = [](const AggregateResult &r) {
        const auto d = r.final_deltas();
        return std::accumulate(d.begin(), d.end(), 0.0) / double(d.size());
    };
    TrialPlan zero = plan;
    zero.estimator.noise = NoiseSpec{0.0, 0.0, 0.0};
    const auto z = run_trials(c, h, zero);
    bool identical = z.delta_e_mean == clean.delta_e_mean && z.final_deltas() == clean.final_deltas();
    for (std::size_t k = 0; k < z.trials.size(); ++k) identical = identical && z.trials[k].trace == clean.trials[k].trace;
    TrialPlan noisy = plan;
    noisy.estimator.noise.p2 = 0.01;
    const auto n = run_trials(c, h, noisy);
    const double m0 = mean_final(clean), m1 = mean_final(n);
    return {m1 > m0 && identical, fmt("mean final dE noiseless %.5f, p2=0.01 %.5f (margin %+.5f); p=0 traces "
                                      "bit-identical: %s",
                                      m0, m1, m1 - m0, identical ? "yes" : "no")};
}

std::set<int> parse_list(const std::string &s) {
    std::set<int> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ','))
        if (!item.empty()) out.insert(std::stoi(item));
    return out;
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"symvqc acceptance run"};
    std::string only, known;
    app.add_option("--only", only, "Comma-separated criteria to run");
    app.add_option("--known-unattainable", known, "Criteria whose failure does not affect the exit status");
    CLI11_PARSE(app, argc, argv);

    struct Criterion {
        std::string name;
        std::function<Outcome()> run;
        double time_limit;  // seconds
    };
    constexpr double kNoLimit = 1e300;
    const std::map<int, Criterion> criteria{
        {1, {"gate closed forms", gate_closed_forms, 1.0}},
        {2, {"particle conservation", particle_conservation, 10.0}},
        {3, {"gate and CNOT counts", counting, kNoLimit}},
        {4, {"fidelity span", fidelity_span, kNoLimit}},
        {5, {"noiseless VQE", vqe_noiseless, 1800.0}},
        {6, {"XXZ / Bose-Hubbard mapping", mapping, kNoLimit}},
        {7, {"shot estimator", shot_estimator, kNoLimit}},
        {8, {"depolarizing noise", noise_effect, kNoLimit}},
    };
    const auto selected = parse_list(only);
    const auto excused = parse_list(known);
    bool all_ok = true;
    for (const auto &[id, entry] : criteria) {
        if (!selected.empty() && !selected.contains(id)) continue;
        const auto t0 = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = entry.run();
        } catch (const std::exception &e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        if (secs > entry.time_limit) {
            o.passed = false;
            o.detail += fmt(" (over the %.0fs time limit)", entry.time_limit);
        }
        std::printf("%s  %d  %-28s %.2fs  %s%s\n", o.passed ? "PASS" : "FAIL", id, entry.name.c_str(), secs,
                    o.detail.c_str(), !o.passed && excused.contains(id) ? "  [known unattainable]" : "");
        std::fflush(stdout);
        if (!o.passed && !excused.contains(id)) all_ok = false;
    }
    return all_ok ? 0 : 1;
}
