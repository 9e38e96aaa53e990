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

#include "symvqc/verify.hpp"

#include "symvqc/circuit.hpp"
#include "symvqc/gatelib.hpp"
#include "symvqc/models.hpp"
#include "symvqc/simulator.hpp"
#include "symvqc/symmetry.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <stdexcept>

namespace symvqc {

namespace {

constexpr double kTight = 1e-12;

std::string format_error(double e) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "max err %.3g", e);
    return buf;
}

VerifyCheck bounded(const std::string &suite, const std::string &name, double err, double tol) {
    return {suite, name, err <= tol, format_error(err)};
}

/// 10 evenly spaced angles in [-pi, pi].
std::array<double, 10> angle_grid() {
    std::array<double, 10> g{};
    for (std::size_t i = 0; i < g.size(); ++i) {
        g[i] = -std::numbers::pi + 2.0 * std::numbers::pi * static_cast<double>(i) / 9.0;
    }
    return g;
}

double over_grid(const std::function<double(double, double)> &f) {
    double worst = 0.0;
    for (double t : angle_grid()) {
        for (double p : angle_grid()) {
            worst = std::max(worst, f(t, p));
        }
    }
    return worst;
}

ComplexMatrix two_site_number() {
    const std::array<Complex, 4> n{0.0, 1.0, 1.0, 2.0};
    return ComplexMatrix::diagonal(n);
}

/// The circuit with its initial X gates removed.
Circuit without_state_preparation(const Circuit &c) {
    Circuit body(c.num_qubits());
    for (const auto &op : c.ops()) {
        if (op.kind != GateKind::X) {
            body.append(op.kind, op.qubits, op.params);
        }
    }
    return body;
}

/// Largest out-of-sector weight produced by the circuit body acting on any
/// N-particle basis state, under a few random bindings.
double sector_leakage(const Circuit &c, std::size_t particles) {
    const Circuit body = without_state_preparation(c);
    const std::size_t L = c.num_qubits();
    double worst = 0.0;
    for (std::uint64_t seed = 1; seed <= 3; ++seed) {
        const ParameterBinding x = [&] {
            Rng rng(seed);
            ParameterBinding v(body.num_free_parameters());
            for (auto &a : v) {
                a = (2.0 * rng.uniform() - 1.0) * std::numbers::pi;
            }
            return v;
        }();
        for (std::size_t idx : sector_basis_indices(L, particles)) {
            const StateVector out = apply_circuit(body, x, StateVector::basis_state(L, idx));
            worst = std::max(worst, 1.0 - sector_weight(out, particles));
        }
        const StateVector prepared = apply_circuit(c, x, StateVector(L));
        worst = std::max(worst, 1.0 - sector_weight(prepared, particles));
    }
    return worst;
}

std::vector<VerifyCheck> gates_suite() {
    const std::string s = "gates";
    std::vector<VerifyCheck> out;
    out.push_back(bounded(s, "a_gate closed form = bottom-up composition", over_grid([](double t, double p) {
                              return max_abs_diff(a_gate(t, p), a_gate_bottom_up(t, p));
                          }),
                          kTight));
    out.push_back(bounded(s, "b_gate closed form = bottom-up composition", over_grid([](double t, double p) {
                              return max_abs_diff(b_gate(t, p), b_gate_bottom_up(t, p));
                          }),
                          kTight));
    out.push_back(bounded(s, "fusion gate is an involution",
                          max_abs_diff(matmul(fusion_gate(), fusion_gate()), ComplexMatrix::identity(4)),
                          kTight));
    out.push_back({s, "a_gate and b_gate are unitary",
                   over_grid([](double t, double p) {
                       return is_unitary(a_gate(t, p), kTight) && is_unitary(b_gate(t, p), kTight) ? 0.0 : 1.0;
                   }) == 0.0,
                   ""});
    for (auto [kind, cost] : {std::pair{GateKind::AGate, 3}, {GateKind::BGate, 4}, {GateKind::Swap, 3},
                              {GateKind::ControlledV, 1}}) {
        const std::string label(to_string(kind));
        out.push_back(bounded(s, label + " decomposition reproduces its matrix", over_grid([kind](double t, double p) {
                                  const std::vector<double> params =
                                      arity(kind) == 2 ? std::vector<double>{t, p} : std::vector<double>{};
                                  return max_abs_diff(decompose(kind, params).matrix(), gate_matrix(kind, params));
                              }),
                              1e-10));
        const std::vector<double> params = arity(kind) == 2 ? std::vector<double>{0.3, 0.7} : std::vector<double>{};
        const std::size_t counted = decompose(kind, params).cnot_count();
        out.push_back({s, label + " uses " + std::to_string(cost) + " CNOTs",
                       counted == static_cast<std::size_t>(cost) && cnot_cost(kind) == counted,
                       "counted " + std::to_string(counted)});
    }
    return out;
}

std::vector<VerifyCheck> symmetry_suite() {
    const std::string s = "symmetry";
    std::vector<VerifyCheck> out;
    for (FusionRule rule : {FusionRule::U1Addition, FusionRule::Z2Mod2}) {
        const auto f = fusion_tensor(rule);
        const auto sp = splitting_tensor(rule);
        bool ok = true;
        const auto a = contract_split_after_fuse(f, sp);
        const auto b = contract_fuse_after_split(f, sp);
        for (std::size_t i = 0; i < 4; ++i) {
            for (std::size_t j = 0; j < 4; ++j) {
                ok = ok && a[i][j] == (i == j ? 1 : 0) && b[i][j] == (i == j ? 1 : 0);
            }
        }
        out.push_back({s, std::string("splitting inverts fusion (") + to_string(rule) + ")", ok, ""});
    }
    const ComplexMatrix n2 = two_site_number();
    out.push_back(bounded(s, "a_gate commutes with the two-site number operator",
                          over_grid([&](double t, double p) {
                              return max_abs_diff(commutator(a_gate(t, p), n2), ComplexMatrix(4, 4));
                          }),
                          kTight));
    out.push_back(bounded(s, "b_gate commutes with the two-site number operator",
                          over_grid([&](double t, double p) {
                              return max_abs_diff(commutator(b_gate(t, p), n2), ComplexMatrix(4, 4));
                          }),
                          kTight));
    for (auto [L, N] : {std::pair<std::size_t, std::size_t>{2, 1}, {3, 1}, {4, 2}, {6, 3}}) {
        for (GateKind g : {GateKind::AGate, GateKind::BGate}) {
            const std::string name = "brickwall(" + std::to_string(L) + "," + std::to_string(N) + ", " +
                                     std::string(to_string(g)) + ") stays in its sector";
            out.push_back(bounded(s, name, sector_leakage(build_brickwall(L, N, g), N), kTight));
        }
    }
    for (GateKind g : {GateKind::AGate, GateKind::BGate}) {
        out.push_back(bounded(s, "swap variant (" + std::string(to_string(g)) + ") stays in its sector",
                              sector_leakage(build_swap_variant_2on4(g), 2), kTight));
    }
    return out;
}

std::vector<VerifyCheck> mapping_suite() {
    const std::string s = "mapping";
    std::vector<VerifyCheck> out;
    for (double gamma : {1.0, 0.7}) {
        for (std::size_t L : {2, 3, 4}) {
            const XXZSpec spec{L, gamma, Boundary::Periodic};
            const PauliSum xxz = xxz_hamiltonian(spec);
            const PauliSum bh = bose_hubbard_hamiltonian({L, 2.0 * gamma, Boundary::Periodic});
            double worst = 0.0;
            bool constant = true;
            for (std::size_t N = 0; N <= L; ++N) {
                const auto c = xxz_bose_hubbard_constant(spec, N);
                if (!c || std::abs(*c - gamma * (static_cast<double>(L) - 4.0 * static_cast<double>(N))) > 1e-12) {
                    constant = false;
                    continue;
                }
                const auto e1 = sector_spectrum(xxz, N);
                const auto e2 = sector_spectrum(bh, N);
                for (std::size_t k = 0; k < e1.size(); ++k) {
                    worst = std::max(worst, std::abs(e1[k] - (2.0 * e2[k] + *c)));
                }
            }
            char name[96];
            std::snprintf(name, sizeof name, "periodic L=%zu gamma=%g: XXZ = 2 BH + c on every sector", L, gamma);
            out.push_back({s, name, constant && worst <= 1e-9, constant ? format_error(worst) : "offset not constant"});
        }
    }
    for (Boundary bc : {Boundary::Open, Boundary::Periodic}) {
        for (std::size_t L : {2, 3, 4}) {
            const double gamma = 0.7;
            const XXZSpec spec{L, gamma, bc};
            PauliPolynomial expected = PauliPolynomial::identity(L, gamma * static_cast<double>(chain_bonds(L, bc).size()));
            for (const auto &[i, j] : chain_bonds(L, bc)) {
                expected = expected - (hardcore_occupation(L, i) + hardcore_occupation(L, j)) * (2.0 * gamma);
            }
            const bool ok = (xxz_bose_hubbard_offset(spec) - expected).is_zero(1e-14);
            out.push_back({s,
                           std::string(to_string(bc)) + " L=" + std::to_string(L) +
                               ": XXZ - 2 BH = gamma (bonds - 2 sum_bonds (n_i + n_j))",
                           ok, ""});
            const auto xxz = PauliPolynomial::from_sum(xxz_hamiltonian(spec));
            const auto m = PauliPolynomial::from_sum(magnetization(L));
            const auto bh = PauliPolynomial::from_sum(bose_hubbard_hamiltonian({L, 2.0 * gamma, bc}));
            const auto n = PauliPolynomial::from_sum(number_operator(L));
            out.push_back({s, std::string(to_string(bc)) + " L=" + std::to_string(L) + ": [XXZ, M] = 0 exactly",
                           commutator(xxz, m).is_zero(), ""});
            out.push_back({s, std::string(to_string(bc)) + " L=" + std::to_string(L) + ": [BH, N] = 0 exactly",
                           commutator(bh, n).is_zero(), ""});
        }
    }
    return out;
}

}  // namespace

const std::vector<std::string> &verify_suite_names() {
    static const std::vector<std::string> names{"gates", "symmetry", "mapping"};
    return names;
}

std::vector<VerifyCheck> run_verify_suite(const std::string &suite) {
    if (suite == "all") {
        std::vector<VerifyCheck> all;
        for (const auto &name : verify_suite_names()) {
            auto part = run_verify_suite(name);
            all.insert(all.end(), part.begin(), part.end());
        }
        return all;
    }
    if (suite == "gates") {
        return gates_suite();
    }
    if (suite == "symmetry") {
        return symmetry_suite();
    }
    if (suite == "mapping") {
        return mapping_suite();
    }
    throw std::invalid_argument("unknown verify suite '" + suite + "'");
}

}  // namespace symvqc
