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

#include "symvqc/circuit.hpp"

#include "symvqc/symmetry.hpp"

#include <json.hpp>

#include <algorithm>
#include <set>
#include <stdexcept>
#include <string>

namespace symvqc {

namespace {

constexpr const char *kCircuitSchema = "symvqc-circuit/1";

void validate_qubits(std::size_t num_qubits, GateKind kind, const std::vector<std::size_t> &qubits) {
    if (qubits.size() != qubit_count(kind)) {
        throw std::invalid_argument("gate " + std::string(to_string(kind)) + " acts on " +
                                    std::to_string(qubit_count(kind)) + " qubit(s), got " +
                                    std::to_string(qubits.size()));
    }
    for (auto q : qubits) {
        if (q >= num_qubits) {
            throw std::out_of_range("qubit " + std::to_string(q) + " out of range for " +
                                    std::to_string(num_qubits) + "-qubit circuit");
        }
    }
    if (qubits.size() == 2 && qubits[0] == qubits[1]) {
        throw std::invalid_argument("two-qubit gate targets must be distinct");
    }
}

}  // namespace

Circuit::Circuit(std::size_t num_qubits) : num_qubits_(num_qubits) {
    if (num_qubits == 0) {
        throw std::invalid_argument("Circuit: need at least one qubit");
    }
}

void Circuit::append(GateKind kind, std::vector<std::size_t> qubits, std::vector<ParamRef> params) {
    validate_qubits(num_qubits_, kind, qubits);
    if (params.size() != arity(kind)) {
        throw std::invalid_argument("gate " + std::string(to_string(kind)) + " takes " +
                                    std::to_string(arity(kind)) + " parameter(s)");
    }
    std::size_t slots = num_slots_;
    for (const auto &p : params) {
        if (!p.is_slot()) {
            continue;
        }
        if (p.slot_index() > slots) {
            throw std::invalid_argument("Circuit: slot " + std::to_string(p.slot_index()) +
                                        " skips unallocated slots");
        }
        if (p.slot_index() == slots) {
            ++slots;
        }
    }
    num_slots_ = slots;
    ops_.push_back({kind, std::move(qubits), std::move(params)});
}

void Circuit::append_free(GateKind kind, std::vector<std::size_t> qubits) {
    std::vector<ParamRef> params;
    for (std::size_t i = 0; i < arity(kind); ++i) {
        params.push_back(ParamRef::slot(num_slots_ + i));
    }
    append(kind, std::move(qubits), std::move(params));
}

void Circuit::append_fixed(GateKind kind, std::vector<std::size_t> qubits,
                           std::vector<double> values) {
    std::vector<ParamRef> params;
    for (double v : values) {
        params.push_back(ParamRef::fixed(v));
    }
    append(kind, std::move(qubits), std::move(params));
}

std::vector<FixedParam> Circuit::fixed_params() const {
    std::vector<FixedParam> out;
    for (std::size_t i = 0; i < ops_.size(); ++i) {
        for (std::size_t j = 0; j < ops_[i].params.size(); ++j) {
            if (!ops_[i].params[j].is_slot()) {
                out.push_back({i, j, ops_[i].params[j].value()});
            }
        }
    }
    return out;
}

std::size_t Circuit::parameterized_gate_count() const {
    return static_cast<std::size_t>(std::count_if(ops_.begin(), ops_.end(), [](const CircuitOp &op) {
        return is_parameterized_two_qubit(op.kind);
    }));
}

std::vector<double> Circuit::resolve(std::size_t op_index, std::span<const double> binding) const {
    const auto &op = ops_.at(op_index);
    std::vector<double> out;
    out.reserve(op.params.size());
    for (const auto &p : op.params) {
        out.push_back(p.is_slot() ? binding[p.slot_index()] : p.value());
    }
    return out;
}

FixingPolicy FixingPolicy::first_two_phases() { return {{{0, 1}, {1, 1}}}; }
FixingPolicy FixingPolicy::last_two_phases() { return {{{-2, 1}, {-1, 1}}}; }
FixingPolicy FixingPolicy::first_gate() { return {{{0, 0}, {0, 1}}}; }

std::vector<std::size_t> centered_placement(std::size_t sites, std::size_t particles) {
    if (particles > sites) {
        throw std::invalid_argument("centered_placement: more particles than sites");
    }
    std::vector<std::size_t> out;
    const std::size_t start = (sites - particles) / 2;
    for (std::size_t i = 0; i < particles; ++i) {
        out.push_back(start + i);
    }
    return out;
}

std::vector<std::pair<std::size_t, std::size_t>> brickwall_couplings(std::size_t sites,
                                                                     std::size_t count) {
    if (sites < 2) {
        throw std::invalid_argument("brickwall_couplings: need at least two sites");
    }
    std::vector<std::pair<std::size_t, std::size_t>> out;
    for (std::size_t layer = 0; out.size() < count; ++layer) {
        // Layer parity 0 couples (0,1), (2,3), ...; parity 1 couples (1,2), (3,4), ...
        for (std::size_t q = layer % 2; q + 1 < sites && out.size() < count; q += 2) {
            out.emplace_back(q, q + 1);
        }
    }
    return out;
}

Circuit build_brickwall(std::size_t sites, std::size_t particles, GateKind gate,
                        const BrickwallOptions &options) {
    if (sites < 2 || particles < 1 || particles + 1 > sites) {
        throw std::invalid_argument("build_brickwall: need L >= 2 and 1 <= N <= L-1 (got L=" +
                                    std::to_string(sites) + ", N=" + std::to_string(particles) +
                                    ")");
    }
    if (gate != GateKind::AGate && gate != GateKind::BGate) {
        throw std::invalid_argument("build_brickwall: gate must be AGate or BGate");
    }
    const std::size_t count = subspace_dimension(sites, particles);
    const auto placement = options.placement.value_or(centered_placement(sites, particles));
    // Validates placement.
    (void)initial_sector_state(sites, particles, placement);

    const auto couplings = brickwall_couplings(sites, count);
    std::set<std::pair<std::size_t, std::size_t>> pinned;
    for (const auto &[ordinal, param] : options.fixing.pinned) {
        const long idx = ordinal < 0 ? static_cast<long>(count) + ordinal : ordinal;
        if (idx < 0 || idx >= static_cast<long>(count) || param >= arity(gate)) {
            throw std::invalid_argument("build_brickwall: fixing policy entry out of range");
        }
        pinned.emplace(static_cast<std::size_t>(idx), param);
    }
    if (pinned.size() != 2) {
        throw std::invalid_argument("build_brickwall: fixing policy must pin exactly two parameters");
    }

    Circuit c(sites);
    for (auto q : placement) {
        c.append(GateKind::X, {q}, {});
    }
    std::size_t next_slot = 0;
    for (std::size_t g = 0; g < couplings.size(); ++g) {
        std::vector<ParamRef> params;
        for (std::size_t j = 0; j < arity(gate); ++j) {
            params.push_back(pinned.contains({g, j}) ? ParamRef::fixed(0.0) : ParamRef::slot(next_slot++));
        }
        c.append(gate, {couplings[g].first, couplings[g].second}, std::move(params));
    }
    return c;
}

Circuit build_swap_variant_2on4(GateKind gate) {
    if (gate != GateKind::AGate && gate != GateKind::BGate) {
        throw std::invalid_argument("build_swap_variant_2on4: gate must be AGate or BGate");
    }
    Circuit c(4);
    c.append(GateKind::X, {1}, {});
    c.append(GateKind::X, {2}, {});
    c.append_free(gate, {0, 1});
    c.append_free(gate, {2, 3});
    c.append_free(gate, {1, 2});
    // Move qubit 0 to position 2: it then neighbours qubit 3, and qubit 2 sits
    // at position 1.
    c.append(GateKind::Swap, {0, 1}, {});
    c.append(GateKind::Swap, {1, 2}, {});
    c.append_free(gate, {2, 3});
    c.append_free(gate, {1, 2});
    c.append(GateKind::Swap, {1, 2}, {});
    c.append(GateKind::Swap, {0, 1}, {});
    return c;
}

std::size_t cnot_count(const Circuit &c) {
    std::size_t n = 0;
    for (const auto &op : c.ops()) {
        n += cnot_cost(op.kind);
    }
    return n;
}

StateVector initial_sector_state(std::size_t sites, std::size_t particles,
                                 std::span<const std::size_t> placement) {
    if (placement.size() != particles) {
        throw std::invalid_argument("initial_sector_state: placement lists " +
                                    std::to_string(placement.size()) + " qubits, expected " +
                                    std::to_string(particles));
    }
    std::size_t index = 0;
    for (auto q : placement) {
        if (q >= sites) {
            throw std::out_of_range("initial_sector_state: qubit index out of range");
        }
        if (index & (std::size_t{1} << q)) {
            throw std::invalid_argument("initial_sector_state: duplicate qubit in placement");
        }
        index |= std::size_t{1} << q;
    }
    return StateVector::basis_state(sites, index);
}

std::string circuit_to_json(const Circuit &c) {
    nlohmann::ordered_json doc;
    doc["schema"] = kCircuitSchema;
    doc["num_qubits"] = c.num_qubits();
    doc["num_free_parameters"] = c.num_free_parameters();
    auto ops = nlohmann::ordered_json::array();
    for (const auto &op : c.ops()) {
        nlohmann::ordered_json o;
        o["kind"] = std::string(to_string(op.kind));
        o["qubits"] = op.qubits;
        auto params = nlohmann::ordered_json::array();
        for (const auto &p : op.params) {
            nlohmann::ordered_json pj;
            if (p.is_slot()) {
                pj["slot"] = p.slot_index();
            } else {
                pj["value"] = p.value();
            }
            params.push_back(pj);
        }
        o["params"] = params;
        ops.push_back(o);
    }
    doc["ops"] = ops;
    auto fixed = nlohmann::ordered_json::array();
    for (const auto &f : c.fixed_params()) {
        fixed.push_back({{"op", f.op}, {"param", f.param}, {"value", f.value}});
    }
    doc["fixed_params"] = fixed;
    return doc.dump(2) + "\n";
}

Circuit circuit_from_json(const std::string &text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error &e) {
        throw std::invalid_argument(std::string("circuit JSON: ") + e.what());
    }
    try {
        if (doc.contains("schema") && doc.at("schema").get<std::string>() != kCircuitSchema) {
            throw std::invalid_argument("circuit JSON: unsupported schema " +
                                        doc.at("schema").get<std::string>());
        }
        Circuit c(doc.at("num_qubits").get<std::size_t>());
        for (const auto &o : doc.at("ops")) {
            const auto name = o.at("kind").get<std::string>();
            const auto kind = parse_gate_kind(name);
            if (!kind) {
                throw std::invalid_argument("circuit JSON: unknown gate kind '" + name + "'");
            }
            std::vector<ParamRef> params;
            for (const auto &p : o.at("params")) {
                if (p.contains("slot")) {
                    params.push_back(ParamRef::slot(p.at("slot").get<std::size_t>()));
                } else {
                    params.push_back(ParamRef::fixed(p.at("value").get<double>()));
                }
            }
            c.append(*kind, o.at("qubits").get<std::vector<std::size_t>>(), std::move(params));
        }
        if (doc.contains("num_free_parameters") &&
            doc.at("num_free_parameters").get<std::size_t>() != c.num_free_parameters()) {
            throw std::invalid_argument("circuit JSON: num_free_parameters disagrees with ops");
        }
        if (doc.contains("fixed_params")) {
            std::vector<FixedParam> listed;
            for (const auto &f : doc.at("fixed_params")) {
                listed.push_back({f.at("op").get<std::size_t>(), f.at("param").get<std::size_t>(),
                                  f.at("value").get<double>()});
            }
            if (listed != c.fixed_params()) {
                throw std::invalid_argument("circuit JSON: fixed_params disagrees with ops");
            }
        }
        return c;
    } catch (const nlohmann::json::exception &e) {
        throw std::invalid_argument(std::string("circuit JSON: ") + e.what());
    }
}

}  // namespace symvqc
