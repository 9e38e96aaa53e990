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
 * Circuit IR and the particle-conserving ansatz builders.
 *
 * A Circuit is an ordered list of gate applications. Every gate parameter is
 * either a reference to a free slot of the ParameterBinding or a fixed
 * value. Qubit q of a circuit is bit q of the state-vector index; a two-qubit
 * gate on {a, b} uses a as the high-order qubit of its 4x4 matrix.
 */
#pragma once

#include "symvqc/gatelib.hpp"
#include "symvqc/numkit.hpp"

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace symvqc {

/// One real value per free slot of a circuit.
using ParameterBinding = std::vector<double>;

class ParamRef {
  public:
    static ParamRef slot(std::size_t index) { return ParamRef(index, 0.0, true); }
    static ParamRef fixed(double value) { return ParamRef(0, value, false); }

    bool is_slot() const { return is_slot_; }
    std::size_t slot_index() const { return slot_; }
    double value() const { return value_; }

    bool operator==(const ParamRef &) const = default;

  private:
    ParamRef(std::size_t slot, double value, bool is_slot)
        : slot_(slot), value_(value), is_slot_(is_slot) {}

    std::size_t slot_;
    double value_;
    bool is_slot_;
};

struct CircuitOp {
    GateKind kind;
    std::vector<std::size_t> qubits;
    std::vector<ParamRef> params;

    bool operator==(const CircuitOp &) const = default;
};

struct FixedParam {
    std::size_t op;
    std::size_t param;
    double value;

    bool operator==(const FixedParam &) const = default;
};

class Circuit {
  public:
    explicit Circuit(std::size_t num_qubits);

    /// Appends an op. Slot references must be < the current slot count or
    /// equal to it (which opens a new slot).
    void append(GateKind kind, std::vector<std::size_t> qubits, std::vector<ParamRef> params);

    /// Appends an op whose parameters all take fresh slots.
    void append_free(GateKind kind, std::vector<std::size_t> qubits);

    void append_fixed(GateKind kind, std::vector<std::size_t> qubits, std::vector<double> values);

    std::size_t num_qubits() const { return num_qubits_; }
    const std::vector<CircuitOp> &ops() const { return ops_; }
    std::size_t num_free_parameters() const { return num_slots_; }

    std::vector<FixedParam> fixed_params() const;

    /// Two-qubit gates carrying parameters (A, B, controlled-V).
    std::size_t parameterized_gate_count() const;

    /// Concrete gate parameters of op i under a binding.
    std::vector<double> resolve(std::size_t op_index, std::span<const double> binding) const;

    bool operator==(const Circuit &) const = default;

  private:
    std::size_t num_qubits_;
    std::size_t num_slots_ = 0;
    std::vector<CircuitOp> ops_;
};

/// Which two parameters the brick-wall builder pins to zero, named by
/// (ordinal among parameterized gates, parameter index). Negative ordinals
/// count from the last gate.
struct FixingPolicy {
    std::vector<std::pair<long, std::size_t>> pinned;

    /// phi of the first and second gate (default).
    static FixingPolicy first_two_phases();
    static FixingPolicy last_two_phases();
    /// theta and phi of the first gate.
    static FixingPolicy first_gate();
};

struct BrickwallOptions {
    FixingPolicy fixing = FixingPolicy::first_two_phases();
    /// Qubits receiving the initial X gates. Default: N consecutive qubits
    /// centred in the chain.
    std::optional<std::vector<std::size_t>> placement;
};

std::vector<std::size_t> centered_placement(std::size_t sites, std::size_t particles);

/// Brick-wall ansatz with C(L, N) gates of the given kind (AGate or BGate)
/// and 2*C(L, N) - 2 free parameters.
Circuit build_brickwall(std::size_t sites, std::size_t particles, GateKind gate,
                        const BrickwallOptions &options = {});

/// The coupling pairs (0-based, first < second) of the brick-wall sequence
/// truncated to `count` gates.
std::vector<std::pair<std::size_t, std::size_t>> brickwall_couplings(std::size_t sites,
                                                                     std::size_t count);

/// Five parameterized gates on 4 qubits with swaps that couple qubits (0,3)
/// and (0,2); two particles on qubits 1 and 2.
Circuit build_swap_variant_2on4(GateKind gate);

std::size_t cnot_count(const Circuit &c);

/// Computational basis state with qubits in `placement` set to |1>.
StateVector initial_sector_state(std::size_t sites, std::size_t particles,
                                 std::span<const std::size_t> placement);

std::string circuit_to_json(const Circuit &c);
Circuit circuit_from_json(const std::string &text);

}  // namespace symvqc
