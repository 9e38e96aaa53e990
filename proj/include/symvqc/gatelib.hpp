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
 * Gate library: elementary gates, controlled charge-conserving cores, the Z2
 * fusion/splitting gates and the particle-conserving A and B modules.
 *
 * Two-qubit matrices are written in the local basis |q_first q_second> with
 * index 2*q_first + q_second (see symmetry.hpp). For CNOT the first target is
 * the control. The A and B modules are built as
 *
 *     module = S * core * F,   core = |0><0| (x) M_0' + |1><1| (x) M_1'
 *
 * where F is the reflected CNOT (control on the second qubit) and S = F.
 */
#pragma once

#include "symvqc/numkit.hpp"

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace symvqc {

enum class GateKind { X, Rx, Ry, Rz, Phase, CNOT, Swap, ControlledV, AGate, BGate };

std::size_t arity(GateKind kind);
std::size_t qubit_count(GateKind kind);
bool is_parameterized_two_qubit(GateKind kind);

std::string_view to_string(GateKind kind);
std::optional<GateKind> parse_gate_kind(std::string_view name);

/// 2x2 matrix for X/Rx/Ry/Rz/Phase, 4x4 for CNOT/Swap. Throws on wrong
/// arity or a composite kind.
ComplexMatrix elementary_matrix(GateKind kind, std::span<const double> params);

/// Matrix of any kind, composite modules included.
ComplexMatrix gate_matrix(GateKind kind, std::span<const double> params);

/// [[-sin t, e^{-i p} cos t], [e^{i p} cos t, sin t]]
ComplexMatrix v_gate(double theta, double phi);

/// Basis change with v_gate(theta, phi) == U X U^dagger: U = Rz(phi) Ry(theta).
ComplexMatrix u_gate(double theta, double phi);

/// |0><0| (x) q0_op + |1><1| (x) q1_op; both operands must be 2x2 unitaries.
ComplexMatrix controlled_core(const ComplexMatrix &q0_op, const ComplexMatrix &q1_op);

/// Reflected CNOT: control on the second qubit, target on the first.
ComplexMatrix fusion_gate();

/// The splitting gate. F is an involution, so this is fusion_gate().
ComplexMatrix splitting_gate();

/// Alternative Z2 fusion map realized by two CNOTs. Not used by the modules.
ComplexMatrix fusion_gate_double_cnot();

/// S * core * F
ComplexMatrix compose_module(const ComplexMatrix &core);

/// Closed forms.
ComplexMatrix a_gate(double theta, double phi);
ComplexMatrix b_gate(double theta, double phi);

/// Bottom-up constructions via the symmetry-basis block matrices
/// I2 (+) V(theta, phi) and P(phi) (+) Rx(theta)^dagger.
ComplexMatrix a_gate_bottom_up(double theta, double phi);
ComplexMatrix b_gate_bottom_up(double theta, double phi);

/// W = e^{i alpha} Rz(beta) Ry(gamma) Rz(delta)
struct ZyzAngles {
    double alpha = 0.0;
    double beta = 0.0;
    double gamma = 0.0;
    double delta = 0.0;
};

ZyzAngles zyz_decompose(const ComplexMatrix &w);

struct ElementaryOp {
    GateKind kind;
    std::vector<double> params;
    std::vector<std::size_t> qubits;  // local indices; CNOT lists {control, target}
};

struct GateDecomposition {
    std::vector<ElementaryOp> ops;  // time order

    std::size_t cnot_count() const;

    /// Product of the listed gates as a 4x4 matrix (later ops on the left).
    ComplexMatrix matrix() const;
};

/// Elementary-gate circuit for AGate, BGate, Swap or ControlledV.
GateDecomposition decompose(GateKind kind, std::span<const double> params);

/// CNOTs needed by one gate of the given kind; 0 for single-qubit gates.
std::size_t cnot_cost(GateKind kind);

/// 4x4 matrix of a one- or two-qubit gate acting on local qubits of a
/// two-qubit register.
ComplexMatrix local_two_qubit_matrix(GateKind kind, std::span<const double> params,
                                     std::span<const std::size_t> qubits);

}  // namespace symvqc
