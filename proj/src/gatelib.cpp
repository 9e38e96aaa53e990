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

#include "symvqc/gatelib.hpp"

#include "symvqc/symmetry.hpp"

#include <array>
#include <cmath>
#include <stdexcept>
#include <string>

namespace symvqc {

namespace {

constexpr std::array<std::pair<GateKind, std::string_view>, 10> kGateNames{{
    {GateKind::X, "x"},
    {GateKind::Rx, "rx"},
    {GateKind::Ry, "ry"},
    {GateKind::Rz, "rz"},
    {GateKind::Phase, "phase"},
    {GateKind::CNOT, "cnot"},
    {GateKind::Swap, "swap"},
    {GateKind::ControlledV, "controlled_v"},
    {GateKind::AGate, "a_gate"},
    {GateKind::BGate, "b_gate"},
}};

void check_arity(GateKind kind, std::span<const double> params) {
    if (params.size() != arity(kind)) {
        throw std::invalid_argument("gate " + std::string(to_string(kind)) + " takes " +
                                    std::to_string(arity(kind)) + " parameter(s), got " +
                                    std::to_string(params.size()));
    }
}

ComplexMatrix rx(double t) {
    const double c = std::cos(t / 2), s = std::sin(t / 2);
    return {{c, Complex(0, -s)}, {Complex(0, -s), c}};
}

ComplexMatrix ry(double t) {
    const double c = std::cos(t / 2), s = std::sin(t / 2);
    return {{c, -s}, {s, c}};
}

ComplexMatrix rz(double t) {
    return {{std::polar(1.0, -t / 2), 0.0}, {0.0, std::polar(1.0, t / 2)}};
}

ComplexMatrix phase(double p) { return {{1.0, 0.0}, {0.0, std::polar(1.0, p)}}; }

const ComplexMatrix &pauli_x() {
    static const ComplexMatrix x{{0.0, 1.0}, {1.0, 0.0}};
    return x;
}

ElementaryOp one(GateKind kind, double param, std::size_t qubit) {
    return {kind, {param}, {qubit}};
}

ElementaryOp cnot(std::size_t control, std::size_t target) {
    return {GateKind::CNOT, {}, {control, target}};
}

}  // namespace

std::size_t arity(GateKind kind) {
    switch (kind) {
        case GateKind::X:
        case GateKind::CNOT:
        case GateKind::Swap:
            return 0;
        case GateKind::Rx:
        case GateKind::Ry:
        case GateKind::Rz:
        case GateKind::Phase:
            return 1;
        case GateKind::ControlledV:
        case GateKind::AGate:
        case GateKind::BGate:
            return 2;
    }
    throw std::invalid_argument("arity: unknown gate kind");
}

std::size_t qubit_count(GateKind kind) {
    switch (kind) {
        case GateKind::X:
        case GateKind::Rx:
        case GateKind::Ry:
        case GateKind::Rz:
        case GateKind::Phase:
            return 1;
        default:
            return 2;
    }
}

bool is_parameterized_two_qubit(GateKind kind) {
    return kind == GateKind::AGate || kind == GateKind::BGate || kind == GateKind::ControlledV;
}

std::string_view to_string(GateKind kind) {
    for (const auto &[k, name] : kGateNames) {
        if (k == kind) {
            return name;
        }
    }
    return "unknown";
}

std::optional<GateKind> parse_gate_kind(std::string_view name) {
    for (const auto &[k, n] : kGateNames) {
        if (n == name) {
            return k;
        }
    }
    return std::nullopt;
}

ComplexMatrix elementary_matrix(GateKind kind, std::span<const double> params) {
    check_arity(kind, params);
    switch (kind) {
        case GateKind::X:
            return pauli_x();
        case GateKind::Rx:
            return rx(params[0]);
        case GateKind::Ry:
            return ry(params[0]);
        case GateKind::Rz:
            return rz(params[0]);
        case GateKind::Phase:
            return phase(params[0]);
        case GateKind::CNOT:
            return controlled_core(ComplexMatrix::identity(2), pauli_x());
        case GateKind::Swap:
            return {{1.0, 0.0, 0.0, 0.0},
                    {0.0, 0.0, 1.0, 0.0},
                    {0.0, 1.0, 0.0, 0.0},
                    {0.0, 0.0, 0.0, 1.0}};
        default:
            throw std::invalid_argument("elementary_matrix: " + std::string(to_string(kind)) +
                                        " is a composite gate");
    }
}

ComplexMatrix gate_matrix(GateKind kind, std::span<const double> params) {
    check_arity(kind, params);
    switch (kind) {
        case GateKind::ControlledV:
            return controlled_core(ComplexMatrix::identity(2), v_gate(params[0], params[1]));
        case GateKind::AGate:
            return a_gate(params[0], params[1]);
        case GateKind::BGate:
            return b_gate(params[0], params[1]);
        default:
            return elementary_matrix(kind, params);
    }
}

ComplexMatrix v_gate(double theta, double phi) {
    const double c = std::cos(theta), s = std::sin(theta);
    return {{-s, std::polar(c, -phi)}, {std::polar(c, phi), s}};
}

ComplexMatrix u_gate(double theta, double phi) { return matmul(rz(phi), ry(theta)); }

ComplexMatrix controlled_core(const ComplexMatrix &q0_op, const ComplexMatrix &q1_op) {
    if (q0_op.rows() != 2 || q0_op.cols() != 2 || q1_op.rows() != 2 || q1_op.cols() != 2) {
        throw std::invalid_argument("controlled_core: operands must be 2x2");
    }
    if (!is_unitary(q0_op, 1e-10) || !is_unitary(q1_op, 1e-10)) {
        throw std::invalid_argument("controlled_core: operands must be unitary");
    }
    const ComplexMatrix p0{{1.0, 0.0}, {0.0, 0.0}};
    const ComplexMatrix p1{{0.0, 0.0}, {0.0, 1.0}};
    return add(kron(p0, q0_op), kron(p1, q1_op));
}

ComplexMatrix fusion_gate() {
    return {{1.0, 0.0, 0.0, 0.0},
            {0.0, 0.0, 0.0, 1.0},
            {0.0, 0.0, 1.0, 0.0},
            {0.0, 1.0, 0.0, 0.0}};
}

ComplexMatrix splitting_gate() { return fusion_gate(); }

ComplexMatrix fusion_gate_double_cnot() {
    // Reflected CNOT followed by an ordinary CNOT.
    return matmul(elementary_matrix(GateKind::CNOT, {}), fusion_gate());
}

ComplexMatrix compose_module(const ComplexMatrix &core) {
    return matmul(splitting_gate(), matmul(core, fusion_gate()));
}

ComplexMatrix a_gate(double theta, double phi) {
    const double c = std::cos(theta), s = std::sin(theta);
    return {{1.0, 0.0, 0.0, 0.0},
            {0.0, s, std::polar(c, phi), 0.0},
            {0.0, std::polar(c, -phi), -s, 0.0},
            {0.0, 0.0, 0.0, 1.0}};
}

ComplexMatrix b_gate(double theta, double phi) {
    const double c = std::cos(theta / 2), s = std::sin(theta / 2);
    return {{1.0, 0.0, 0.0, 0.0},
            {0.0, c, Complex(0, s), 0.0},
            {0.0, Complex(0, s), c, 0.0},
            {0.0, 0.0, 0.0, std::polar(1.0, phi)}};
}

ComplexMatrix a_gate_bottom_up(double theta, double phi) {
    static const auto map = ChargeBasisMap::make(FusionRule::Z2Mod2);
    const BlockMatrix m({{0, ComplexMatrix::identity(2)}, {1, v_gate(theta, phi)}});
    return compose_module(embed_block_matrix(m, map));
}

ComplexMatrix b_gate_bottom_up(double theta, double phi) {
    static const auto map = ChargeBasisMap::make(FusionRule::Z2Mod2);
    const BlockMatrix m({{0, phase(phi)}, {1, dagger(rx(theta))}});
    return compose_module(embed_block_matrix(m, map));
}

ZyzAngles zyz_decompose(const ComplexMatrix &w) {
    if (w.rows() != 2 || w.cols() != 2 || !is_unitary(w, 1e-9)) {
        throw std::invalid_argument("zyz_decompose: expected a 2x2 unitary");
    }
    ZyzAngles out;
    const Complex det = w(0, 0) * w(1, 1) - w(0, 1) * w(1, 0);
    out.alpha = std::arg(det) / 2;
    const Complex unphase = std::polar(1.0, -out.alpha);
    const Complex a = w(0, 0) * unphase;
    const Complex b = w(1, 0) * unphase;
    const Complex b_up = w(0, 1) * unphase;
    const Complex d = w(1, 1) * unphase;
    out.gamma = 2 * std::atan2(std::abs(b), std::abs(a));
    constexpr double eps = 1e-12;
    const double sum = std::abs(a) > eps ? std::arg(d) - std::arg(a) : 0.0;
    const double diff = std::abs(b) > eps ? std::arg(b) - std::arg(-b_up) : 0.0;
    out.beta = (sum + diff) / 2;
    out.delta = (sum - diff) / 2;

    const ComplexMatrix recon =
        scale(matmul(rz(out.beta), matmul(ry(out.gamma), rz(out.delta))), std::polar(1.0, out.alpha));
    if (max_abs_diff(recon, w) > 1e-9) {
        // Branch of the determinant square root picked the opposite sign.
        out.alpha += M_PI;
    }
    return out;
}

std::size_t GateDecomposition::cnot_count() const {
    std::size_t n = 0;
    for (const auto &op : ops) {
        n += cnot_cost(op.kind);
    }
    return n;
}

ComplexMatrix GateDecomposition::matrix() const {
    ComplexMatrix acc = ComplexMatrix::identity(4);
    for (const auto &op : ops) {
        acc = matmul(local_two_qubit_matrix(op.kind, op.params, op.qubits), acc);
    }
    return acc;
}

GateDecomposition decompose(GateKind kind, std::span<const double> params) {
    check_arity(kind, params);
    GateDecomposition out;
    auto &ops = out.ops;
    switch (kind) {
        case GateKind::Swap:
            ops = {cnot(0, 1), cnot(1, 0), cnot(0, 1)};
            break;
        case GateKind::ControlledV:
        case GateKind::AGate: {
            // C1(V) = (I (x) U) CNOT (I (x) U^dagger), U = Rz(phi) Ry(theta).
            const double theta = params[0], phi = params[1];
            if (kind == GateKind::AGate) {
                ops.push_back(cnot(1, 0));
            }
            ops.push_back(one(GateKind::Rz, -phi, 1));
            ops.push_back(one(GateKind::Ry, -theta, 1));
            ops.push_back(cnot(0, 1));
            ops.push_back(one(GateKind::Ry, theta, 1));
            ops.push_back(one(GateKind::Rz, phi, 1));
            if (kind == GateKind::AGate) {
                ops.push_back(cnot(1, 0));
            }
            break;
        }
        case GateKind::BGate: {
            // core = |0><0| (x) P + |1><1| (x) Rx^dagger
            //      = [|0><0| (x) I + |1><1| (x) W] (I (x) P),  W = Rx^dagger P^dagger,
            // and controlled-W uses the two-CNOT ABC construction.
            const double theta = params[0], phi = params[1];
            const ComplexMatrix w = matmul(rx(-theta), phase(-phi));
            const ZyzAngles z = zyz_decompose(w);
            ops.push_back(cnot(1, 0));
            ops.push_back(one(GateKind::Phase, phi, 1));
            ops.push_back(one(GateKind::Rz, (z.delta - z.beta) / 2, 1));
            ops.push_back(cnot(0, 1));
            ops.push_back(one(GateKind::Rz, -(z.delta + z.beta) / 2, 1));
            ops.push_back(one(GateKind::Ry, -z.gamma / 2, 1));
            ops.push_back(cnot(0, 1));
            ops.push_back(one(GateKind::Ry, z.gamma / 2, 1));
            ops.push_back(one(GateKind::Rz, z.beta, 1));
            ops.push_back(one(GateKind::Phase, z.alpha, 0));
            ops.push_back(cnot(1, 0));
            break;
        }
        default:
            throw std::invalid_argument("decompose: no decomposition for " +
                                        std::string(to_string(kind)));
    }
    return out;
}

std::size_t cnot_cost(GateKind kind) {
    switch (kind) {
        case GateKind::CNOT:
            return 1;
        case GateKind::Swap:
        case GateKind::ControlledV:
        case GateKind::AGate:
        case GateKind::BGate: {
            const std::array<double, 2> probe{0.3, 0.7};
            return decompose(kind, std::span(probe).first(arity(kind))).cnot_count();
        }
        default:
            return 0;
    }
}

ComplexMatrix local_two_qubit_matrix(GateKind kind, std::span<const double> params,
                                     std::span<const std::size_t> qubits) {
    if (qubits.size() != qubit_count(kind)) {
        throw std::invalid_argument("local_two_qubit_matrix: wrong qubit count for " +
                                    std::string(to_string(kind)));
    }
    for (auto q : qubits) {
        if (q > 1) {
            throw std::out_of_range("local_two_qubit_matrix: local qubit must be 0 or 1");
        }
    }
    const ComplexMatrix g = gate_matrix(kind, params);
    const ComplexMatrix id = ComplexMatrix::identity(2);
    if (qubits.size() == 1) {
        return qubits[0] == 0 ? kron(g, id) : kron(id, g);
    }
    if (qubits[0] == qubits[1]) {
        throw std::invalid_argument("local_two_qubit_matrix: targets must differ");
    }
    if (qubits[0] == 0) {
        return g;
    }
    const ComplexMatrix swap = elementary_matrix(GateKind::Swap, {});
    return matmul(swap, matmul(g, swap));
}

}  // namespace symvqc
