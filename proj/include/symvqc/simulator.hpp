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
 * Dense state-vector engine: gate kernels, Pauli-sum expectations (exact and
 * shot-sampled), Haar-random sector states and Pauli-trajectory noise.
 *
 * All stochastic routines take an explicit seed and draw from Rng, which is
 * mt19937_64 with hand-written real/normal conversions so that results are
 * identical across standard libraries.
 */
#pragma once

#include "symvqc/circuit.hpp"
#include "symvqc/numkit.hpp"

#include <cstdint>
#include <random>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace symvqc {

class Rng {
  public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next() { return engine_(); }

    /// Uniform in [0, 1) with 53 random bits.
    double uniform();

    /// Standard normal (Box-Muller).
    double normal();

    /// Uniform integer in [0, n).
    std::uint64_t below(std::uint64_t n);

  private:
    std::mt19937_64 engine_;
    bool has_spare_ = false;
    double spare_ = 0.0;
};

/// SplitMix64 finalizer applied to (seed, stream); used to derive
/// independent sub-seeds.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream);

enum class Pauli : std::uint8_t { I, X, Y, Z };

struct PauliString {
    double coefficient = 1.0;
    std::vector<Pauli> letters;  // letters[q] acts on qubit q

    /// "XXIZ" -> letters[0] = X, ..., letters[3] = Z.
    static PauliString from_letters(double coefficient, std::string_view letters);
    std::string letters_string() const;

    bool is_identity() const;
};

class PauliSum {
  public:
    explicit PauliSum(std::size_t num_qubits) : num_qubits_(num_qubits) {}

    /// Coefficient must be finite and the string must span num_qubits.
    void add(PauliString term);
    void add(double coefficient, std::string_view letters);

    std::size_t num_qubits() const { return num_qubits_; }
    const std::vector<PauliString> &terms() const { return terms_; }

  private:
    std::size_t num_qubits_;
    std::vector<PauliString> terms_;
};

/// Dense 2^L x 2^L matrix of a Pauli sum.
ComplexMatrix dense_matrix(const PauliSum &h);

/// P|psi> for a single string (coefficient included).
StateVector apply_pauli_string(const PauliString &p, const StateVector &psi);

struct NoiseSpec {
    double p1 = 0.0;         // depolarizing probability after one-qubit gates
    double p2 = 0.0;         // depolarizing probability after two-qubit gates
    double p_readout = 0.0;  // per-bit readout flip probability

    bool is_zero() const { return p1 == 0.0 && p2 == 0.0 && p_readout == 0.0; }
    void validate() const;
};

/// Applies a one- or two-qubit gate in place.
void apply_gate(StateVector &psi, const ComplexMatrix &m, std::span<const std::size_t> qubits);

StateVector apply_circuit(const Circuit &c, std::span<const double> binding, const StateVector &input);

/// One stochastic trajectory: after each gate, with probability p1 (one-qubit
/// gate) or p2 (two-qubit gate) a Pauli drawn uniformly from the 4^k Paulis
/// on the touched qubits is applied. Averaged over trajectories this is the
/// depolarizing channel rho -> (1-p) rho + p I/2^k.
StateVector apply_circuit_noisy(const Circuit &c, std::span<const double> binding,
                                const StateVector &input, const NoiseSpec &noise,
                                std::uint64_t seed);

double expectation(const PauliSum &h, const StateVector &psi);

/// Terms sharing one qubit-wise measurement basis.
struct MeasurementGroup {
    std::vector<Pauli> basis;         // per qubit; I = unmeasured
    std::vector<std::size_t> terms;   // indices into PauliSum::terms()
};

/// Greedy qubit-wise-commuting grouping in term order. Identity terms are
/// not assigned to any group.
std::vector<MeasurementGroup> group_measurements(const PauliSum &h);

/// Shot estimate of <psi|h|psi>. Every group is measured with `shots` shots.
/// Readout flips each measured bit with probability p_readout.
double sampled_expectation(const PauliSum &h, const StateVector &psi, std::size_t shots,
                           std::uint64_t seed, double p_readout = 0.0);

/// Standard deviation of sampled_expectation at p_readout = 0, computed from
/// the exact per-group outcome distributions.
double predicted_shot_stderr(const PauliSum &h, const StateVector &psi, std::size_t shots);

/// Normalized complex-Gaussian amplitudes on the N-particle sector. The
/// global phase is fixed so the first sector amplitude is real and >= 0.
StateVector haar_random_sector_state(std::size_t sites, std::size_t particles, std::uint64_t seed);

/// |<phi|psi>|^2
double fidelity(const StateVector &phi, const StateVector &psi);

/// Weight of psi on the N-particle sector.
double sector_weight(const StateVector &psi, std::size_t particles);

}  // namespace symvqc
