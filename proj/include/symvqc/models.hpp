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
 * Lattice Hamiltonians (XXZ chain, hardcore Bose-Hubbard), the Pauli algebra
 * used to relate them, and exact-diagonalization references.
 *
 * Hardcore bosons are written directly in Pauli form:
 *   a = (X + iY)/2,  a^dagger = (X - iY)/2,  n = (I - Z)/2,
 * so that an occupied site is the qubit state |1>.
 */
#pragma once

#include "symvqc/numkit.hpp"
#include "symvqc/simulator.hpp"

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace symvqc {

enum class Boundary { Open, Periodic };

const char *to_string(Boundary b);
std::optional<Boundary> parse_boundary(const std::string &name);

/// Nearest-neighbour bonds: L-1 for open chains, L for periodic ones.
std::vector<std::pair<std::size_t, std::size_t>> chain_bonds(std::size_t sites, Boundary boundary);

struct XXZSpec {
    std::size_t sites = 2;
    double gamma = 1.0;
    Boundary boundary = Boundary::Open;
};

struct BoseHubbardSpec {
    std::size_t sites = 2;
    double delta = 2.0;
    Boundary boundary = Boundary::Open;
};

/// Complex-weighted linear combination of Pauli strings, kept in canonical
/// form (like terms merged, exact zeros removed).
class PauliPolynomial {
  public:
    explicit PauliPolynomial(std::size_t num_qubits) : num_qubits_(num_qubits) {}

    static PauliPolynomial identity(std::size_t num_qubits, Complex coefficient = 1.0);
    /// coefficient * letter on one qubit.
    static PauliPolynomial single(std::size_t num_qubits, std::size_t qubit, Pauli letter,
                                  Complex coefficient = 1.0);
    static PauliPolynomial from_sum(const PauliSum &h);

    std::size_t num_qubits() const { return num_qubits_; }
    const std::map<std::string, Complex> &terms() const { return terms_; }

    bool is_zero(double tol = 0.0) const;

    PauliPolynomial operator+(const PauliPolynomial &o) const;
    PauliPolynomial operator-(const PauliPolynomial &o) const;
    PauliPolynomial operator*(const PauliPolynomial &o) const;
    PauliPolynomial operator*(Complex s) const;

    /// Real PauliSum; throws if any coefficient has |imag| > tol.
    PauliSum to_sum(double tol = 1e-12) const;

  private:
    void accumulate(const std::string &letters, Complex c);

    std::size_t num_qubits_;
    std::map<std::string, Complex> terms_;
};

PauliPolynomial commutator(const PauliPolynomial &a, const PauliPolynomial &b);

PauliPolynomial hardcore_annihilation(std::size_t sites, std::size_t site);
PauliPolynomial hardcore_creation(std::size_t sites, std::size_t site);
PauliPolynomial hardcore_occupation(std::size_t sites, std::size_t site);

/// sum_bonds X_i X_j + Y_i Y_j + gamma Z_i Z_j
PauliSum xxz_hamiltonian(const XXZSpec &spec);

/// M = sum_i Z_i
PauliSum magnetization(std::size_t sites);

/// N = sum_i (I - Z_i)/2
PauliSum number_operator(std::size_t sites);

/// sum_bonds a_i^dagger a_j + a_j^dagger a_i + delta n_i n_j, expanded to Pauli
/// form from the hardcore operators above.
PauliSum bose_hubbard_hamiltonian(const BoseHubbardSpec &spec);

/// H_XXZ - 2 H_BH with delta = 2 gamma: a diagonal operator made of identity
/// and single-site occupation terms.
PauliPolynomial xxz_bose_hubbard_offset(const XXZSpec &spec);

/// The constant c with H_XXZ = 2 H_BH + c I on the N-particle sector, if the
/// offset operator is constant there. Periodic chains always give
/// c = gamma L - 4 gamma N; open chains carry a boundary term
/// 2 gamma (n_first + n_last) that is not constant for 0 < N < L.
std::optional<double> xxz_bose_hubbard_constant(const XXZSpec &spec, std::size_t particles);

/// Restriction of a dense operator to the N-particle sector indices.
ComplexMatrix sector_block(const ComplexMatrix &m, std::size_t sites, std::size_t particles);

struct GroundState {
    double energy;
    StateVector state;
};

/// Lowest eigenpair of h, optionally within the N-particle sector. The
/// returned state lives in the full 2^L space. L is limited to 10.
GroundState exact_ground(const PauliSum &h, std::optional<std::size_t> sector = std::nullopt);

/// Ascending eigenvalues of h restricted to the N-particle sector.
std::vector<double> sector_spectrum(const PauliSum &h, std::size_t particles);

}  // namespace symvqc
