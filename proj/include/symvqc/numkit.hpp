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
 * Dense complex linear algebra shared by every other module.
 *
 * Qubit ordering convention used throughout the library: a state vector is
 * little-endian, i.e. qubit 0 is the least significant bit of the amplitude
 * index. kron(a, b) places a's index in the high-order position, so
 * kron(A_q1, B_q0) acts on a two-qubit register as A on qubit 1 and B on
 * qubit 0.
 */
#pragma once

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace symvqc {

using Complex = std::complex<double>;

inline constexpr Complex kI{0.0, 1.0};

class ComplexMatrix {
  public:
    ComplexMatrix() = default;

    /// Zero-initialized rows x cols matrix.
    ComplexMatrix(std::size_t rows, std::size_t cols);

    /// Row-major entries; entries.size() must equal rows * cols and every
    /// entry must be finite.
    ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries);

    /// Nested-list literal, one inner list per row.
    ComplexMatrix(std::initializer_list<std::initializer_list<Complex>> rows);

    static ComplexMatrix identity(std::size_t n);
    static ComplexMatrix diagonal(std::span<const Complex> diag);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }

    const Complex &operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
    Complex &operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }

    std::span<const Complex> entries() const { return data_; }

    bool operator==(const ComplexMatrix &) const = default;

  private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Complex> data_;
};

ComplexMatrix matmul(const ComplexMatrix &a, const ComplexMatrix &b);
ComplexMatrix kron(const ComplexMatrix &a, const ComplexMatrix &b);
ComplexMatrix dagger(const ComplexMatrix &a);
ComplexMatrix add(const ComplexMatrix &a, const ComplexMatrix &b);
ComplexMatrix scale(const ComplexMatrix &a, Complex factor);

/// a*b - b*a
ComplexMatrix commutator(const ComplexMatrix &a, const ComplexMatrix &b);

/// max_{ij} |a_ij - b_ij|. Throws on shape mismatch.
double max_abs_diff(const ComplexMatrix &a, const ComplexMatrix &b);

/// True iff ||a^dagger a - I||_max <= tol. Throws on a non-square matrix.
bool is_unitary(const ComplexMatrix &a, double tol);

bool is_hermitian(const ComplexMatrix &a, double tol);

struct EigenDecomposition {
    std::vector<double> eigenvalues;  // ascending
    ComplexMatrix eigenvectors;       // column k pairs with eigenvalues[k]
};

/// Eigenpairs of a Hermitian matrix (Hermitian to 1e-10 or this throws).
EigenDecomposition hermitian_eigen(const ComplexMatrix &a);

class StateVector {
  public:
    StateVector() = default;

    /// |0...0> on num_qubits qubits.
    explicit StateVector(std::size_t num_qubits);

    /// Takes amplitudes as given (no renormalization). The length must be a
    /// power of two.
    explicit StateVector(std::vector<Complex> amplitudes);

    static StateVector basis_state(std::size_t num_qubits, std::size_t index);

    std::size_t num_qubits() const { return num_qubits_; }
    std::size_t dim() const { return amps_.size(); }

    const Complex &operator[](std::size_t i) const { return amps_[i]; }
    Complex &operator[](std::size_t i) { return amps_[i]; }

    std::span<const Complex> amplitudes() const { return amps_; }
    std::span<Complex> amplitudes() { return amps_; }

    double norm_squared() const;
    void normalize();

    bool operator==(const StateVector &) const = default;

  private:
    std::size_t num_qubits_ = 0;
    std::vector<Complex> amps_;
};

/// <a|b>
Complex inner_product(const StateVector &a, const StateVector &b);

/// Dense matrix-vector product; m must be dim x dim.
StateVector apply_matrix(const ComplexMatrix &m, const StateVector &psi);

}  // namespace symvqc
