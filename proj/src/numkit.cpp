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

#include "symvqc/numkit.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <bit>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

namespace symvqc {

namespace {

void require_finite(std::span<const Complex> entries) {
    for (const auto &z : entries) {
        if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
            throw std::invalid_argument("ComplexMatrix: non-finite entry");
        }
    }
}

void require_same_shape(const ComplexMatrix &a, const ComplexMatrix &b, const char *what) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        throw std::invalid_argument(std::string(what) + ": shape mismatch (" +
                                    std::to_string(a.rows()) + "x" + std::to_string(a.cols()) +
                                    " vs " + std::to_string(b.rows()) + "x" +
                                    std::to_string(b.cols()) + ")");
    }
}

}  // namespace

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols) {}

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries)
    : rows_(rows), cols_(cols), data_(std::move(entries)) {
    if (data_.size() != rows_ * cols_) {
        throw std::invalid_argument("ComplexMatrix: entry count " + std::to_string(data_.size()) +
                                    " does not match " + std::to_string(rows_) + "x" +
                                    std::to_string(cols_));
    }
    require_finite(data_);
}

ComplexMatrix::ComplexMatrix(std::initializer_list<std::initializer_list<Complex>> rows) {
    rows_ = rows.size();
    cols_ = rows_ == 0 ? 0 : rows.begin()->size();
    data_.reserve(rows_ * cols_);
    for (const auto &row : rows) {
        if (row.size() != cols_) {
            throw std::invalid_argument("ComplexMatrix: ragged initializer list");
        }
        data_.insert(data_.end(), row.begin(), row.end());
    }
    require_finite(data_);
}

ComplexMatrix ComplexMatrix::identity(std::size_t n) {
    ComplexMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        m(i, i) = 1.0;
    }
    return m;
}

ComplexMatrix ComplexMatrix::diagonal(std::span<const Complex> diag) {
    ComplexMatrix m(diag.size(), diag.size());
    for (std::size_t i = 0; i < diag.size(); ++i) {
        m(i, i) = diag[i];
    }
    require_finite(m.entries());
    return m;
}

ComplexMatrix matmul(const ComplexMatrix &a, const ComplexMatrix &b) {
    if (a.cols() != b.rows()) {
        throw std::invalid_argument("matmul: inner dimensions differ (" + std::to_string(a.cols()) +
                                    " vs " + std::to_string(b.rows()) + ")");
    }
    ComplexMatrix out(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const Complex aik = a(i, k);
            if (aik == Complex{}) {
                continue;
            }
            for (std::size_t j = 0; j < b.cols(); ++j) {
                out(i, j) += aik * b(k, j);
            }
        }
    }
    return out;
}

ComplexMatrix kron(const ComplexMatrix &a, const ComplexMatrix &b) {
    ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t ar = 0; ar < a.rows(); ++ar) {
        for (std::size_t ac = 0; ac < a.cols(); ++ac) {
            const Complex s = a(ar, ac);
            for (std::size_t br = 0; br < b.rows(); ++br) {
                for (std::size_t bc = 0; bc < b.cols(); ++bc) {
                    out(ar * b.rows() + br, ac * b.cols() + bc) = s * b(br, bc);
                }
            }
        }
    }
    return out;
}

ComplexMatrix dagger(const ComplexMatrix &a) {
    ComplexMatrix out(a.cols(), a.rows());
    for (std::size_t r = 0; r < a.rows(); ++r) {
        for (std::size_t c = 0; c < a.cols(); ++c) {
            out(c, r) = std::conj(a(r, c));
        }
    }
    return out;
}

ComplexMatrix add(const ComplexMatrix &a, const ComplexMatrix &b) {
    require_same_shape(a, b, "add");
    ComplexMatrix out = a;
    for (std::size_t r = 0; r < a.rows(); ++r) {
        for (std::size_t c = 0; c < a.cols(); ++c) {
            out(r, c) += b(r, c);
        }
    }
    return out;
}

ComplexMatrix scale(const ComplexMatrix &a, Complex factor) {
    ComplexMatrix out = a;
    for (std::size_t r = 0; r < a.rows(); ++r) {
        for (std::size_t c = 0; c < a.cols(); ++c) {
            out(r, c) *= factor;
        }
    }
    return out;
}

ComplexMatrix commutator(const ComplexMatrix &a, const ComplexMatrix &b) {
    return add(matmul(a, b), scale(matmul(b, a), -1.0));
}

double max_abs_diff(const ComplexMatrix &a, const ComplexMatrix &b) {
    require_same_shape(a, b, "max_abs_diff");
    double worst = 0.0;
    for (std::size_t i = 0; i < a.entries().size(); ++i) {
        worst = std::max(worst, std::abs(a.entries()[i] - b.entries()[i]));
    }
    return worst;
}

bool is_unitary(const ComplexMatrix &a, double tol) {
    if (!a.is_square()) {
        throw std::invalid_argument("is_unitary: matrix is not square");
    }
    return max_abs_diff(matmul(dagger(a), a), ComplexMatrix::identity(a.rows())) <= tol;
}

bool is_hermitian(const ComplexMatrix &a, double tol) {
    return a.is_square() && max_abs_diff(a, dagger(a)) <= tol;
}

EigenDecomposition hermitian_eigen(const ComplexMatrix &a) {
    if (!is_hermitian(a, 1e-10)) {
        throw std::invalid_argument("hermitian_eigen: matrix is not Hermitian");
    }
    const auto n = static_cast<Eigen::Index>(a.rows());
    Eigen::MatrixXcd m(n, n);
    for (Eigen::Index r = 0; r < n; ++r) {
        for (Eigen::Index c = 0; c < n; ++c) {
            m(r, c) = a(static_cast<std::size_t>(r), static_cast<std::size_t>(c));
        }
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(m);
    if (solver.info() != Eigen::Success) {
        throw std::runtime_error("hermitian_eigen: eigensolver did not converge");
    }
    EigenDecomposition out;
    out.eigenvalues.assign(solver.eigenvalues().data(), solver.eigenvalues().data() + n);
    out.eigenvectors = ComplexMatrix(a.rows(), a.cols());
    for (Eigen::Index r = 0; r < n; ++r) {
        for (Eigen::Index c = 0; c < n; ++c) {
            out.eigenvectors(static_cast<std::size_t>(r), static_cast<std::size_t>(c)) =
                solver.eigenvectors()(r, c);
        }
    }
    return out;
}

StateVector::StateVector(std::size_t num_qubits)
    : num_qubits_(num_qubits), amps_(std::size_t{1} << num_qubits) {
    amps_[0] = 1.0;
}

StateVector::StateVector(std::vector<Complex> amplitudes) : amps_(std::move(amplitudes)) {
    if (amps_.empty() || !std::has_single_bit(amps_.size())) {
        throw std::invalid_argument("StateVector: length must be a power of two");
    }
    num_qubits_ = static_cast<std::size_t>(std::countr_zero(amps_.size()));
}

StateVector StateVector::basis_state(std::size_t num_qubits, std::size_t index) {
    StateVector psi(num_qubits);
    if (index >= psi.dim()) {
        throw std::out_of_range("StateVector::basis_state: index out of range");
    }
    psi.amps_[0] = 0.0;
    psi.amps_[index] = 1.0;
    return psi;
}

double StateVector::norm_squared() const {
    double acc = 0.0;
    for (const auto &z : amps_) {
        acc += std::norm(z);
    }
    return acc;
}

void StateVector::normalize() {
    const double n = std::sqrt(norm_squared());
    if (n == 0.0) {
        throw std::domain_error("StateVector::normalize: zero vector");
    }
    for (auto &z : amps_) {
        z /= n;
    }
}

Complex inner_product(const StateVector &a, const StateVector &b) {
    if (a.dim() != b.dim()) {
        throw std::invalid_argument("inner_product: length mismatch");
    }
    Complex acc{};
    for (std::size_t i = 0; i < a.dim(); ++i) {
        acc += std::conj(a[i]) * b[i];
    }
    return acc;
}

StateVector apply_matrix(const ComplexMatrix &m, const StateVector &psi) {
    if (m.rows() != psi.dim() || m.cols() != psi.dim()) {
        throw std::invalid_argument("apply_matrix: dimension mismatch");
    }
    std::vector<Complex> out(psi.dim());
    for (std::size_t r = 0; r < m.rows(); ++r) {
        Complex acc{};
        for (std::size_t c = 0; c < m.cols(); ++c) {
            acc += m(r, c) * psi[c];
        }
        out[r] = acc;
    }
    return StateVector(std::move(out));
}

}  // namespace symvqc
