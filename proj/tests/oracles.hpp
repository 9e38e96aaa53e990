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

// Reference implementations written from first principles, independent of the
// library code paths they check. Plain row-major vectors, naive loops.
#pragma once

#include <cmath>
#include <complex>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace oracle {

using C = std::complex<double>;
inline constexpr C I{0.0, 1.0};

struct Mat {
    std::size_t n = 0;
    std::vector<C> a;  // n x n, row-major

    explicit Mat(std::size_t dim = 0) : n(dim), a(dim * dim) {}
    C &operator()(std::size_t r, std::size_t c) { return a[r * n + c]; }
    C operator()(std::size_t r, std::size_t c) const { return a[r * n + c]; }

    static Mat eye(std::size_t dim) {
        Mat m(dim);
        for (std::size_t i = 0; i < dim; ++i) m(i, i) = 1.0;
        return m;
    }
};

inline Mat mul(const Mat &x, const Mat &y) {
    Mat out(x.n);
    for (std::size_t i = 0; i < x.n; ++i)
        for (std::size_t k = 0; k < x.n; ++k)
            for (std::size_t j = 0; j < x.n; ++j) out(i, j) += x(i, k) * y(k, j);
    return out;
}

inline Mat kron(const Mat &x, const Mat &y) {
    Mat out(x.n * y.n);
    for (std::size_t i = 0; i < x.n; ++i)
        for (std::size_t j = 0; j < x.n; ++j)
            for (std::size_t k = 0; k < y.n; ++k)
                for (std::size_t l = 0; l < y.n; ++l) out(i * y.n + k, j * y.n + l) = x(i, j) * y(k, l);
    return out;
}

inline Mat pauli(char p) {
    Mat m(2);
    switch (p) {
    case 'X': m(0, 1) = 1.0; m(1, 0) = 1.0; break;
    case 'Y': m(0, 1) = -I; m(1, 0) = I; break;
    case 'Z': m(0, 0) = 1.0; m(1, 1) = -1.0; break;
    default: m = Mat::eye(2);
    }
    return m;
}

// letters[q] acts on qubit q; qubit q is bit q of the basis index, so the
// Kronecker product runs from the highest qubit down.
inline Mat pauli_string(const std::string &letters) {
    Mat m = Mat::eye(1);
    for (std::size_t k = letters.size(); k-- > 0;) m = kron(m, pauli(letters[k]));
    return m;
}

// Embeds a 2x2 or 4x4 gate. For two qubits {a, b}, a is the high local bit.
inline Mat embed(const Mat &g, const std::vector<std::size_t> &qubits, std::size_t nq) {
    const std::size_t dim = std::size_t{1} << nq;
    Mat out(dim);
    auto local = [&](std::size_t idx) {
        std::size_t l = 0;
        for (auto q : qubits) l = (l << 1) | ((idx >> q) & 1U);
        return l;
    };
    std::size_t mask = 0;
    for (auto q : qubits) mask |= std::size_t{1} << q;
    for (std::size_t r = 0; r < dim; ++r)
        for (std::size_t c = 0; c < dim; ++c)
            if ((r & ~mask) == (c & ~mask)) out(r, c) = g(local(r), local(c));
    return out;
}

inline std::vector<C> apply(const Mat &m, const std::vector<C> &v) {
    std::vector<C> out(m.n);
    for (std::size_t i = 0; i < m.n; ++i)
        for (std::size_t j = 0; j < m.n; ++j) out[i] += m(i, j) * v[j];
    return out;
}

inline double max_diff(const Mat &x, const Mat &y) {
    double d = 0.0;
    for (std::size_t i = 0; i < x.a.size(); ++i) d = std::max(d, std::abs(x.a[i] - y.a[i]));
    return d;
}

// Closed forms written out entry by entry.
inline Mat a_closed(double t, double p) {
    Mat m(4);
    m(0, 0) = 1.0;
    m(1, 1) = std::sin(t);
    m(1, 2) = std::exp(I * p) * std::cos(t);
    m(2, 1) = std::exp(-I * p) * std::cos(t);
    m(2, 2) = -std::sin(t);
    m(3, 3) = 1.0;
    return m;
}

inline Mat b_closed(double t, double p) {
    Mat m(4);
    m(0, 0) = 1.0;
    m(1, 1) = std::cos(t / 2);
    m(1, 2) = I * std::sin(t / 2);
    m(2, 1) = I * std::sin(t / 2);
    m(2, 2) = std::cos(t / 2);
    m(3, 3) = std::exp(I * p);
    return m;
}

inline Mat v_closed(double t, double p) {
    Mat m(2);
    m(0, 0) = -std::sin(t);
    m(0, 1) = std::exp(-I * p) * std::cos(t);
    m(1, 0) = std::exp(I * p) * std::cos(t);
    m(1, 1) = std::sin(t);
    return m;
}

inline Mat x_gate() { return pauli('X'); }

inline Mat rx(double t) {
    Mat m(2);
    m(0, 0) = std::cos(t / 2);
    m(1, 1) = std::cos(t / 2);
    m(0, 1) = -I * std::sin(t / 2);
    m(1, 0) = -I * std::sin(t / 2);
    return m;
}

// CNOT with the control as the high local bit.
inline Mat cnot() {
    Mat m(4);
    m(0, 0) = 1.0;
    m(1, 1) = 1.0;
    m(2, 3) = 1.0;
    m(3, 2) = 1.0;
    return m;
}

inline Mat swap_gate() {
    Mat m(4);
    m(0, 0) = 1.0;
    m(1, 2) = 1.0;
    m(2, 1) = 1.0;
    m(3, 3) = 1.0;
    return m;
}

// Counts subsets by enumeration.
inline std::uint64_t binomial_by_enumeration(std::size_t n, std::size_t k) {
    std::uint64_t count = 0;
    for (std::uint64_t s = 0; s < (std::uint64_t{1} << n); ++s)
        if (static_cast<std::size_t>(__builtin_popcountll(s)) == k) ++count;
    return count;
}

// Smallest eigenvalue of a Hermitian matrix via power iteration on
// (shift*I - H); adequate for the small, gapped test matrices.
inline double lowest_eigenvalue(const Mat &h, int iterations = 20000) {
    double shift = 0.0;
    for (std::size_t i = 0; i < h.n; ++i) {
        double row = 0.0;
        for (std::size_t j = 0; j < h.n; ++j) row += std::abs(h(i, j));
        shift = std::max(shift, row);
    }
    std::vector<C> v(h.n);
    for (std::size_t i = 0; i < h.n; ++i) v[i] = C(1.0 + 0.01 * double(i), 0.003 * double(i));
    double lambda = 0.0;
    for (int it = 0; it < iterations; ++it) {
        std::vector<C> w = apply(h, v);
        double norm = 0.0;
        for (std::size_t i = 0; i < h.n; ++i) {
            w[i] = shift * v[i] - w[i];
            norm += std::norm(w[i]);
        }
        norm = std::sqrt(norm);
        for (auto &x : w) x /= norm;
        v = w;
        lambda = shift - norm;
    }
    return lambda;
}

}  // namespace oracle

namespace oracle {

// Copies any matrix type with rows() and operator()(r, c).
template <class M>
Mat from(const M &m) {
    Mat out(m.rows());
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.rows(); ++c) out(r, c) = m(r, c);
    return out;
}

}  // namespace oracle
