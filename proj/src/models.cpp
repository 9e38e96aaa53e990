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

#include "symvqc/models.hpp"

#include "symvqc/symmetry.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace symvqc {

namespace {

constexpr std::size_t kMaxDenseSites = 10;

int letter_index(char c) {
    switch (c) {
        case 'I':
            return 0;
        case 'X':
            return 1;
        case 'Y':
            return 2;
        case 'Z':
            return 3;
    }
    throw std::invalid_argument("PauliPolynomial: bad letter");
}

/// Single-qubit product a*b = phase * letter.
std::pair<Complex, char> multiply_letters(char a, char b) {
    const int ia = letter_index(a), ib = letter_index(b);
    if (ia == 0) {
        return {1.0, b};
    }
    if (ib == 0 || ia == ib) {
        return {1.0, ia == ib ? 'I' : a};
    }
    // X, Y, Z cyclic: XY = iZ, YZ = iX, ZX = iY; reversed order gives -i.
    const int ic = 6 - ia - ib;
    const bool cyclic = (ib - ia + 3) % 3 == 1;
    return {cyclic ? kI : -kI, "IXYZ"[ic]};
}

void check_spec_sites(std::size_t sites) {
    if (sites < 2) {
        throw std::invalid_argument("lattice models need at least two sites");
    }
}

}  // namespace

const char *to_string(Boundary b) { return b == Boundary::Open ? "open" : "periodic"; }

std::optional<Boundary> parse_boundary(const std::string &name) {
    if (name == "open") {
        return Boundary::Open;
    }
    if (name == "periodic") {
        return Boundary::Periodic;
    }
    return std::nullopt;
}

std::vector<std::pair<std::size_t, std::size_t>> chain_bonds(std::size_t sites, Boundary boundary) {
    check_spec_sites(sites);
    std::vector<std::pair<std::size_t, std::size_t>> bonds;
    for (std::size_t i = 0; i + 1 < sites; ++i) {
        bonds.emplace_back(i, i + 1);
    }
    if (boundary == Boundary::Periodic) {
        bonds.emplace_back(sites - 1, 0);
    }
    return bonds;
}

PauliPolynomial PauliPolynomial::identity(std::size_t num_qubits, Complex coefficient) {
    PauliPolynomial p(num_qubits);
    p.accumulate(std::string(num_qubits, 'I'), coefficient);
    return p;
}

PauliPolynomial PauliPolynomial::single(std::size_t num_qubits, std::size_t qubit, Pauli letter,
                                        Complex coefficient) {
    if (qubit >= num_qubits) {
        throw std::out_of_range("PauliPolynomial::single: qubit out of range");
    }
    std::string s(num_qubits, 'I');
    s[qubit] = "IXYZ"[static_cast<int>(letter)];
    PauliPolynomial p(num_qubits);
    p.accumulate(s, coefficient);
    return p;
}

PauliPolynomial PauliPolynomial::from_sum(const PauliSum &h) {
    PauliPolynomial p(h.num_qubits());
    for (const auto &t : h.terms()) {
        p.accumulate(t.letters_string(), t.coefficient);
    }
    return p;
}

void PauliPolynomial::accumulate(const std::string &letters, Complex c) {
    if (letters.size() != num_qubits_) {
        throw std::invalid_argument("PauliPolynomial: width mismatch");
    }
    auto [it, inserted] = terms_.emplace(letters, c);
    if (!inserted) {
        it->second += c;
    }
    if (it->second == Complex{}) {
        terms_.erase(it);
    }
}

bool PauliPolynomial::is_zero(double tol) const {
    return std::all_of(terms_.begin(), terms_.end(),
                       [tol](const auto &kv) { return std::abs(kv.second) <= tol; });
}

PauliPolynomial PauliPolynomial::operator+(const PauliPolynomial &o) const {
    if (o.num_qubits_ != num_qubits_) {
        throw std::invalid_argument("PauliPolynomial: width mismatch");
    }
    PauliPolynomial out = *this;
    for (const auto &[s, c] : o.terms_) {
        out.accumulate(s, c);
    }
    return out;
}

PauliPolynomial PauliPolynomial::operator-(const PauliPolynomial &o) const { return *this + o * -1.0; }

PauliPolynomial PauliPolynomial::operator*(const PauliPolynomial &o) const {
    if (o.num_qubits_ != num_qubits_) {
        throw std::invalid_argument("PauliPolynomial: width mismatch");
    }
    // Contributions are summed in sorted order so that products differing only
    // in operand order round identically.
    std::map<std::string, std::vector<Complex>> parts;
    for (const auto &[sa, ca] : terms_) {
        for (const auto &[sb, cb] : o.terms_) {
            std::string s(num_qubits_, 'I');
            Complex phase = 1.0;
            for (std::size_t q = 0; q < num_qubits_; ++q) {
                const auto [ph, letter] = multiply_letters(sa[q], sb[q]);
                phase *= ph;
                s[q] = letter;
            }
            parts[s].push_back(phase * (ca * cb));
        }
    }
    PauliPolynomial out(num_qubits_);
    for (auto &[s, values] : parts) {
        std::sort(values.begin(), values.end(), [](Complex x, Complex y) {
            return x.real() != y.real() ? x.real() < y.real() : x.imag() < y.imag();
        });
        Complex sum = 0.0;
        for (Complex v : values) {
            sum += v;
        }
        out.accumulate(s, sum);
    }
    return out;
}

PauliPolynomial PauliPolynomial::operator*(Complex s) const {
    PauliPolynomial out(num_qubits_);
    for (const auto &[letters, c] : terms_) {
        out.accumulate(letters, c * s);
    }
    return out;
}

PauliSum PauliPolynomial::to_sum(double tol) const {
    PauliSum h(num_qubits_);
    for (const auto &[letters, c] : terms_) {
        if (std::abs(c.imag()) > tol) {
            throw std::domain_error("PauliPolynomial::to_sum: term " + letters +
                                    " has an imaginary coefficient");
        }
        if (c.real() != 0.0) {
            h.add(c.real(), letters);
        }
    }
    return h;
}

PauliPolynomial commutator(const PauliPolynomial &a, const PauliPolynomial &b) { return a * b - b * a; }

PauliPolynomial hardcore_annihilation(std::size_t sites, std::size_t site) {
    return (PauliPolynomial::single(sites, site, Pauli::X) +
            PauliPolynomial::single(sites, site, Pauli::Y, kI)) *
           0.5;
}

PauliPolynomial hardcore_creation(std::size_t sites, std::size_t site) {
    return (PauliPolynomial::single(sites, site, Pauli::X) -
            PauliPolynomial::single(sites, site, Pauli::Y, kI)) *
           0.5;
}

PauliPolynomial hardcore_occupation(std::size_t sites, std::size_t site) {
    return hardcore_creation(sites, site) * hardcore_annihilation(sites, site);
}

PauliSum xxz_hamiltonian(const XXZSpec &spec) {
    PauliSum h(spec.sites);
    for (const auto &[i, j] : chain_bonds(spec.sites, spec.boundary)) {
        for (const auto &[letter, coef] : {std::pair{'X', 1.0}, {'Y', 1.0}, {'Z', spec.gamma}}) {
            std::string s(spec.sites, 'I');
            s[i] = letter;
            s[j] = letter;
            h.add(coef, s);
        }
    }
    return h;
}

PauliSum magnetization(std::size_t sites) {
    PauliSum m(sites);
    for (std::size_t i = 0; i < sites; ++i) {
        std::string s(sites, 'I');
        s[i] = 'Z';
        m.add(1.0, s);
    }
    return m;
}

PauliSum number_operator(std::size_t sites) {
    PauliSum n(sites);
    n.add(0.5 * static_cast<double>(sites), std::string(sites, 'I'));
    for (std::size_t i = 0; i < sites; ++i) {
        std::string s(sites, 'I');
        s[i] = 'Z';
        n.add(-0.5, s);
    }
    return n;
}

PauliSum bose_hubbard_hamiltonian(const BoseHubbardSpec &spec) {
    const std::size_t L = spec.sites;
    PauliPolynomial h(L);
    for (const auto &[i, j] : chain_bonds(L, spec.boundary)) {
        h = h + hardcore_creation(L, i) * hardcore_annihilation(L, j) +
            hardcore_creation(L, j) * hardcore_annihilation(L, i) +
            hardcore_occupation(L, i) * hardcore_occupation(L, j) * spec.delta;
    }
    return h.to_sum();
}

PauliPolynomial xxz_bose_hubbard_offset(const XXZSpec &spec) {
    const auto xxz = PauliPolynomial::from_sum(xxz_hamiltonian(spec));
    const auto bh = PauliPolynomial::from_sum(
        bose_hubbard_hamiltonian({spec.sites, 2.0 * spec.gamma, spec.boundary}));
    return xxz - bh * 2.0;
}

std::optional<double> xxz_bose_hubbard_constant(const XXZSpec &spec, std::size_t particles) {
    const PauliSum offset = xxz_bose_hubbard_offset(spec).to_sum();
    for (const auto &t : offset.terms()) {
        for (auto p : t.letters) {
            if (p == Pauli::X || p == Pauli::Y) {
                throw std::logic_error("xxz_bose_hubbard_constant: offset is not diagonal");
            }
        }
    }
    const ComplexMatrix block = sector_block(dense_matrix(offset), spec.sites, particles);
    const double c = block(0, 0).real();
    for (std::size_t i = 0; i < block.rows(); ++i) {
        if (std::abs(block(i, i).real() - c) > 1e-12) {
            return std::nullopt;
        }
    }
    return c;
}

ComplexMatrix sector_block(const ComplexMatrix &m, std::size_t sites, std::size_t particles) {
    const auto idx = sector_basis_indices(sites, particles);
    if (m.rows() != (std::size_t{1} << sites) || !m.is_square()) {
        throw std::invalid_argument("sector_block: matrix size does not match site count");
    }
    ComplexMatrix out(idx.size(), idx.size());
    for (std::size_t r = 0; r < idx.size(); ++r) {
        for (std::size_t c = 0; c < idx.size(); ++c) {
            out(r, c) = m(idx[r], idx[c]);
        }
    }
    return out;
}

GroundState exact_ground(const PauliSum &h, std::optional<std::size_t> sector) {
    const std::size_t L = h.num_qubits();
    if (L > kMaxDenseSites) {
        throw std::invalid_argument("exact_ground: " + std::to_string(L) +
                                    " sites is too large for dense diagonalization");
    }
    const ComplexMatrix full = dense_matrix(h);
    if (!sector) {
        const auto eig = hermitian_eigen(full);
        std::vector<Complex> amps(full.rows());
        for (std::size_t i = 0; i < amps.size(); ++i) {
            amps[i] = eig.eigenvectors(i, 0);
        }
        return {eig.eigenvalues.front(), StateVector(std::move(amps))};
    }
    const auto idx = sector_basis_indices(L, *sector);
    const auto eig = hermitian_eigen(sector_block(full, L, *sector));
    std::vector<Complex> amps(full.rows());
    for (std::size_t k = 0; k < idx.size(); ++k) {
        amps[idx[k]] = eig.eigenvectors(k, 0);
    }
    return {eig.eigenvalues.front(), StateVector(std::move(amps))};
}

std::vector<double> sector_spectrum(const PauliSum &h, std::size_t particles) {
    if (h.num_qubits() > kMaxDenseSites) {
        throw std::invalid_argument("sector_spectrum: too many sites");
    }
    return hermitian_eigen(sector_block(dense_matrix(h), h.num_qubits(), particles)).eigenvalues;
}

}  // namespace symvqc
