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

#include "symvqc/simulator.hpp"

#include "symvqc/symmetry.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace symvqc {

namespace {

struct PauliMasks {
    std::size_t flip = 0;   // X or Y
    std::size_t sign = 0;   // Y or Z
    unsigned num_y = 0;
};

PauliMasks masks_of(const PauliString &p) {
    PauliMasks m;
    for (std::size_t q = 0; q < p.letters.size(); ++q) {
        const std::size_t bit = std::size_t{1} << q;
        switch (p.letters[q]) {
            case Pauli::X:
                m.flip |= bit;
                break;
            case Pauli::Y:
                m.flip |= bit;
                m.sign |= bit;
                ++m.num_y;
                break;
            case Pauli::Z:
                m.sign |= bit;
                break;
            case Pauli::I:
                break;
        }
    }
    return m;
}

/// P|i> = phase(i) |i ^ flip>, phase(i) = i^{#Y} (-1)^{popcount(i & sign)}.
Complex pauli_phase(const PauliMasks &m, std::size_t i) {
    static const Complex kIPow[4] = {1.0, kI, -1.0, -kI};
    const Complex base = kIPow[m.num_y % 4];
    return (std::popcount(i & m.sign) & 1) ? -base : base;
}

const ComplexMatrix &single_pauli(Pauli p) {
    static const ComplexMatrix kMats[4] = {
        ComplexMatrix::identity(2),
        ComplexMatrix{{0.0, 1.0}, {1.0, 0.0}},
        ComplexMatrix{{0.0, -kI}, {kI, 0.0}},
        ComplexMatrix{{1.0, 0.0}, {0.0, -1.0}},
    };
    return kMats[static_cast<int>(p)];
}

void apply_1q(StateVector &psi, const ComplexMatrix &m, std::size_t q) {
    const std::size_t bit = std::size_t{1} << q;
    const Complex m00 = m(0, 0), m01 = m(0, 1), m10 = m(1, 0), m11 = m(1, 1);
    auto amps = psi.amplitudes();
    for (std::size_t i = 0; i < amps.size(); ++i) {
        if (i & bit) {
            continue;
        }
        const Complex a0 = amps[i], a1 = amps[i | bit];
        amps[i] = m00 * a0 + m01 * a1;
        amps[i | bit] = m10 * a0 + m11 * a1;
    }
}

void apply_2q(StateVector &psi, const ComplexMatrix &m, std::size_t hi, std::size_t lo) {
    // Local index 2*bit(hi) + bit(lo).
    const std::size_t bh = std::size_t{1} << hi, bl = std::size_t{1} << lo;
    auto amps = psi.amplitudes();
    for (std::size_t i = 0; i < amps.size(); ++i) {
        if (i & (bh | bl)) {
            continue;
        }
        const std::size_t idx[4] = {i, i | bl, i | bh, i | bh | bl};
        const Complex v[4] = {amps[idx[0]], amps[idx[1]], amps[idx[2]], amps[idx[3]]};
        for (std::size_t r = 0; r < 4; ++r) {
            amps[idx[r]] = m(r, 0) * v[0] + m(r, 1) * v[1] + m(r, 2) * v[2] + m(r, 3) * v[3];
        }
    }
}

void check_binding(const Circuit &c, std::span<const double> binding) {
    if (binding.size() != c.num_free_parameters()) {
        throw std::invalid_argument("binding has " + std::to_string(binding.size()) +
                                    " values, circuit has " +
                                    std::to_string(c.num_free_parameters()) + " free parameters");
    }
}

void check_width(const Circuit &c, const StateVector &input) {
    if (input.num_qubits() != c.num_qubits()) {
        throw std::invalid_argument("input state has " + std::to_string(input.num_qubits()) +
                                    " qubits, circuit has " + std::to_string(c.num_qubits()));
    }
}

/// Rotates psi so that measuring Z on qubit q measures basis[q].
StateVector rotate_to_z(const StateVector &psi, const std::vector<Pauli> &basis) {
    static const double r = 1.0 / std::numbers::sqrt2;
    static const ComplexMatrix h{{r, r}, {r, -r}};
    // H S^dagger maps the Y eigenbasis onto the Z eigenbasis.
    static const ComplexMatrix hsdg{{r, -kI * r}, {r, kI * r}};
    StateVector out = psi;
    for (std::size_t q = 0; q < basis.size(); ++q) {
        if (basis[q] == Pauli::X) {
            apply_1q(out, h, q);
        } else if (basis[q] == Pauli::Y) {
            apply_1q(out, hsdg, q);
        }
    }
    return out;
}

std::size_t support_mask(const PauliString &p) {
    std::size_t m = 0;
    for (std::size_t q = 0; q < p.letters.size(); ++q) {
        if (p.letters[q] != Pauli::I) {
            m |= std::size_t{1} << q;
        }
    }
    return m;
}

void apply_random_pauli(StateVector &psi, std::span<const std::size_t> qubits, Rng &rng) {
    std::uint64_t draw = rng.below(std::uint64_t{1} << (2 * qubits.size()));
    for (auto q : qubits) {
        const auto p = static_cast<Pauli>(draw & 3u);
        draw >>= 2;
        if (p != Pauli::I) {
            apply_1q(psi, single_pauli(p), q);
        }
    }
}

}  // namespace

double Rng::uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

double Rng::normal() {
    if (has_spare_) {
        has_spare_ = false;
        return spare_;
    }
    const double u1 = 1.0 - uniform();  // (0, 1]
    const double u2 = uniform();
    const double radius = std::sqrt(-2.0 * std::log(u1));
    const double angle = 2.0 * std::numbers::pi * u2;
    spare_ = radius * std::sin(angle);
    has_spare_ = true;
    return radius * std::cos(angle);
}

std::uint64_t Rng::below(std::uint64_t n) {
    if (n == 0) {
        throw std::invalid_argument("Rng::below: empty range");
    }
    const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % n);
    std::uint64_t x;
    do {
        x = engine_();
    } while (x >= limit);
    return x % n;
}

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream) {
    std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (stream + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

PauliString PauliString::from_letters(double coefficient, std::string_view letters) {
    PauliString p;
    p.coefficient = coefficient;
    for (char ch : letters) {
        switch (ch) {
            case 'I':
                p.letters.push_back(Pauli::I);
                break;
            case 'X':
                p.letters.push_back(Pauli::X);
                break;
            case 'Y':
                p.letters.push_back(Pauli::Y);
                break;
            case 'Z':
                p.letters.push_back(Pauli::Z);
                break;
            default:
                throw std::invalid_argument(std::string("PauliString: bad letter '") + ch + "'");
        }
    }
    return p;
}

std::string PauliString::letters_string() const {
    std::string s;
    for (auto p : letters) {
        s.push_back("IXYZ"[static_cast<int>(p)]);
    }
    return s;
}

bool PauliString::is_identity() const {
    return std::all_of(letters.begin(), letters.end(), [](Pauli p) { return p == Pauli::I; });
}

void PauliSum::add(PauliString term) {
    if (term.letters.size() != num_qubits_) {
        throw std::invalid_argument("PauliSum: string length " + std::to_string(term.letters.size()) +
                                    " does not match " + std::to_string(num_qubits_) + " qubits");
    }
    if (!std::isfinite(term.coefficient)) {
        throw std::invalid_argument("PauliSum: non-finite coefficient");
    }
    terms_.push_back(std::move(term));
}

void PauliSum::add(double coefficient, std::string_view letters) {
    add(PauliString::from_letters(coefficient, letters));
}

ComplexMatrix dense_matrix(const PauliSum &h) {
    const std::size_t dim = std::size_t{1} << h.num_qubits();
    ComplexMatrix m(dim, dim);
    for (const auto &term : h.terms()) {
        const auto masks = masks_of(term);
        for (std::size_t i = 0; i < dim; ++i) {
            m(i ^ masks.flip, i) += term.coefficient * pauli_phase(masks, i);
        }
    }
    return m;
}

StateVector apply_pauli_string(const PauliString &p, const StateVector &psi) {
    if (p.letters.size() != psi.num_qubits()) {
        throw std::invalid_argument("apply_pauli_string: length mismatch");
    }
    const auto masks = masks_of(p);
    std::vector<Complex> out(psi.dim());
    for (std::size_t i = 0; i < psi.dim(); ++i) {
        out[i ^ masks.flip] = p.coefficient * pauli_phase(masks, i) * psi[i];
    }
    return StateVector(std::move(out));
}

void NoiseSpec::validate() const {
    for (double p : {p1, p2, p_readout}) {
        if (!(p >= 0.0 && p <= 1.0)) {
            throw std::invalid_argument("NoiseSpec: probabilities must lie in [0, 1]");
        }
    }
}

void apply_gate(StateVector &psi, const ComplexMatrix &m, std::span<const std::size_t> qubits) {
    for (auto q : qubits) {
        if (q >= psi.num_qubits()) {
            throw std::out_of_range("apply_gate: qubit out of range");
        }
    }
    if (qubits.size() == 1 && m.rows() == 2 && m.cols() == 2) {
        apply_1q(psi, m, qubits[0]);
    } else if (qubits.size() == 2 && m.rows() == 4 && m.cols() == 4 && qubits[0] != qubits[1]) {
        apply_2q(psi, m, qubits[0], qubits[1]);
    } else {
        throw std::invalid_argument("apply_gate: matrix does not match qubit count");
    }
}

StateVector apply_circuit(const Circuit &c, std::span<const double> binding, const StateVector &input) {
    check_binding(c, binding);
    check_width(c, input);
    StateVector psi = input;
    for (std::size_t i = 0; i < c.ops().size(); ++i) {
        const auto &op = c.ops()[i];
        apply_gate(psi, gate_matrix(op.kind, c.resolve(i, binding)), op.qubits);
    }
    return psi;
}

StateVector apply_circuit_noisy(const Circuit &c, std::span<const double> binding,
                                const StateVector &input, const NoiseSpec &noise,
                                std::uint64_t seed) {
    noise.validate();
    check_binding(c, binding);
    check_width(c, input);
    Rng rng(seed);
    StateVector psi = input;
    for (std::size_t i = 0; i < c.ops().size(); ++i) {
        const auto &op = c.ops()[i];
        apply_gate(psi, gate_matrix(op.kind, c.resolve(i, binding)), op.qubits);
        const double p = op.qubits.size() == 1 ? noise.p1 : noise.p2;
        if (p > 0.0 && rng.uniform() < p) {
            apply_random_pauli(psi, op.qubits, rng);
        }
    }
    return psi;
}

double expectation(const PauliSum &h, const StateVector &psi) {
    if (h.num_qubits() != psi.num_qubits()) {
        throw std::invalid_argument("expectation: operator acts on " + std::to_string(h.num_qubits()) +
                                    " qubits, state has " + std::to_string(psi.num_qubits()));
    }
    Complex total{};
    for (const auto &term : h.terms()) {
        const auto masks = masks_of(term);
        Complex acc{};
        for (std::size_t i = 0; i < psi.dim(); ++i) {
            acc += std::conj(psi[i ^ masks.flip]) * pauli_phase(masks, i) * psi[i];
        }
        total += term.coefficient * acc;
    }
    const double scale_ref = std::max(1.0, std::abs(total.real()));
    if (std::abs(total.imag()) > 1e-10 * scale_ref) {
        throw std::logic_error("expectation: non-negligible imaginary part; operator not Hermitian?");
    }
    return total.real();
}

std::vector<MeasurementGroup> group_measurements(const PauliSum &h) {
    std::vector<MeasurementGroup> groups;
    for (std::size_t t = 0; t < h.terms().size(); ++t) {
        const auto &term = h.terms()[t];
        if (term.is_identity()) {
            continue;
        }
        bool placed = false;
        for (auto &g : groups) {
            bool compatible = true;
            for (std::size_t q = 0; q < term.letters.size() && compatible; ++q) {
                const Pauli want = term.letters[q];
                compatible = want == Pauli::I || g.basis[q] == Pauli::I || g.basis[q] == want;
            }
            if (compatible) {
                for (std::size_t q = 0; q < term.letters.size(); ++q) {
                    if (term.letters[q] != Pauli::I) {
                        g.basis[q] = term.letters[q];
                    }
                }
                g.terms.push_back(t);
                placed = true;
                break;
            }
        }
        if (!placed) {
            groups.push_back({term.letters, {t}});
        }
    }
    return groups;
}

double sampled_expectation(const PauliSum &h, const StateVector &psi, std::size_t shots,
                           std::uint64_t seed, double p_readout) {
    if (shots == 0) {
        throw std::invalid_argument("sampled_expectation: shots must be >= 1");
    }
    if (h.num_qubits() != psi.num_qubits()) {
        throw std::invalid_argument("sampled_expectation: length mismatch");
    }
    if (!(p_readout >= 0.0 && p_readout <= 1.0)) {
        throw std::invalid_argument("sampled_expectation: readout probability outside [0, 1]");
    }
    double estimate = 0.0;
    for (const auto &term : h.terms()) {
        if (term.is_identity()) {
            estimate += term.coefficient;
        }
    }
    const auto groups = group_measurements(h);
    for (std::size_t gi = 0; gi < groups.size(); ++gi) {
        const auto &g = groups[gi];
        const StateVector rotated = rotate_to_z(psi, g.basis);
        std::vector<double> cumulative(rotated.dim());
        double acc = 0.0;
        for (std::size_t i = 0; i < rotated.dim(); ++i) {
            acc += std::norm(rotated[i]);
            cumulative[i] = acc;
        }
        Rng rng(derive_seed(seed, gi));
        std::vector<double> sums(g.terms.size(), 0.0);
        for (std::size_t s = 0; s < shots; ++s) {
            const double u = rng.uniform() * acc;
            auto it = std::upper_bound(cumulative.begin(), cumulative.end(), u);
            std::size_t outcome = it == cumulative.end() ? cumulative.size() - 1
                                                         : static_cast<std::size_t>(it - cumulative.begin());
            if (p_readout > 0.0) {
                for (std::size_t q = 0; q < psi.num_qubits(); ++q) {
                    if (rng.uniform() < p_readout) {
                        outcome ^= std::size_t{1} << q;
                    }
                }
            }
            for (std::size_t k = 0; k < g.terms.size(); ++k) {
                const auto mask = support_mask(h.terms()[g.terms[k]]);
                sums[k] += (std::popcount(outcome & mask) & 1) ? -1.0 : 1.0;
            }
        }
        for (std::size_t k = 0; k < g.terms.size(); ++k) {
            estimate += h.terms()[g.terms[k]].coefficient * sums[k] / static_cast<double>(shots);
        }
    }
    return estimate;
}

double predicted_shot_stderr(const PauliSum &h, const StateVector &psi, std::size_t shots) {
    if (shots == 0) {
        throw std::invalid_argument("predicted_shot_stderr: shots must be >= 1");
    }
    double variance = 0.0;
    for (const auto &g : group_measurements(h)) {
        const StateVector rotated = rotate_to_z(psi, g.basis);
        double mean = 0.0, second = 0.0;
        for (std::size_t b = 0; b < rotated.dim(); ++b) {
            double value = 0.0;
            for (auto t : g.terms) {
                const auto &term = h.terms()[t];
                value += (std::popcount(b & support_mask(term)) & 1) ? -term.coefficient : term.coefficient;
            }
            const double p = std::norm(rotated[b]);
            mean += p * value;
            second += p * value * value;
        }
        variance += std::max(0.0, second - mean * mean);
    }
    return std::sqrt(variance / static_cast<double>(shots));
}

StateVector haar_random_sector_state(std::size_t sites, std::size_t particles, std::uint64_t seed) {
    const auto indices = sector_basis_indices(sites, particles);
    Rng rng(seed);
    std::vector<Complex> amps(std::size_t{1} << sites);
    for (auto i : indices) {
        const double re = rng.normal();
        const double im = rng.normal();
        amps[i] = Complex(re, im);
    }
    StateVector psi(std::move(amps));
    psi.normalize();
    const Complex first = psi[indices.front()];
    if (std::abs(first) > 0.0) {
        const Complex unphase = std::conj(first) / std::abs(first);
        for (auto i : indices) {
            psi[i] *= unphase;
        }
    }
    return psi;
}

double fidelity(const StateVector &phi, const StateVector &psi) {
    if (phi.dim() != psi.dim()) {
        throw std::invalid_argument("fidelity: length mismatch");
    }
    return std::norm(inner_product(phi, psi));
}

double sector_weight(const StateVector &psi, std::size_t particles) {
    double w = 0.0;
    for (std::size_t i = 0; i < psi.dim(); ++i) {
        if (static_cast<std::size_t>(std::popcount(i)) == particles) {
            w += std::norm(psi[i]);
        }
    }
    return w;
}

}  // namespace symvqc
