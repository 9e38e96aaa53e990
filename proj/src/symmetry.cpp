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

#include "symvqc/symmetry.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <string>

namespace symvqc {

int fuse(FusionRule rule, int n1, int n2) {
    switch (rule) {
        case FusionRule::U1Addition:
            return n1 + n2;
        case FusionRule::Z2Mod2:
            return (n1 + n2) % 2;
    }
    throw std::invalid_argument("fuse: unsupported fusion rule");
}

const char *to_string(FusionRule rule) {
    switch (rule) {
        case FusionRule::U1Addition:
            return "U1_addition";
        case FusionRule::Z2Mod2:
            return "Z2_mod2";
    }
    return "unknown";
}

ChargeBasisMap ChargeBasisMap::make(FusionRule rule, Z2Assignment z2) {
    ChargeBasisMap m;
    m.rule_ = rule;
    switch (rule) {
        case FusionRule::U1Addition:
            m.pairs_ = {{0b00, {0, 1}}, {0b01, {1, 1}}, {0b10, {1, 2}}, {0b11, {2, 1}}};
            break;
        case FusionRule::Z2Mod2:
            if (z2 == Z2Assignment::ReflectedCnot) {
                m.pairs_ = {{0b00, {0, 1}}, {0b01, {1, 2}}, {0b10, {1, 1}}, {0b11, {0, 2}}};
            } else {
                m.pairs_ = {{0b00, {0, 1}}, {0b01, {1, 1}}, {0b10, {1, 2}}, {0b11, {0, 2}}};
            }
            break;
        default:
            throw std::invalid_argument("ChargeBasisMap: unsupported fusion rule");
    }
    for (const auto &[idx, label] : m.pairs_) {
        const int n1 = static_cast<int>(idx >> 1);
        const int n2 = static_cast<int>(idx & 1u);
        if (fuse(rule, n1, n2) != label.charge) {
            throw std::logic_error("ChargeBasisMap: label inconsistent with fusion rule");
        }
        m.coupled_.push_back(label);
    }
    std::sort(m.coupled_.begin(), m.coupled_.end());
    return m;
}

ChargeLabel ChargeBasisMap::label_of(unsigned product_index) const {
    for (const auto &[idx, label] : pairs_) {
        if (idx == product_index) {
            return label;
        }
    }
    throw std::out_of_range("ChargeBasisMap: product index out of range");
}

unsigned ChargeBasisMap::product_index_of(ChargeLabel label) const {
    for (const auto &[idx, l] : pairs_) {
        if (l == label) {
            return idx;
        }
    }
    throw std::out_of_range("ChargeBasisMap: unknown charge label");
}

std::size_t ChargeBasisMap::coupled_index_of(ChargeLabel label) const {
    const auto it = std::find(coupled_.begin(), coupled_.end(), label);
    if (it == coupled_.end()) {
        throw std::out_of_range("ChargeBasisMap: unknown charge label");
    }
    return static_cast<std::size_t>(it - coupled_.begin());
}

std::map<int, std::size_t> ChargeBasisMap::degeneracies() const {
    std::map<int, std::size_t> out;
    for (const auto &label : coupled_) {
        ++out[label.charge];
    }
    return out;
}

FusionTensor::FusionTensor(ChargeBasisMap map, Direction direction)
    : map_(std::move(map)), direction_(direction) {
    for (const auto &[idx, label] : map_.pairs()) {
        data_[idx * 4 + map_.coupled_index_of(label)] = 1;
    }
}

int FusionTensor::at(int n1, int n2, std::size_t coupled) const {
    if (n1 < 0 || n1 > 1 || n2 < 0 || n2 > 1 || coupled >= 4) {
        throw std::out_of_range("FusionTensor::at: index out of range");
    }
    return data_[static_cast<std::size_t>(2 * n1 + n2) * 4 + coupled];
}

ComplexMatrix FusionTensor::as_matrix() const {
    ComplexMatrix m(4, 4);
    for (std::size_t p = 0; p < 4; ++p) {
        for (std::size_t c = 0; c < 4; ++c) {
            const double v = data_[p * 4 + c];
            if (direction_ == Direction::Fusion) {
                m(c, p) = v;
            } else {
                m(p, c) = v;
            }
        }
    }
    return m;
}

FusionTensor fusion_tensor(FusionRule rule) {
    return FusionTensor(ChargeBasisMap::make(rule), FusionTensor::Direction::Fusion);
}

FusionTensor splitting_tensor(FusionRule rule) {
    return FusionTensor(ChargeBasisMap::make(rule), FusionTensor::Direction::Splitting);
}

std::array<std::array<int, 4>, 4> contract_split_after_fuse(const FusionTensor &fusion,
                                                            const FusionTensor &splitting) {
    std::array<std::array<int, 4>, 4> out{};
    for (int p = 0; p < 4; ++p) {
        for (int q = 0; q < 4; ++q) {
            int acc = 0;
            for (std::size_t c = 0; c < 4; ++c) {
                acc += splitting.at(p >> 1, p & 1, c) * fusion.at(q >> 1, q & 1, c);
            }
            out[p][q] = acc;
        }
    }
    return out;
}

std::array<std::array<int, 4>, 4> contract_fuse_after_split(const FusionTensor &fusion,
                                                            const FusionTensor &splitting) {
    std::array<std::array<int, 4>, 4> out{};
    for (std::size_t c = 0; c < 4; ++c) {
        for (std::size_t d = 0; d < 4; ++d) {
            int acc = 0;
            for (int p = 0; p < 4; ++p) {
                acc += fusion.at(p >> 1, p & 1, c) * splitting.at(p >> 1, p & 1, d);
            }
            out[c][d] = acc;
        }
    }
    return out;
}

BlockMatrix::BlockMatrix(std::map<int, ComplexMatrix> blocks) : blocks_(std::move(blocks)) {
    for (const auto &[charge, b] : blocks_) {
        if (!b.is_square()) {
            throw std::invalid_argument("BlockMatrix: block for charge " + std::to_string(charge) +
                                        " is not square");
        }
    }
}

const ComplexMatrix &BlockMatrix::block(int charge) const {
    const auto it = blocks_.find(charge);
    if (it == blocks_.end()) {
        throw std::out_of_range("BlockMatrix: no block for charge " + std::to_string(charge));
    }
    return it->second;
}

ComplexMatrix embed_block_matrix(const BlockMatrix &m, const ChargeBasisMap &map) {
    const auto degeneracies = map.degeneracies();
    if (m.blocks().size() != degeneracies.size()) {
        throw std::invalid_argument("embed_block_matrix: block count does not match charges");
    }
    const auto &order = map.coupled_order();
    ComplexMatrix out(order.size(), order.size());
    for (const auto &[charge, deg] : degeneracies) {
        const auto it = m.blocks().find(charge);
        if (it == m.blocks().end() || it->second.rows() != deg) {
            throw std::invalid_argument("embed_block_matrix: block for charge " +
                                        std::to_string(charge) + " must be " +
                                        std::to_string(deg) + "x" + std::to_string(deg));
        }
        const std::size_t offset = map.coupled_index_of({charge, 1});
        for (std::size_t r = 0; r < deg; ++r) {
            for (std::size_t c = 0; c < deg; ++c) {
                out(offset + r, offset + c) = it->second(r, c);
            }
        }
    }
    return out;
}

ComplexMatrix charge_projector(const ChargeBasisMap &map, int charge) {
    const auto &order = map.coupled_order();
    ComplexMatrix p(order.size(), order.size());
    for (std::size_t i = 0; i < order.size(); ++i) {
        if (order[i].charge == charge) {
            p(i, i) = 1.0;
        }
    }
    return p;
}

std::uint64_t subspace_dimension(std::size_t sites, std::size_t particles) {
    if (particles > sites) {
        throw std::invalid_argument("subspace_dimension: particle count " +
                                    std::to_string(particles) + " exceeds site count " +
                                    std::to_string(sites));
    }
    const std::size_t k = std::min(particles, sites - particles);
    std::uint64_t result = 1;
    for (std::size_t i = 1; i <= k; ++i) {
        result = result * (sites - k + i) / i;
    }
    return result;
}

std::vector<std::size_t> sector_basis_indices(std::size_t sites, std::size_t particles) {
    if (particles > sites) {
        throw std::invalid_argument("sector_basis_indices: particle count exceeds site count");
    }
    if (sites >= 8 * sizeof(std::size_t)) {
        throw std::invalid_argument("sector_basis_indices: too many sites");
    }
    std::vector<std::size_t> out;
    const std::size_t dim = std::size_t{1} << sites;
    for (std::size_t i = 0; i < dim; ++i) {
        if (static_cast<std::size_t>(std::popcount(i)) == particles) {
            out.push_back(i);
        }
    }
    return out;
}

}  // namespace symvqc
