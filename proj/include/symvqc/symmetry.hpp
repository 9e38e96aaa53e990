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
 * Charge bookkeeping for two occupation-number sites.
 *
 * A two-site product state |n1 n2> has local index 2*n1 + n2: the first site
 * is the high-order bit. This is the ordering of every 4x4 gate matrix in
 * gatelib, where the first target qubit of a two-qubit gate plays the role
 * of n1.
 *
 * The coupled (symmetry) basis is ordered charge-major, degeneracy-minor.
 * For the Z2 rule that is {|0,1>, |0,2>, |1,1>, |1,2>}; for the U(1) rule it
 * is {|0,1>, |1,1>, |1,2>, |2,1>}.
 */
#pragma once

#include "symvqc/numkit.hpp"

#include <array>
#include <cstddef>
#include <cstdint>
#include <map>
#include <utility>
#include <vector>

namespace symvqc {

enum class FusionRule { U1Addition, Z2Mod2 };

int fuse(FusionRule rule, int n1, int n2);

const char *to_string(FusionRule rule);

/// (n, mu_n): charge and 1-based degeneracy index.
struct ChargeLabel {
    int charge = 0;
    int degeneracy = 1;

    auto operator<=>(const ChargeLabel &) const = default;
};

/// Which degeneracy assignment the Z2 map uses for the two charge-1 states.
enum class Z2Assignment {
    /// |01> -> |1,2>, |10> -> |1,1>. Realized by one reflected CNOT.
    ReflectedCnot,
    /// |01> -> |1,1>, |10> -> |1,2>. Needs two CNOTs.
    DoubleCnot,
};

/// Bijection between the four two-site product states and coupled labels.
class ChargeBasisMap {
  public:
    static ChargeBasisMap make(FusionRule rule, Z2Assignment z2 = Z2Assignment::ReflectedCnot);

    FusionRule rule() const { return rule_; }

    /// (product index, label) pairs ordered by product index.
    const std::vector<std::pair<unsigned, ChargeLabel>> &pairs() const { return pairs_; }

    /// Coupled-basis labels in canonical (charge-major) order.
    const std::vector<ChargeLabel> &coupled_order() const { return coupled_; }

    ChargeLabel label_of(unsigned product_index) const;
    unsigned product_index_of(ChargeLabel label) const;
    std::size_t coupled_index_of(ChargeLabel label) const;

    /// charge -> number of coupled states carrying it.
    std::map<int, std::size_t> degeneracies() const;

  private:
    FusionRule rule_ = FusionRule::Z2Mod2;
    std::vector<std::pair<unsigned, ChargeLabel>> pairs_;
    std::vector<ChargeLabel> coupled_;
};

/// Three-index 0/1 tensor with two single-site legs (dimension 2 each) and
/// one coupled leg (dimension 4).
///
/// Fusion F_{n1 n2}^{c} and splitting S^{n1 n2}_{c} share this storage;
/// the splitting tensor is the same array read with the arrow reversed.
class FusionTensor {
  public:
    enum class Direction { Fusion, Splitting };

    FusionTensor(ChargeBasisMap map, Direction direction);

    Direction direction() const { return direction_; }
    const ChargeBasisMap &basis_map() const { return map_; }

    /// Entry for site charges (n1, n2) and coupled index c.
    int at(int n1, int n2, std::size_t coupled) const;

    /// Fusion: 4x4 map from product index (column) to coupled index (row).
    /// Splitting: 4x4 map from coupled index (column) to product index (row).
    ComplexMatrix as_matrix() const;

  private:
    ChargeBasisMap map_;
    Direction direction_;
    std::array<int, 16> data_{};  // [(2*n1+n2) * 4 + c]
};

FusionTensor fusion_tensor(FusionRule rule);
FusionTensor splitting_tensor(FusionRule rule);

/// sum_c S^{n1 n2}_c F_{m1 m2}^c as a 4x4 integer matrix over product indices.
std::array<std::array<int, 4>, 4> contract_split_after_fuse(const FusionTensor &fusion,
                                                            const FusionTensor &splitting);

/// sum_{n1 n2} F_{n1 n2}^c S^{n1 n2}_{c'} as a 4x4 integer matrix over
/// coupled indices.
std::array<std::array<int, 4>, 4> contract_fuse_after_split(const FusionTensor &fusion,
                                                            const FusionTensor &splitting);

/// O = (+)_n O_n, keyed by charge.
class BlockMatrix {
  public:
    BlockMatrix() = default;
    explicit BlockMatrix(std::map<int, ComplexMatrix> blocks);

    const std::map<int, ComplexMatrix> &blocks() const { return blocks_; }
    const ComplexMatrix &block(int charge) const;

  private:
    std::map<int, ComplexMatrix> blocks_;
};

/// Dense matrix in the map's coupled ordering. Each block must be square with
/// size equal to that charge's degeneracy.
ComplexMatrix embed_block_matrix(const BlockMatrix &m, const ChargeBasisMap &map);

/// Projector onto charge n, written in the coupled ordering.
ComplexMatrix charge_projector(const ChargeBasisMap &map, int charge);

/// C(L, N), the dimension of the N-particle sector on L sites.
std::uint64_t subspace_dimension(std::size_t sites, std::size_t particles);

/// Ascending computational-basis indices with popcount N on L qubits.
std::vector<std::size_t> sector_basis_indices(std::size_t sites, std::size_t particles);

}  // namespace symvqc
