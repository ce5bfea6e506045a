// Copyright 2026 The netcert Authors
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

#ifndef NETCERT_INFLATION_H
#define NETCERT_INFLATION_H

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "netcert/network.h"

namespace netcert {

/// Index of an operator inside InflationScenario::operators().
using OpId = std::uint16_t;

/// A copy of one measurement projector in the inflated scenario.
///
/// `copies[s]` is the copy index of source `s` the operator acts on, or -1 when source `s`
/// does not feed the party. Only the first n_outputs - 1 outcomes are represented.
struct OperatorSymbol {
    int party = 0;
    int input = 0;
    int output = 0;
    std::vector<int> copies;

    bool operator==(const OperatorSymbol &) const = default;
    auto operator<=>(const OperatorSymbol &) const = default;
};

/// k-th order inflation of a network: the operator universe plus the copy-permutation group.
class InflationScenario {
   public:
    InflationScenario(Network net, std::vector<int> copies);

    const Network &network() const {
        return net_;
    }
    /// Copies per source, indexed like network().sources().
    const std::vector<int> &copies() const {
        return copies_;
    }
    const std::vector<OperatorSymbol> &operators() const {
        return ops_;
    }
    int num_operators() const {
        return static_cast<int>(ops_.size());
    }
    const OperatorSymbol &op(OpId id) const {
        return ops_[id];
    }
    /// Id of a symbol; throws std::out_of_range when it is not part of the universe.
    OpId id_of(const OperatorSymbol &sym) const;

    /// Operators commute when they belong to different parties or act on disjoint source copies.
    bool commutes(OpId a, OpId b) const {
        return commute_[a * ops_.size() + b];
    }
    /// Same party, identical copies and input, different output: product vanishes.
    bool orthogonal(OpId a, OpId b) const {
        return orthogonal_[a * ops_.size() + b];
    }
    /// True when the two operators act on at least one common (source, copy) pair.
    bool overlaps(OpId a, OpId b) const {
        return overlap_[a * ops_.size() + b];
    }

    /// Number of elements of the product of symmetric groups, one per source.
    int group_order() const {
        return static_cast<int>(group_action_.size());
    }
    /// Image of operator `op` under group element `g`; element 0 is the identity.
    OpId act(int g, OpId op) const {
        return group_action_[g][op];
    }

    /// Human-readable label, e.g. "A2^{1,2}|x=0,a=0" (copy indices 1-based).
    std::string label(OpId id) const;

   private:
    Network net_;
    std::vector<int> copies_;
    std::vector<OperatorSymbol> ops_;
    std::map<OperatorSymbol, OpId> index_;
    std::vector<char> commute_;
    std::vector<char> orthogonal_;
    std::vector<char> overlap_;
    std::vector<std::vector<OpId>> group_action_;
};

/// Uniform k-th order inflation. Throws std::invalid_argument when k < 1.
InflationScenario inflate(const Network &net, int k);

/// Inflation with a per-source copy count.
InflationScenario inflate(const Network &net, const std::vector<int> &copies);

/// Closed-form operator count: sum over parties of n_inputs * (n_outputs - 1) * prod copies.
long expected_operator_count(const Network &net, const std::vector<int> &copies);

}  // namespace netcert

#endif
