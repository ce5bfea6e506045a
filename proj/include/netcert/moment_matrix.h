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

#ifndef NETCERT_MOMENT_MATRIX_H
#define NETCERT_MOMENT_MATRIX_H

#include <cstdint>
#include <optional>
#include <vector>

#include "json.hpp"
#include "netcert/monomial.h"

namespace netcert {

/// Symbolic moment matrix Gamma[i][j] = <O_i^dagger O_j> over a generating set.
///
/// Every cell holds the id of a canonical monomial; id 0 is reserved for the zero monomial and
/// id 1 for the identity. The matrix is real symmetric because each monomial is identified
/// with its adjoint. Monomials whose source-copy components agree up to per-component
/// relabeling share an id; `variables` keeps the first representative met.
struct MomentMatrix {
    static constexpr int kZeroId = 0;
    static constexpr int kIdentityId = 1;

    int size = 0;
    std::vector<std::int32_t> cells;
    std::vector<Monomial> variables;
    std::vector<std::optional<KnownValue>> known;

    int cell(int i, int j) const {
        return cells[static_cast<std::size_t>(i) * size + j];
    }
    int num_variables() const {
        return static_cast<int>(variables.size());
    }
    int num_known() const;
    bool is_known(int id) const {
        return id == kZeroId || known[id].has_value();
    }

    nlohmann::ordered_json to_json(const InflationScenario &sc) const;
};

MomentMatrix build_moment_matrix(const GeneratingSet &gs, const InflationScenario &sc);

/// Row permutations of the moment matrix induced by swapping the two copies of one source.
///
/// One permutation per source inflated exactly twice whose image of the generating set is the
/// generating set again. They are commuting involutions and leave every cell id invariant.
std::vector<std::vector<int>> row_symmetries(const GeneratingSet &gs, const InflationScenario &sc);

}  // namespace netcert

#endif
