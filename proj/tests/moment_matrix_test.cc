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

#include <gtest/gtest.h>

#include "netcert/moment_matrix.h"
#include "toy_oracle.h"

namespace netcert {
namespace {

TEST(MomentMatrix, SymmetricWithReservedIds) {
    InflationScenario sc = inflate(ghz6_network(2, 2), 2);
    GeneratingSet gs = generating_set(sc, "1");
    MomentMatrix mm = build_moment_matrix(gs, sc);
    ASSERT_EQ(mm.size, 41);
    EXPECT_EQ(mm.cell(0, 0), MomentMatrix::kIdentityId);
    EXPECT_TRUE(mm.variables[MomentMatrix::kZeroId].is_zero);
    EXPECT_TRUE(mm.variables[MomentMatrix::kIdentityId].is_identity());
    for (int i = 0; i < mm.size; i++) {
        // Projectors: <P P> = <P>.
        EXPECT_EQ(mm.cell(i, i), mm.cell(0, i));
        for (int j = 0; j < mm.size; j++) {
            EXPECT_EQ(mm.cell(i, j), mm.cell(j, i));
        }
    }
    EXPECT_GT(mm.num_known(), 1);
    EXPECT_LT(mm.num_known(), mm.num_variables());
}

TEST(MomentMatrix, RowSymmetriesPreserveCells) {
    InflationScenario sc = inflate(ghz6_network(2, 2), 2);
    for (const std::string level : {"1", "1+AB"}) {
        GeneratingSet gs = generating_set(sc, level);
        MomentMatrix mm = build_moment_matrix(gs, sc);
        auto syms = row_symmetries(gs, sc);
        EXPECT_EQ(syms.size(), 3u);
        for (const auto &perm : syms) {
            ASSERT_EQ(static_cast<int>(perm.size()), mm.size);
            for (int i = 0; i < mm.size; i++) {
                EXPECT_EQ(perm[perm[i]], i);
                for (int j = 0; j < mm.size; j++) {
                    ASSERT_EQ(mm.cell(perm[i], perm[j]), mm.cell(i, j));
                }
            }
        }
    }
}

TEST(MomentMatrix, JsonListsCellsAndVariables) {
    InflationScenario sc = inflate(ghz6_network(), 2);
    MomentMatrix mm = build_moment_matrix(generating_set(sc, "1"), sc);
    auto j = mm.to_json(sc);
    EXPECT_TRUE(j.is_object());
    EXPECT_FALSE(j.dump().empty());
}

TEST(MomentMatrix, KnownValuesMatchInflatedTraces) {
    for (std::uint64_t seed : {2024u, 7u}) {
        toy::OracleResult r = toy::run_oracle(seed);
        EXPECT_EQ(r.words, 16 + 16 * 16 + 16 * 16 * 16);
        EXPECT_GT(r.identified, 1000);
        EXPECT_LT(r.max_error, 1e-10);
    }
}

}  // namespace
}  // namespace netcert
