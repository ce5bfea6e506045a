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

#include <algorithm>
#include <deque>
#include <random>
#include <set>

#include "netcert/monomial.h"

namespace netcert {
namespace {

TEST(Inflation, OperatorCountMatchesClosedForm) {
    for (int k = 1; k <= 3; k++) {
        for (const Network &net : {ghz6_network(2, 2), trident_network(), trident_network(2, 3)}) {
            InflationScenario sc = inflate(net, k);
            std::vector<int> copies(net.num_sources(), k);
            EXPECT_EQ(sc.num_operators(), expected_operator_count(net, copies));
        }
    }
    // Per input: 2 + 4 + 4 + 4 + 4 + 2 source-copy assignments.
    EXPECT_EQ(inflate(ghz6_network(2, 2), 2).num_operators(), 40);
    EXPECT_THROW(inflate(ghz6_network(), 0), std::invalid_argument);
}

TEST(Inflation, CommutationRules) {
    InflationScenario sc = inflate(ghz6_network(2, 2), 2);
    for (OpId a = 0; a < sc.num_operators(); a++) {
        for (OpId b = 0; b < sc.num_operators(); b++) {
            const auto &x = sc.op(a);
            const auto &y = sc.op(b);
            EXPECT_EQ(sc.commutes(a, b), sc.commutes(b, a));
            if (x.party != y.party) {
                EXPECT_TRUE(sc.commutes(a, b));
            }
            if (sc.orthogonal(a, b)) {
                EXPECT_EQ(x.copies, y.copies);
                EXPECT_EQ(x.input, y.input);
                EXPECT_NE(x.output, y.output);
            }
        }
    }
}

TEST(Inflation, GroupActionIsPermutation) {
    InflationScenario sc = inflate(ghz6_network(), 2);
    EXPECT_EQ(sc.group_order(), 8);
    for (int g = 0; g < sc.group_order(); g++) {
        std::set<OpId> img;
        for (OpId a = 0; a < sc.num_operators(); a++) {
            img.insert(sc.act(g, a));
            EXPECT_EQ(sc.op(sc.act(g, a)).party, sc.op(a).party);
        }
        EXPECT_EQ(static_cast<int>(img.size()), sc.num_operators());
    }
    for (OpId a = 0; a < sc.num_operators(); a++) {
        EXPECT_EQ(sc.act(0, a), a);
    }
}

// Oracle: breadth-first search over all words reachable by swapping adjacent commuting
// letters; the normal form of a word without repeats is the smallest of them.
std::vector<OpId> bfs_min(const std::vector<OpId> &w, const InflationScenario &sc) {
    std::set<std::vector<OpId>> seen{w};
    std::deque<std::vector<OpId>> q{w};
    while (!q.empty()) {
        auto cur = q.front();
        q.pop_front();
        for (std::size_t i = 0; i + 1 < cur.size(); i++) {
            if (cur[i] != cur[i + 1] && sc.commutes(cur[i], cur[i + 1])) {
                auto nxt = cur;
                std::swap(nxt[i], nxt[i + 1]);
                if (seen.insert(nxt).second) {
                    q.push_back(nxt);
                }
            }
        }
    }
    return *seen.begin();
}

bool reachable_collapse(const std::vector<OpId> &w, const InflationScenario &sc) {
    std::set<std::vector<OpId>> seen{w};
    std::deque<std::vector<OpId>> q{w};
    while (!q.empty()) {
        auto cur = q.front();
        q.pop_front();
        for (std::size_t i = 0; i + 1 < cur.size(); i++) {
            if (cur[i] == cur[i + 1] || sc.orthogonal(cur[i], cur[i + 1])) {
                return true;
            }
            if (sc.commutes(cur[i], cur[i + 1])) {
                auto nxt = cur;
                std::swap(nxt[i], nxt[i + 1]);
                if (seen.insert(nxt).second) {
                    q.push_back(nxt);
                }
            }
        }
    }
    return false;
}

TEST(Monomial, ReduceMatchesCommutationOracle) {
    InflationScenario sc = inflate(ghz6_network(2, 2), 2);
    std::mt19937_64 rng(7);
    // Restrict to the operators of two adjacent parties so that noncommuting pairs are common.
    std::vector<OpId> pool;
    for (OpId a = 0; a < sc.num_operators(); a++) {
        if (sc.op(a).party <= 1) {
            pool.push_back(a);
        }
    }
    std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
    int checked = 0;
    for (int trial = 0; trial < 3000; trial++) {
        std::vector<OpId> w(1 + trial % 5);
        for (auto &x : w) {
            x = pool[pick(rng)];
        }
        Monomial m = reduce(w, sc);
        if (reachable_collapse(w, sc)) {
            continue;
        }
        ASSERT_FALSE(m.is_zero);
        EXPECT_EQ(m.factors, bfs_min(w, sc));
        checked++;
    }
    EXPECT_GT(checked, 500);
}

TEST(Monomial, IdempotenceAndOrthogonality) {
    InflationScenario sc = inflate(ghz6_network(2, 3), 2);
    OpId a = sc.id_of({0, 0, 0, {0, -1, -1}});
    OpId b = sc.id_of({0, 0, 1, {0, -1, -1}});
    OpId c = sc.id_of({3, 1, 0, {-1, 1, 0}});
    EXPECT_EQ(reduce({a, a}, sc), reduce({a}, sc));
    EXPECT_TRUE(reduce({a, b}, sc).is_zero);
    EXPECT_TRUE(reduce({a, c, b}, sc).is_zero);
    EXPECT_EQ(reduce({a, c, a}, sc), reduce({a, c}, sc));
    EXPECT_TRUE(reduce({}, sc).is_identity());
}

TEST(Monomial, CanonicalFormIsOrbitInvariant) {
    InflationScenario sc = inflate(ghz6_network(2, 2), 2);
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<int> pick(0, sc.num_operators() - 1);
    for (int trial = 0; trial < 500; trial++) {
        std::vector<OpId> w(1 + trial % 4);
        for (auto &x : w) {
            x = static_cast<OpId>(pick(rng));
        }
        Monomial m = reduce(w, sc);
        if (m.is_zero) {
            continue;
        }
        Monomial c = canonicalize(m, sc);
        EXPECT_EQ(canonicalize(c, sc), c);
        EXPECT_EQ(canonicalize(adjoint(m, sc), sc), c);
        for (int g = 0; g < sc.group_order(); g++) {
            std::vector<OpId> img;
            for (OpId x : m.factors) {
                img.push_back(sc.act(g, x));
            }
            EXPECT_EQ(canonicalize(reduce(img, sc), sc), c);
        }
    }
}

TEST(Monomial, KnownValueIdentification) {
    InflationScenario sc = inflate(ghz6_network(2, 2), 2);
    OpId a1 = sc.id_of({0, 1, 0, {0, -1, -1}});
    OpId b1 = sc.id_of({1, 0, 0, {0, 0, -1}});
    OpId b2 = sc.id_of({1, 0, 0, {1, 1, -1}});
    OpId c1 = sc.id_of({2, 0, 0, {0, 1, -1}});
    OpId c2 = sc.id_of({2, 0, 0, {1, 1, -1}});
    auto k = identify_known(reduce({a1, b1}, sc), sc);
    ASSERT_TRUE(k.has_value());
    ASSERT_EQ(k->factors.size(), 1u);
    EXPECT_EQ(k->factors[0].parties, (std::vector<int>{0, 1}));
    EXPECT_EQ(k->factors[0].inputs, (std::vector<int>{1, 0}));
    // Disjoint source copies factorize into single-party marginals.
    auto k2 = identify_known(reduce({a1, b2}, sc), sc);
    ASSERT_TRUE(k2.has_value());
    EXPECT_EQ(k2->factors.size(), 2u);
    auto k3 = identify_known(reduce({b1, b2}, sc), sc);
    ASSERT_TRUE(k3.has_value());
    EXPECT_EQ(k3->factors.size(), 2u);
    // A component holding both copies of S2 cannot be deinflated.
    EXPECT_FALSE(identify_known(reduce({b1, c1}, sc), sc).has_value());
    auto k4 = identify_known(reduce({b2, c2}, sc), sc);
    ASSERT_TRUE(k4.has_value());
    EXPECT_EQ(k4->factors.size(), 1u);
    EXPECT_TRUE(identify_known(Monomial::identity(), sc)->factors.empty());
}

TEST(GeneratingSet, Sizes) {
    EXPECT_EQ(generating_set(inflate(ghz6_network(2, 2), 2), "1").size(), 41u);
    EXPECT_EQ(generating_set(inflate(ghz6_network(2, 2), 2), "1+AB").size(), 697u);
    EXPECT_EQ(generating_set(inflate(ghz6_network(), 2), "1+AB").size(), 185u);
    EXPECT_EQ(generating_set(inflate(trident_network(), 2), "1+AB+ABC").size(), 473u);
    EXPECT_EQ(generating_set(inflate(trident_network(2, 2), 2), "1+AB").size(), 449u);
    EXPECT_THROW(generating_set(inflate(ghz6_network(), 2), "2+XY"), std::invalid_argument);
}

TEST(GeneratingSet, ElementsAreDistinctNormalForms) {
    InflationScenario sc = inflate(ghz6_network(), 2);
    GeneratingSet gs = generating_set(sc, "1+AB");
    EXPECT_TRUE(gs.monomials[0].is_identity());
    std::set<std::vector<OpId>> seen;
    for (const auto &m : gs.monomials) {
        EXPECT_FALSE(m.is_zero);
        EXPECT_EQ(reduce(m.factors, sc), m);
        EXPECT_TRUE(seen.insert(m.factors).second);
    }
}

}  // namespace
}  // namespace netcert
