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

#ifndef NETCERT_MONOMIAL_H
#define NETCERT_MONOMIAL_H

#include <compare>
#include <optional>
#include <string>
#include <vector>

#include "netcert/distribution.h"
#include "netcert/inflation.h"

namespace netcert {

/// Product of inflated projectors. An empty factor list is the identity.
struct Monomial {
    std::vector<OpId> factors;
    bool is_zero = false;

    static Monomial zero() {
        return Monomial{{}, true};
    }
    static Monomial identity() {
        return Monomial{};
    }
    bool is_identity() const {
        return !is_zero && factors.empty();
    }
    std::size_t degree() const {
        return factors.size();
    }

    bool operator==(const Monomial &) const = default;
    /// Zero first, then by degree, then lexicographically by operator id.
    std::strong_ordering operator<=>(const Monomial &other) const;
};

/// Normal form modulo commutation, idempotence and orthogonality (no copy relabeling).
///
/// The factor order is the lexicographically smallest word reachable by swapping adjacent
/// commuting operators; repeated projectors that can be brought together collapse, and
/// orthogonal outcomes that can be brought together zero the monomial.
Monomial reduce(std::vector<OpId> word, const InflationScenario &sc);

Monomial adjoint(const Monomial &m, const InflationScenario &sc);

/// Orbit representative under commutation, source-copy permutations and adjoint reversal.
Monomial canonicalize(const Monomial &m, const InflationScenario &sc);

/// Connected components of the graph joining operators that act on a common source copy.
/// Components are returned in order of their first factor.
std::vector<Monomial> factor_components(const Monomial &m, const InflationScenario &sc);

/// Product of marginals of the target distribution. An empty factor list means the constant 1.
struct KnownValue {
    std::vector<MarginalSpec> factors;

    double value(const Distribution &p) const;
    bool operator==(const KnownValue &) const = default;
};

/// Expected value of `m` as a product of original-network marginals, when every connected
/// component uses each party at most once and a single copy of each source it touches.
std::optional<KnownValue> identify_known(const Monomial &m, const InflationScenario &sc);

/// "1" for the identity, "0" for zero, otherwise labels joined by " * ".
std::string to_string(const Monomial &m, const InflationScenario &sc);

/// Operator-set generating family of a moment matrix; element 0 is the identity.
struct GeneratingSet {
    std::string level;
    std::vector<Monomial> monomials;

    std::size_t size() const {
        return monomials.size();
    }
};

/// Levels "1", "1+AB", "1+AB+ABC" (products of operators of distinct parties) and "npa(n)" for
/// n <= 3 (all products of at most n operators). Throws std::invalid_argument otherwise.
GeneratingSet generating_set(const InflationScenario &sc, const std::string &level);

}  // namespace netcert

#endif
