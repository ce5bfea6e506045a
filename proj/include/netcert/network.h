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

#ifndef NETCERT_NETWORK_H
#define NETCERT_NETWORK_H

#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"

namespace netcert {

/// Raised for malformed network descriptions (duplicate ids, dangling references, bad cardinalities).
struct NetworkError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct Party {
    std::string id;
    int n_inputs = 1;
    int n_outputs = 2;

    bool operator==(const Party &) const = default;
};

struct Source {
    std::string id;
    /// Indices into Network::parties(), sorted ascending.
    std::vector<int> parties;

    bool operator==(const Source &) const = default;
};

/// Declarative source entry: a source id and the ids of the parties it feeds.
struct SourceDecl {
    std::string id;
    std::vector<std::string> parties;
};

/// Bipartite source/party hypergraph of a candidate quantum network.
///
/// Parties keep declaration order. Every source's party list is stored sorted by party index so
/// two networks with the same content compare equal regardless of how the description listed
/// the connections. Instances are immutable once built.
class Network {
   public:
    Network() = default;

    static Network build(const std::vector<SourceDecl> &sources, const std::vector<Party> &parties);

    /// Parses {"sources": {"S1": ["A1", ...]}, "parties": {"A1": {"inputs": 1, "outputs": 2}}}.
    /// Parties are ordered by first appearance in the "parties" object (document order).
    static Network from_json(const nlohmann::ordered_json &doc);
    static Network from_file(const std::string &path);
    nlohmann::ordered_json to_json() const;

    const std::vector<Party> &parties() const {
        return parties_;
    }
    const std::vector<Source> &sources() const {
        return sources_;
    }
    int num_parties() const {
        return static_cast<int>(parties_.size());
    }
    int num_sources() const {
        return static_cast<int>(sources_.size());
    }

    /// Sorted source indices feeding `party`.
    const std::vector<int> &sources_of(int party) const {
        return sources_of_.at(party);
    }
    bool feeds(int source, int party) const;
    int party_index(const std::string &id) const;
    int source_index(const std::string &id) const;

    bool operator==(const Network &other) const {
        return parties_ == other.parties_ && sources_ == other.sources_;
    }

   private:
    std::vector<Party> parties_;
    std::vector<Source> sources_;
    std::vector<std::vector<int>> sources_of_;

    void index();
};

/// Merges every source whose party set is contained in another source's party set into the
/// containing one. Equal party sets merge into the earlier-declared source. The set of
/// compatible distributions is unchanged because source dimensions are unconstrained.
Network absorb_dominated_sources(const Network &net);

/// Three sources S1->(A1,A2,A3), S2->(A2,A3,A4,A5), S3->(A4,A5,A6).
Network ghz6_network(int n_inputs = 1, int n_outputs = 2);

/// Four-source trident network before absorption: S1->(A1..A4), S2->(A2,A3,A4),
/// S3->(A3,A4,A5), S4->(A3..A6).
Network trident_network_raw(int n_inputs = 1, int n_outputs = 2);

/// Two-source trident network S1->(A1..A4), S2->(A3..A6).
Network trident_network(int n_inputs = 1, int n_outputs = 2);

}  // namespace netcert

#endif
