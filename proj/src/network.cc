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

#include "netcert/network.h"

#include <algorithm>
#include <fstream>
#include <set>

namespace netcert {

void Network::index() {
    sources_of_.assign(parties_.size(), {});
    for (int s = 0; s < num_sources(); s++) {
        for (int p : sources_[s].parties) {
            sources_of_[p].push_back(s);
        }
    }
}

Network Network::build(const std::vector<SourceDecl> &sources, const std::vector<Party> &parties) {
    Network net;
    std::set<std::string> seen;
    for (const auto &p : parties) {
        if (p.id.empty()) {
            throw NetworkError("party id must be nonempty");
        }
        if (!seen.insert(p.id).second) {
            throw NetworkError("duplicate id '" + p.id + "'");
        }
        if (p.n_inputs < 1) {
            throw NetworkError("party '" + p.id + "' needs at least one input");
        }
        if (p.n_outputs < 2) {
            throw NetworkError("party '" + p.id + "' needs at least two outputs");
        }
        net.parties_.push_back(p);
    }
    for (const auto &s : sources) {
        if (s.id.empty()) {
            throw NetworkError("source id must be nonempty");
        }
        if (!seen.insert(s.id).second) {
            throw NetworkError("duplicate id '" + s.id + "'");
        }
        if (s.parties.empty()) {
            throw NetworkError("source '" + s.id + "' feeds no party");
        }
        Source src{s.id, {}};
        for (const auto &name : s.parties) {
            int idx = net.party_index(name);
            if (idx < 0) {
                throw NetworkError("source '" + s.id + "' references unknown party '" + name + "'");
            }
            src.parties.push_back(idx);
        }
        std::sort(src.parties.begin(), src.parties.end());
        if (std::adjacent_find(src.parties.begin(), src.parties.end()) != src.parties.end()) {
            throw NetworkError("source '" + s.id + "' lists a party twice");
        }
        net.sources_.push_back(std::move(src));
    }
    net.index();
    for (int p = 0; p < net.num_parties(); p++) {
        if (net.sources_of_[p].empty()) {
            throw NetworkError("party '" + net.parties_[p].id + "' is not fed by any source");
        }
    }
    return net;
}

bool Network::feeds(int source, int party) const {
    const auto &v = sources_.at(source).parties;
    return std::binary_search(v.begin(), v.end(), party);
}

int Network::party_index(const std::string &id) const {
    for (int i = 0; i < num_parties(); i++) {
        if (parties_[i].id == id) {
            return i;
        }
    }
    return -1;
}

int Network::source_index(const std::string &id) const {
    for (int i = 0; i < num_sources(); i++) {
        if (sources_[i].id == id) {
            return i;
        }
    }
    return -1;
}

namespace {

void reject_unknown_keys(const nlohmann::ordered_json &obj, std::initializer_list<const char *> allowed,
                         const std::string &where) {
    for (const auto &item : obj.items()) {
        bool ok = false;
        for (const char *k : allowed) {
            ok |= item.key() == k;
        }
        if (!ok) {
            throw NetworkError("unknown key '" + item.key() + "' in " + where);
        }
    }
}

}  // namespace

Network Network::from_json(const nlohmann::ordered_json &doc) {
    if (!doc.is_object()) {
        throw NetworkError("network description must be a JSON object");
    }
    reject_unknown_keys(doc, {"sources", "parties"}, "network description");
    if (!doc.contains("sources") || !doc.contains("parties")) {
        throw NetworkError("network description needs both 'sources' and 'parties'");
    }
    const auto &jp = doc["parties"];
    const auto &js = doc["sources"];
    if (!jp.is_object() || !js.is_object()) {
        throw NetworkError("'sources' and 'parties' must be objects");
    }
    std::vector<Party> parties;
    for (const auto &item : jp.items()) {
        const auto &v = item.value();
        if (!v.is_object()) {
            throw NetworkError("party '" + item.key() + "' must be an object");
        }
        reject_unknown_keys(v, {"inputs", "outputs"}, "party '" + item.key() + "'");
        Party p{item.key(), 1, 2};
        if (v.contains("inputs")) {
            if (!v["inputs"].is_number_integer()) {
                throw NetworkError("party '" + item.key() + "': 'inputs' must be an integer");
            }
            p.n_inputs = v["inputs"].get<int>();
        }
        if (v.contains("outputs")) {
            if (!v["outputs"].is_number_integer()) {
                throw NetworkError("party '" + item.key() + "': 'outputs' must be an integer");
            }
            p.n_outputs = v["outputs"].get<int>();
        }
        parties.push_back(p);
    }
    std::vector<SourceDecl> sources;
    for (const auto &item : js.items()) {
        if (!item.value().is_array()) {
            throw NetworkError("source '" + item.key() + "' must list party ids");
        }
        SourceDecl d{item.key(), {}};
        for (const auto &name : item.value()) {
            if (!name.is_string()) {
                throw NetworkError("source '" + item.key() + "' has a non-string party reference");
            }
            d.parties.push_back(name.get<std::string>());
        }
        sources.push_back(std::move(d));
    }
    return build(sources, parties);
}

Network Network::from_file(const std::string &path) {
    std::ifstream in(path);
    if (!in) {
        throw NetworkError("cannot open network file '" + path + "'");
    }
    nlohmann::ordered_json doc;
    try {
        doc = nlohmann::ordered_json::parse(in);
    } catch (const nlohmann::json::parse_error &e) {
        throw NetworkError("network file '" + path + "' is not valid JSON: " + e.what());
    }
    return from_json(doc);
}

nlohmann::ordered_json Network::to_json() const {
    nlohmann::ordered_json doc;
    doc["sources"] = nlohmann::ordered_json::object();
    for (const auto &s : sources_) {
        auto arr = nlohmann::ordered_json::array();
        for (int p : s.parties) {
            arr.push_back(parties_[p].id);
        }
        doc["sources"][s.id] = arr;
    }
    doc["parties"] = nlohmann::ordered_json::object();
    for (const auto &p : parties_) {
        doc["parties"][p.id] = {{"inputs", p.n_inputs}, {"outputs", p.n_outputs}};
    }
    return doc;
}

Network absorb_dominated_sources(const Network &net) {
    const auto &src = net.sources();
    std::vector<bool> removed(src.size(), false);
    for (std::size_t s = 0; s < src.size(); s++) {
        for (std::size_t t = 0; t < src.size() && !removed[s]; t++) {
            if (s == t || removed[t]) {
                continue;
            }
            const auto &a = src[s].parties;
            const auto &b = src[t].parties;
            bool subset = std::includes(b.begin(), b.end(), a.begin(), a.end());
            // Identical sets: the later source is absorbed into the earlier one.
            if (subset && (a.size() < b.size() || t < s)) {
                removed[s] = true;
            }
        }
    }
    std::vector<SourceDecl> kept;
    for (std::size_t s = 0; s < src.size(); s++) {
        if (removed[s]) {
            continue;
        }
        SourceDecl d{src[s].id, {}};
        for (int p : src[s].parties) {
            d.parties.push_back(net.parties()[p].id);
        }
        kept.push_back(std::move(d));
    }
    return Network::build(kept, net.parties());
}

namespace {

std::vector<Party> six_parties(int n_inputs, int n_outputs) {
    std::vector<Party> parties;
    for (int i = 1; i <= 6; i++) {
        parties.push_back({"A" + std::to_string(i), n_inputs, n_outputs});
    }
    return parties;
}

}  // namespace

Network ghz6_network(int n_inputs, int n_outputs) {
    return Network::build(
        {
            {"S1", {"A1", "A2", "A3"}},
            {"S2", {"A2", "A3", "A4", "A5"}},
            {"S3", {"A4", "A5", "A6"}},
        },
        six_parties(n_inputs, n_outputs));
}

Network trident_network_raw(int n_inputs, int n_outputs) {
    return Network::build(
        {
            {"S1", {"A1", "A2", "A3", "A4"}},
            {"S2", {"A2", "A3", "A4"}},
            {"S3", {"A3", "A4", "A5"}},
            {"S4", {"A3", "A4", "A5", "A6"}},
        },
        six_parties(n_inputs, n_outputs));
}

Network trident_network(int n_inputs, int n_outputs) {
    return Network::build(
        {
            {"S1", {"A1", "A2", "A3", "A4"}},
            {"S2", {"A3", "A4", "A5", "A6"}},
        },
        six_parties(n_inputs, n_outputs));
}

}  // namespace netcert
