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

#include "netcert/moment_matrix.h"

#include <algorithm>
#include <limits>
#include <unordered_map>

namespace netcert {

namespace {

struct WordHash {
    std::size_t operator()(const std::vector<OpId> &w) const {
        std::size_t h = 1469598103934665603ull;
        for (OpId x : w) {
            h ^= x + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
        }
        return h;
    }
};

nlohmann::ordered_json marginal_json(const MarginalSpec &m, const Network &net) {
    nlohmann::ordered_json j;
    auto names = nlohmann::ordered_json::array();
    for (int p : m.parties) {
        names.push_back(net.parties()[p].id);
    }
    j["parties"] = names;
    j["outputs"] = m.outputs;
    j["inputs"] = m.inputs;
    return j;
}

// Expectations factorize over components acting on disjoint source copies, so each component
// is canonicalized on its own. Components are sorted and separated by a sentinel.
std::vector<OpId> variable_key(const Monomial &c, const InflationScenario &sc) {
    auto comps = factor_components(c, sc);
    if (comps.size() < 2) {
        return c.factors;
    }
    for (auto &comp : comps) {
        comp = canonicalize(comp, sc);
    }
    std::sort(comps.begin(), comps.end());
    std::vector<OpId> key;
    for (const auto &comp : comps) {
        if (!key.empty()) {
            key.push_back(std::numeric_limits<OpId>::max());
        }
        key.insert(key.end(), comp.factors.begin(), comp.factors.end());
    }
    return key;
}

}  // namespace

int MomentMatrix::num_known() const {
    int k = 0;
    for (const auto &v : known) {
        k += v.has_value();
    }
    return k;
}

MomentMatrix build_moment_matrix(const GeneratingSet &gs, const InflationScenario &sc) {
    MomentMatrix mm;
    mm.size = static_cast<int>(gs.monomials.size());
    mm.cells.assign(static_cast<std::size_t>(mm.size) * mm.size, 0);
    mm.variables = {Monomial::zero(), Monomial::identity()};
    mm.known = {std::nullopt, KnownValue{}};

    std::unordered_map<std::vector<OpId>, int, WordHash> ids;
    ids.emplace(std::vector<OpId>{}, MomentMatrix::kIdentityId);

    std::vector<OpId> word;
    for (int i = 0; i < mm.size; i++) {
        const auto &left = gs.monomials[i].factors;
        for (int j = i; j < mm.size; j++) {
            const auto &right = gs.monomials[j].factors;
            word.assign(left.rbegin(), left.rend());
            word.insert(word.end(), right.begin(), right.end());
            Monomial c = canonicalize(Monomial{word, false}, sc);
            int id = MomentMatrix::kZeroId;
            if (!c.is_zero) {
                auto [it, inserted] = ids.emplace(variable_key(c, sc), mm.num_variables());
                if (inserted) {
                    mm.known.push_back(identify_known(c, sc));
                    mm.variables.push_back(std::move(c));
                }
                id = it->second;
            }
            mm.cells[static_cast<std::size_t>(i) * mm.size + j] = id;
            mm.cells[static_cast<std::size_t>(j) * mm.size + i] = id;
        }
    }
    return mm;
}

std::vector<std::vector<int>> row_symmetries(const GeneratingSet &gs, const InflationScenario &sc) {
    std::unordered_map<std::vector<OpId>, int, WordHash> index;
    for (std::size_t i = 0; i < gs.monomials.size(); i++) {
        index.emplace(reduce(gs.monomials[i].factors, sc).factors, static_cast<int>(i));
    }
    std::vector<std::vector<int>> out;
    for (int s = 0; s < sc.network().num_sources(); s++) {
        if (sc.copies()[s] != 2) {
            continue;
        }
        std::vector<OpId> swap(sc.num_operators());
        for (int o = 0; o < sc.num_operators(); o++) {
            OperatorSymbol sym = sc.op(static_cast<OpId>(o));
            if (sym.copies[s] >= 0) {
                sym.copies[s] = 1 - sym.copies[s];
            }
            swap[o] = sc.id_of(sym);
        }
        std::vector<int> perm(gs.monomials.size());
        bool closed = true;
        for (std::size_t i = 0; i < gs.monomials.size() && closed; i++) {
            std::vector<OpId> w;
            for (OpId x : gs.monomials[i].factors) {
                w.push_back(swap[x]);
            }
            auto it = index.find(reduce(std::move(w), sc).factors);
            if (it == index.end()) {
                closed = false;
            } else {
                perm[i] = it->second;
            }
        }
        if (closed) {
            out.push_back(std::move(perm));
        }
    }
    return out;
}

nlohmann::ordered_json MomentMatrix::to_json(const InflationScenario &sc) const {
    nlohmann::ordered_json doc;
    doc["size"] = size;
    auto vars = nlohmann::ordered_json::array();
    for (const auto &v : variables) {
        vars.push_back(to_string(v, sc));
    }
    doc["variables"] = vars;
    auto grid = nlohmann::ordered_json::array();
    for (int i = 0; i < size; i++) {
        std::vector<std::int32_t> row(cells.begin() + static_cast<std::ptrdiff_t>(i) * size,
                                      cells.begin() + static_cast<std::ptrdiff_t>(i + 1) * size);
        grid.push_back(row);
    }
    doc["cells"] = grid;
    auto table = nlohmann::ordered_json::array();
    table.push_back({{"id", kZeroId}, {"value", 0}, {"factors", nlohmann::ordered_json::array()}});
    for (int id = 1; id < num_variables(); id++) {
        if (!known[id]) {
            continue;
        }
        auto factors = nlohmann::ordered_json::array();
        for (const auto &f : known[id]->factors) {
            factors.push_back(marginal_json(f, sc.network()));
        }
        table.push_back({{"id", id}, {"monomial", to_string(variables[id], sc)}, {"factors", factors}});
    }
    doc["known"] = table;
    return doc;
}

}  // namespace netcert
