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

#include "netcert/monomial.h"

#include <algorithm>
#include <numeric>
#include <regex>
#include <set>
#include <stdexcept>

namespace netcert {

std::strong_ordering Monomial::operator<=>(const Monomial &other) const {
    if (is_zero != other.is_zero) {
        return is_zero ? std::strong_ordering::less : std::strong_ordering::greater;
    }
    if (factors.size() != other.factors.size()) {
        return factors.size() <=> other.factors.size();
    }
    return std::lexicographical_compare_three_way(factors.begin(), factors.end(), other.factors.begin(),
                                                  other.factors.end());
}

namespace {

// Lexicographically smallest representative of the commutation class of `w`.
std::vector<OpId> lex_normal_form(const std::vector<OpId> &w, const InflationScenario &sc) {
    const std::size_t n = w.size();
    std::vector<OpId> out;
    out.reserve(n);
    std::vector<char> used(n, 0);
    for (std::size_t step = 0; step < n; step++) {
        std::size_t best = n;
        for (std::size_t i = 0; i < n; i++) {
            if (used[i]) {
                continue;
            }
            bool movable = true;
            for (std::size_t j = 0; j < i && movable; j++) {
                movable = used[j] || sc.commutes(w[j], w[i]);
            }
            if (movable && (best == n || w[i] < w[best])) {
                best = i;
            }
        }
        used[best] = 1;
        out.push_back(w[best]);
    }
    return out;
}

}  // namespace

Monomial reduce(std::vector<OpId> word, const InflationScenario &sc) {
    while (true) {
        word = lex_normal_form(word, sc);
        bool changed = false;
        for (std::size_t j = 1; j < word.size() && !changed; j++) {
            for (std::size_t i = j; i-- > 0;) {
                if (word[i] == word[j] || sc.orthogonal(word[i], word[j])) {
                    if (word[i] != word[j]) {
                        return Monomial::zero();
                    }
                    word.erase(word.begin() + static_cast<std::ptrdiff_t>(j));
                    changed = true;
                    break;
                }
                // Equal and orthogonal operators share commutation relations, so word[j] can reach
                // word[i] exactly when everything in between commutes with it.
                if (!sc.commutes(word[i], word[j])) {
                    break;
                }
            }
        }
        if (!changed) {
            return Monomial{std::move(word), false};
        }
    }
}

Monomial adjoint(const Monomial &m, const InflationScenario &sc) {
    if (m.is_zero) {
        return m;
    }
    std::vector<OpId> rev(m.factors.rbegin(), m.factors.rend());
    return reduce(std::move(rev), sc);
}

Monomial canonicalize(const Monomial &m, const InflationScenario &sc) {
    if (m.is_zero) {
        return m;
    }
    Monomial base = reduce(m.factors, sc);
    if (base.is_zero || base.factors.empty()) {
        return base;
    }
    Monomial best = base;
    std::vector<OpId> img(base.factors.size());
    for (int g = 0; g < sc.group_order(); g++) {
        for (std::size_t i = 0; i < img.size(); i++) {
            img[i] = sc.act(g, base.factors[i]);
        }
        Monomial cand = reduce(img, sc);
        if (cand < best) {
            best = cand;
        }
        std::vector<OpId> rev(img.rbegin(), img.rend());
        cand = reduce(std::move(rev), sc);
        if (cand < best) {
            best = cand;
        }
    }
    return best;
}

std::vector<Monomial> factor_components(const Monomial &m, const InflationScenario &sc) {
    const std::size_t n = m.factors.size();
    std::vector<std::size_t> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](std::size_t x) {
        while (parent[x] != x) {
            x = parent[x] = parent[parent[x]];
        }
        return x;
    };
    for (std::size_t i = 0; i < n; i++) {
        for (std::size_t j = i + 1; j < n; j++) {
            if (sc.overlaps(m.factors[i], m.factors[j])) {
                parent[find(j)] = find(i);
            }
        }
    }
    std::vector<Monomial> comps;
    std::vector<std::size_t> root_of_comp;
    for (std::size_t i = 0; i < n; i++) {
        std::size_t r = find(i);
        auto it = std::find(root_of_comp.begin(), root_of_comp.end(), r);
        if (it == root_of_comp.end()) {
            root_of_comp.push_back(r);
            comps.push_back(Monomial{{m.factors[i]}, false});
        } else {
            comps[static_cast<std::size_t>(it - root_of_comp.begin())].factors.push_back(m.factors[i]);
        }
    }
    return comps;
}

double KnownValue::value(const Distribution &p) const {
    double v = 1.0;
    for (const auto &f : factors) {
        v *= p.marginal(f);
    }
    return v;
}

std::optional<KnownValue> identify_known(const Monomial &m, const InflationScenario &sc) {
    if (m.is_zero) {
        return std::nullopt;
    }
    KnownValue kv;
    const int ns = sc.network().num_sources();
    for (const auto &comp : factor_components(m, sc)) {
        std::vector<int> copy_of(ns, -1);
        std::set<int> parties;
        std::vector<std::pair<int, std::pair<int, int>>> events;
        for (OpId id : comp.factors) {
            const auto &o = sc.op(id);
            if (!parties.insert(o.party).second) {
                return std::nullopt;
            }
            for (int s = 0; s < ns; s++) {
                if (o.copies[s] < 0) {
                    continue;
                }
                if (copy_of[s] >= 0 && copy_of[s] != o.copies[s]) {
                    return std::nullopt;
                }
                copy_of[s] = o.copies[s];
            }
            events.push_back({o.party, {o.output, o.input}});
        }
        std::sort(events.begin(), events.end());
        MarginalSpec spec;
        for (const auto &e : events) {
            spec.parties.push_back(e.first);
            spec.outputs.push_back(e.second.first);
            spec.inputs.push_back(e.second.second);
        }
        kv.factors.push_back(std::move(spec));
    }
    std::sort(kv.factors.begin(), kv.factors.end());
    return kv;
}

std::string to_string(const Monomial &m, const InflationScenario &sc) {
    if (m.is_zero) {
        return "0";
    }
    if (m.factors.empty()) {
        return "1";
    }
    std::string s;
    for (std::size_t i = 0; i < m.factors.size(); i++) {
        if (i) {
            s += " * ";
        }
        s += sc.label(m.factors[i]);
    }
    return s;
}

GeneratingSet generating_set(const InflationScenario &sc, const std::string &level) {
    GeneratingSet gs{level, {Monomial::identity()}};
    const int n = sc.num_operators();
    auto party = [&](int i) { return sc.op(static_cast<OpId>(i)).party; };
    int max_distinct = 0;
    if (level == "1") {
        max_distinct = 1;
    } else if (level == "1+AB") {
        max_distinct = 2;
    } else if (level == "1+AB+ABC") {
        max_distinct = 3;
    }
    if (max_distinct > 0) {
        for (int i = 0; i < n; i++) {
            gs.monomials.push_back(Monomial{{static_cast<OpId>(i)}, false});
        }
        if (max_distinct >= 2) {
            for (int i = 0; i < n; i++) {
                for (int j = i + 1; j < n; j++) {
                    if (party(i) != party(j)) {
                        gs.monomials.push_back(reduce({static_cast<OpId>(i), static_cast<OpId>(j)}, sc));
                    }
                }
            }
        }
        if (max_distinct >= 3) {
            for (int i = 0; i < n; i++) {
                for (int j = i + 1; j < n; j++) {
                    if (party(i) == party(j)) {
                        continue;
                    }
                    for (int k = j + 1; k < n; k++) {
                        if (party(k) != party(i) && party(k) != party(j)) {
                            gs.monomials.push_back(
                                reduce({static_cast<OpId>(i), static_cast<OpId>(j), static_cast<OpId>(k)}, sc));
                        }
                    }
                }
            }
        }
        return gs;
    }

    static const std::regex npa_re(R"(npa\((\d+)\))");
    std::smatch match;
    if (!std::regex_match(level, match, npa_re)) {
        throw std::invalid_argument("unsupported hierarchy level '" + level + "'");
    }
    const int depth = std::stoi(match[1]);
    if (depth < 1 || depth > 3) {
        throw std::invalid_argument("npa(n) is supported for 1 <= n <= 3");
    }
    std::set<Monomial> seen{Monomial::identity()};
    std::vector<OpId> word;
    for (int len = 1; len <= depth; len++) {
        word.assign(len, 0);
        while (true) {
            Monomial m = reduce(word, sc);
            if (!m.is_zero && seen.insert(m).second) {
                gs.monomials.push_back(m);
            }
            int pos = len - 1;
            while (pos >= 0 && ++word[pos] == n) {
                word[pos] = 0;
                pos--;
            }
            if (pos < 0) {
                break;
            }
        }
    }
    return gs;
}

}  // namespace netcert
