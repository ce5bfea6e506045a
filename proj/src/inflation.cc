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

#include "netcert/inflation.h"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace netcert {

namespace {

// Enumerates copy tuples for the sources feeding a party, lexicographically.
void enumerate_copies(const std::vector<int> &feeding, const std::vector<int> &copies, int num_sources,
                      std::vector<std::vector<int>> &out) {
    std::vector<int> cur(num_sources, -1);
    for (int s : feeding) {
        cur[s] = 0;
    }
    while (true) {
        out.push_back(cur);
        // Increment the last feeding source first (lexicographic with earlier sources major).
        int pos = static_cast<int>(feeding.size()) - 1;
        while (pos >= 0) {
            int s = feeding[pos];
            if (++cur[s] < copies[s]) {
                break;
            }
            cur[s] = 0;
            pos--;
        }
        if (pos < 0) {
            return;
        }
    }
}

}  // namespace

InflationScenario::InflationScenario(Network net, std::vector<int> copies)
    : net_(std::move(net)), copies_(std::move(copies)) {
    const int ns = net_.num_sources();
    if (static_cast<int>(copies_.size()) != ns) {
        throw std::invalid_argument("copy counts must be given for every source");
    }
    for (int c : copies_) {
        if (c < 1) {
            throw std::invalid_argument("inflation order must be at least 1");
        }
    }
    for (int p = 0; p < net_.num_parties(); p++) {
        const auto &party = net_.parties()[p];
        std::vector<std::vector<int>> tuples;
        enumerate_copies(net_.sources_of(p), copies_, ns, tuples);
        for (int x = 0; x < party.n_inputs; x++) {
            for (int a = 0; a + 1 < party.n_outputs; a++) {
                for (const auto &t : tuples) {
                    ops_.push_back(OperatorSymbol{p, x, a, t});
                }
            }
        }
    }
    if (ops_.size() > 65535) {
        throw std::invalid_argument("operator universe too large");
    }
    for (std::size_t i = 0; i < ops_.size(); i++) {
        index_.emplace(ops_[i], static_cast<OpId>(i));
    }

    const std::size_t n = ops_.size();
    commute_.assign(n * n, 0);
    orthogonal_.assign(n * n, 0);
    overlap_.assign(n * n, 0);
    for (std::size_t i = 0; i < n; i++) {
        for (std::size_t j = 0; j < n; j++) {
            const auto &a = ops_[i];
            const auto &b = ops_[j];
            bool shares = false;
            bool all_differ = true;
            for (int s = 0; s < ns; s++) {
                if (a.copies[s] < 0 || b.copies[s] < 0) {
                    continue;
                }
                if (a.copies[s] == b.copies[s]) {
                    shares = true;
                    all_differ = false;
                }
            }
            overlap_[i * n + j] = shares;
            if (a.party != b.party) {
                commute_[i * n + j] = 1;
            } else {
                commute_[i * n + j] = all_differ;
                orthogonal_[i * n + j] =
                    a.copies == b.copies && a.input == b.input && a.output != b.output;
            }
        }
    }

    // Copy-permutation group: direct product of one symmetric group per source.
    std::vector<std::vector<std::vector<int>>> per_source(ns);
    for (int s = 0; s < ns; s++) {
        std::vector<int> perm(copies_[s]);
        std::iota(perm.begin(), perm.end(), 0);
        do {
            per_source[s].push_back(perm);
        } while (std::next_permutation(perm.begin(), perm.end()));
    }
    std::vector<int> choice(ns, 0);
    while (true) {
        std::vector<OpId> action(n);
        for (std::size_t i = 0; i < n; i++) {
            OperatorSymbol img = ops_[i];
            for (int s = 0; s < ns; s++) {
                if (img.copies[s] >= 0) {
                    img.copies[s] = per_source[s][choice[s]][img.copies[s]];
                }
            }
            action[i] = index_.at(img);
        }
        group_action_.push_back(std::move(action));
        int pos = ns - 1;
        while (pos >= 0) {
            if (++choice[pos] < static_cast<int>(per_source[pos].size())) {
                break;
            }
            choice[pos] = 0;
            pos--;
        }
        if (pos < 0) {
            break;
        }
    }
}

OpId InflationScenario::id_of(const OperatorSymbol &sym) const {
    auto it = index_.find(sym);
    if (it == index_.end()) {
        throw std::out_of_range("operator symbol is not part of this inflation scenario");
    }
    return it->second;
}

std::string InflationScenario::label(OpId id) const {
    const auto &o = ops_.at(id);
    std::string s = net_.parties()[o.party].id + "^{";
    bool first = true;
    for (int c : o.copies) {
        if (c < 0) {
            continue;
        }
        if (!first) {
            s += ",";
        }
        s += std::to_string(c + 1);
        first = false;
    }
    s += "}|x=" + std::to_string(o.input) + ",a=" + std::to_string(o.output);
    return s;
}

InflationScenario inflate(const Network &net, int k) {
    if (k < 1) {
        throw std::invalid_argument("inflation order must be at least 1");
    }
    return InflationScenario(net, std::vector<int>(net.num_sources(), k));
}

InflationScenario inflate(const Network &net, const std::vector<int> &copies) {
    return InflationScenario(net, copies);
}

long expected_operator_count(const Network &net, const std::vector<int> &copies) {
    long total = 0;
    for (int p = 0; p < net.num_parties(); p++) {
        long combos = 1;
        for (int s : net.sources_of(p)) {
            combos *= copies[s];
        }
        const auto &party = net.parties()[p];
        total += static_cast<long>(party.n_inputs) * (party.n_outputs - 1) * combos;
    }
    return total;
}

}  // namespace netcert
