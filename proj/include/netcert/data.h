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

#ifndef NETCERT_DATA_H
#define NETCERT_DATA_H

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "json.hpp"
#include "netcert/distribution.h"
#include "netcert/witness.h"

namespace netcert {

struct DataError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Event counts of one measurement setting; outcome keys are bit strings in party order.
struct CountsSetting {
    std::string bases;
    std::map<std::string, std::uint64_t> counts;

    std::uint64_t total() const;
};

struct CountsTable {
    std::vector<CountsSetting> settings;

    int num_parties() const {
        return settings.empty() ? 0 : static_cast<int>(settings.front().bases.size());
    }
    std::uint64_t total() const;
    const CountsSetting *find(const std::string &bases) const;
};

/// Schema {"settings": [{"bases": "ZZZZZZ", "counts": {"000000": 123}}]}.
CountsTable parse_counts(const nlohmann::ordered_json &doc);
CountsTable load_counts(const std::string &path);
nlohmann::ordered_json counts_to_json(const CountsTable &t);
void save_counts(const CountsTable &t, const std::string &path);

/// Single-setting normalized frequencies. Throws DataError on a zero total.
Distribution setting_distribution(const CountsSetting &s);

/// Multi-input distribution: party p's input x is the basis alphabets[p][x]. Every basis
/// combination must be present.
Distribution to_distribution(const CountsTable &t, const std::vector<std::string> &alphabets);

/// Basis string of input tuple `inputs` under `alphabets`.
std::string bases_for_inputs(const std::vector<std::string> &alphabets, const std::vector<int> &inputs);

/// Multinomial sample of n_events per setting. Binary outcomes only; `alphabets` labels the
/// inputs of `p` as in to_distribution.
CountsTable sample_synthetic(const Distribution &p, const std::vector<std::string> &alphabets,
                             std::uint64_t n_events, std::uint64_t seed);

/// Seed of repetition r: SplitMix64 applied to seed + r.
std::uint64_t repetition_seed(std::uint64_t seed, std::uint64_t r);

struct BootstrapResult {
    double fraction = 1.0;
    int repetitions = 0;
    double mean = 0.0;
    double std = 0.0;
    double band_low = 0.0;
    double band_high = 0.0;
    std::uint64_t events_per_repetition = 0;
    std::vector<double> values;
};

/// Repeated subsampling without replacement of ceil(fraction * total) events within each
/// setting, evaluating `w` on each subsample. Results do not depend on `threads`.
BootstrapResult bootstrap_witness(const CountsTable &t, const std::vector<std::string> &alphabets, const Witness &w,
                                  double fraction, int reps, std::uint64_t seed, int threads = 1);

std::string bootstrap_csv(const std::vector<BootstrapResult> &curve);

}  // namespace netcert

#endif
