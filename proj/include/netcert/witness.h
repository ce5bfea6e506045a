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

#ifndef NETCERT_WITNESS_H
#define NETCERT_WITNESS_H

#include <string>
#include <vector>

#include "json.hpp"
#include "netcert/distribution.h"
#include "netcert/sdp.h"

namespace netcert {

struct WitnessError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct WitnessTerm {
    double coefficient = 0.0;
    /// Sorted; empty for the constant term.
    std::vector<MarginalSpec> factors;
};

/// Polynomial in marginals that is nonnegative on every distribution compatible with the
/// network it was derived for.
struct Witness {
    std::string name;
    std::vector<WitnessTerm> terms;
    nlohmann::ordered_json metadata = nlohmann::ordered_json::object();
    std::string normalization = "none";

    double evaluate(const Distribution &p) const;
    /// Scales by a positive factor so the largest |coefficient| of degree-1 terms is 1.
    Witness normalized() const;
    /// Throws WitnessError on duplicate factor multisets or non-finite coefficients.
    void validate() const;
    int max_degree() const;
};

/// Builds the separating functional of an infeasible report. Compatible distributions
/// evaluate >= 0. Throws WitnessError when the report is not infeasible or has no dual.
Witness extract(const SolveReport &report, const InflationModel &model);

/// Trident two-input witness for the basis pair "XY", "XZ" or "YZ". `relabel[p][l]` is the
/// input index of party p for printed label l.
Witness trident_fixture(const std::string &pair, const std::vector<std::vector<int>> &relabel);

/// W_1 on the two-input GHZ setup and the three trident two-input witnesses.
std::vector<Witness> builtin_fixtures();
Witness builtin_fixture(const std::string &name);

inline constexpr int kWitnessSchemaVersion = 1;
nlohmann::ordered_json serialize(const Witness &w);
Witness deserialize(const nlohmann::ordered_json &doc);
void save_witness(const Witness &w, const std::string &path);
Witness load_witness(const std::string &path);

struct WitnessMatrix {
    std::vector<std::string> row_labels;
    std::vector<std::string> col_labels;
    /// Row-major values[r][c] = witness r evaluated on distribution c.
    std::vector<std::vector<double>> values;
    std::vector<std::vector<char>> detected;
};

WitnessMatrix witness_matrix(const std::vector<Witness> &witnesses, const std::vector<std::string> &row_labels,
                             const std::vector<Distribution> &distributions,
                             const std::vector<std::string> &col_labels, double threshold = 1e-6);
std::string to_csv(const WitnessMatrix &m);

}  // namespace netcert

#endif
