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

#ifndef NETCERT_DISTRIBUTION_H
#define NETCERT_DISTRIBUTION_H

#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"

namespace netcert {

struct DistributionError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Outcome-`outputs` event of the parties in `parties` under measurement settings `inputs`.
/// `parties` is sorted ascending and nonempty; the three vectors are aligned.
struct MarginalSpec {
    std::vector<int> parties;
    std::vector<int> outputs;
    std::vector<int> inputs;

    bool operator==(const MarginalSpec &) const = default;
    auto operator<=>(const MarginalSpec &) const = default;
};

/// Dense conditional probability table p(a_1..a_n | x_1..x_n).
///
/// Flat index = input_index * num_output_tuples() + output_index, where both tuple indices are
/// little-endian in party order (party 0 varies fastest).
class Distribution {
   public:
    Distribution() = default;
    Distribution(std::vector<int> n_inputs, std::vector<int> n_outputs);
    Distribution(std::vector<int> n_inputs, std::vector<int> n_outputs, std::vector<double> table);

    int num_parties() const {
        return static_cast<int>(n_outputs_.size());
    }
    const std::vector<int> &n_inputs() const {
        return n_inputs_;
    }
    const std::vector<int> &n_outputs() const {
        return n_outputs_;
    }
    std::size_t num_output_tuples() const {
        return n_out_tuples_;
    }
    std::size_t num_input_tuples() const {
        return n_in_tuples_;
    }
    const std::vector<double> &table() const {
        return table_;
    }

    double &at(std::size_t output_index, std::size_t input_index) {
        return table_[input_index * n_out_tuples_ + output_index];
    }
    double at(std::size_t output_index, std::size_t input_index) const {
        return table_[input_index * n_out_tuples_ + output_index];
    }

    std::size_t encode_outputs(std::span<const int> outputs) const;
    std::size_t encode_inputs(std::span<const int> inputs) const;
    std::vector<int> decode_outputs(std::size_t index) const;
    std::vector<int> decode_inputs(std::size_t index) const;

    double prob(std::span<const int> outputs, std::span<const int> inputs) const;

    /// Marginal probability of `m`. Inputs of the parties outside `m` are averaged uniformly, which
    /// coincides with any fixed choice for no-signaling tables and pools data for empirical ones.
    double marginal(const MarginalSpec &m) const;

    /// Throws DistributionError on negative entries, NaNs, or rows not summing to one.
    void validate(double tol = 1e-9) const;
    /// Largest deviation between single-party-set marginals under different remote inputs.
    double max_signaling() const;

    bool same_cardinalities(const Distribution &other) const {
        return n_inputs_ == other.n_inputs_ && n_outputs_ == other.n_outputs_;
    }

    nlohmann::ordered_json to_json() const;
    static Distribution from_json(const nlohmann::ordered_json &doc);

   private:
    std::vector<int> n_inputs_;
    std::vector<int> n_outputs_;
    std::size_t n_out_tuples_ = 1;
    std::size_t n_in_tuples_ = 1;
    std::vector<double> table_;
};

/// Uniform distribution over all outcomes for every setting.
Distribution uniform_distribution(std::vector<int> n_inputs, std::vector<int> n_outputs);

/// Deterministic distribution with every party answering `output` regardless of input.
Distribution deterministic_distribution(std::vector<int> n_inputs, std::vector<int> n_outputs, int output = 0);

}  // namespace netcert

#endif
