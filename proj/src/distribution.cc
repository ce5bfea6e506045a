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

#include "netcert/distribution.h"

#include <algorithm>
#include <cmath>

namespace netcert {

Distribution::Distribution(std::vector<int> n_inputs, std::vector<int> n_outputs)
    : n_inputs_(std::move(n_inputs)), n_outputs_(std::move(n_outputs)) {
    if (n_inputs_.size() != n_outputs_.size() || n_inputs_.empty()) {
        throw DistributionError("input and output cardinalities must describe the same nonempty party list");
    }
    for (std::size_t i = 0; i < n_inputs_.size(); i++) {
        if (n_inputs_[i] < 1 || n_outputs_[i] < 1) {
            throw DistributionError("cardinalities must be positive");
        }
        n_out_tuples_ *= n_outputs_[i];
        n_in_tuples_ *= n_inputs_[i];
    }
    table_.assign(n_out_tuples_ * n_in_tuples_, 0.0);
}

Distribution::Distribution(std::vector<int> n_inputs, std::vector<int> n_outputs, std::vector<double> table)
    : Distribution(std::move(n_inputs), std::move(n_outputs)) {
    if (table.size() != table_.size()) {
        throw DistributionError("probability table has " + std::to_string(table.size()) + " entries, expected " +
                                std::to_string(table_.size()));
    }
    table_ = std::move(table);
}

std::size_t Distribution::encode_outputs(std::span<const int> outputs) const {
    std::size_t idx = 0;
    std::size_t stride = 1;
    for (std::size_t i = 0; i < n_outputs_.size(); i++) {
        idx += stride * static_cast<std::size_t>(outputs[i]);
        stride *= n_outputs_[i];
    }
    return idx;
}

std::size_t Distribution::encode_inputs(std::span<const int> inputs) const {
    std::size_t idx = 0;
    std::size_t stride = 1;
    for (std::size_t i = 0; i < n_inputs_.size(); i++) {
        idx += stride * static_cast<std::size_t>(inputs[i]);
        stride *= n_inputs_[i];
    }
    return idx;
}

std::vector<int> Distribution::decode_outputs(std::size_t index) const {
    std::vector<int> out(n_outputs_.size());
    for (std::size_t i = 0; i < n_outputs_.size(); i++) {
        out[i] = static_cast<int>(index % n_outputs_[i]);
        index /= n_outputs_[i];
    }
    return out;
}

std::vector<int> Distribution::decode_inputs(std::size_t index) const {
    std::vector<int> in(n_inputs_.size());
    for (std::size_t i = 0; i < n_inputs_.size(); i++) {
        in[i] = static_cast<int>(index % n_inputs_[i]);
        index /= n_inputs_[i];
    }
    return in;
}

double Distribution::prob(std::span<const int> outputs, std::span<const int> inputs) const {
    return at(encode_outputs(outputs), encode_inputs(inputs));
}

double Distribution::marginal(const MarginalSpec &m) const {
    const int n = num_parties();
    if (m.parties.empty() || m.parties.size() != m.outputs.size() || m.parties.size() != m.inputs.size()) {
        throw DistributionError("malformed marginal specification");
    }
    std::vector<int> fixed_out(n, -1);
    std::vector<int> fixed_in(n, -1);
    for (std::size_t k = 0; k < m.parties.size(); k++) {
        int p = m.parties[k];
        if (p < 0 || p >= n) {
            throw DistributionError("marginal references party " + std::to_string(p) + " outside the distribution");
        }
        if (m.outputs[k] < 0 || m.outputs[k] >= n_outputs_[p] || m.inputs[k] < 0 || m.inputs[k] >= n_inputs_[p]) {
            throw DistributionError("marginal outcome or setting outside the cardinalities of party " +
                                    std::to_string(p));
        }
        fixed_out[p] = m.outputs[k];
        fixed_in[p] = m.inputs[k];
    }
    // Enumerate free parties' outputs and inputs by odometer over the strides.
    std::vector<std::size_t> out_stride(n), in_stride(n);
    std::size_t so = 1, si = 1;
    for (int i = 0; i < n; i++) {
        out_stride[i] = so;
        in_stride[i] = si;
        so *= n_outputs_[i];
        si *= n_inputs_[i];
    }
    std::size_t base_out = 0, base_in = 0;
    std::size_t free_in_count = 1;
    std::vector<int> free;
    for (int i = 0; i < n; i++) {
        if (fixed_out[i] >= 0) {
            base_out += out_stride[i] * fixed_out[i];
            base_in += in_stride[i] * fixed_in[i];
        } else {
            free.push_back(i);
            free_in_count *= n_inputs_[i];
        }
    }
    std::vector<int> fo(free.size(), 0), fi(free.size(), 0);
    double total = 0.0;
    while (true) {
        std::size_t oi = base_out, ii = base_in;
        for (std::size_t k = 0; k < free.size(); k++) {
            oi += out_stride[free[k]] * fo[k];
            ii += in_stride[free[k]] * fi[k];
        }
        total += table_[ii * n_out_tuples_ + oi];
        // Advance outputs then inputs.
        std::size_t k = 0;
        for (; k < free.size(); k++) {
            if (++fo[k] < n_outputs_[free[k]]) {
                break;
            }
            fo[k] = 0;
        }
        if (k < free.size()) {
            continue;
        }
        for (k = 0; k < free.size(); k++) {
            if (++fi[k] < n_inputs_[free[k]]) {
                break;
            }
            fi[k] = 0;
        }
        if (k == free.size()) {
            break;
        }
    }
    return total / static_cast<double>(free_in_count);
}

void Distribution::validate(double tol) const {
    for (std::size_t x = 0; x < n_in_tuples_; x++) {
        double sum = 0.0;
        for (std::size_t a = 0; a < n_out_tuples_; a++) {
            double v = at(a, x);
            if (std::isnan(v)) {
                throw DistributionError("probability table contains NaN");
            }
            if (v < -tol) {
                throw DistributionError("probability table has a negative entry");
            }
            sum += v;
        }
        if (std::abs(sum - 1.0) > tol) {
            throw DistributionError("setting " + std::to_string(x) + " sums to " + std::to_string(sum));
        }
    }
}

double Distribution::max_signaling() const {
    // For each party, compare the marginal of all other parties across that party's inputs.
    double worst = 0.0;
    const int n = num_parties();
    for (int p = 0; p < n; p++) {
        if (n_inputs_[p] < 2) {
            continue;
        }
        for (std::size_t x = 0; x < n_in_tuples_; x++) {
            auto in = decode_inputs(x);
            if (in[p] != 0) {
                continue;
            }
            for (int alt = 1; alt < n_inputs_[p]; alt++) {
                auto in2 = in;
                in2[p] = alt;
                std::size_t x2 = encode_inputs(in2);
                // Sum over party p's output for each assignment of the others.
                for (std::size_t a = 0; a < n_out_tuples_; a++) {
                    auto out = decode_outputs(a);
                    if (out[p] != 0) {
                        continue;
                    }
                    double s1 = 0.0, s2 = 0.0;
                    for (int b = 0; b < n_outputs_[p]; b++) {
                        out[p] = b;
                        std::size_t ai = encode_outputs(out);
                        s1 += at(ai, x);
                        s2 += at(ai, x2);
                    }
                    worst = std::max(worst, std::abs(s1 - s2));
                }
            }
        }
    }
    return worst;
}

nlohmann::ordered_json Distribution::to_json() const {
    nlohmann::ordered_json doc;
    doc["n_inputs"] = n_inputs_;
    doc["n_outputs"] = n_outputs_;
    doc["index_order"] = "flat = input_index * num_output_tuples + output_index; tuples little-endian in party order";
    doc["probabilities"] = table_;
    return doc;
}

Distribution Distribution::from_json(const nlohmann::ordered_json &doc) {
    try {
        return Distribution(doc.at("n_inputs").get<std::vector<int>>(), doc.at("n_outputs").get<std::vector<int>>(),
                            doc.at("probabilities").get<std::vector<double>>());
    } catch (const nlohmann::json::exception &e) {
        throw DistributionError(std::string("malformed distribution JSON: ") + e.what());
    }
}

Distribution uniform_distribution(std::vector<int> n_inputs, std::vector<int> n_outputs) {
    Distribution d(std::move(n_inputs), std::move(n_outputs));
    const double v = 1.0 / static_cast<double>(d.num_output_tuples());
    for (std::size_t x = 0; x < d.num_input_tuples(); x++) {
        for (std::size_t a = 0; a < d.num_output_tuples(); a++) {
            d.at(a, x) = v;
        }
    }
    return d;
}

Distribution deterministic_distribution(std::vector<int> n_inputs, std::vector<int> n_outputs, int output) {
    Distribution d(std::move(n_inputs), std::move(n_outputs));
    std::vector<int> out(d.num_parties(), output);
    const std::size_t a = d.encode_outputs(out);
    for (std::size_t x = 0; x < d.num_input_tuples(); x++) {
        d.at(a, x) = 1.0;
    }
    return d;
}

}  // namespace netcert
