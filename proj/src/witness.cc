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

#include "netcert/witness.h"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <map>
#include <sstream>

#include "netcert/io.h"

namespace netcert {

double Witness::evaluate(const Distribution &p) const {
    double total = 0.0;
    for (const auto &t : terms) {
        double v = t.coefficient;
        for (const auto &f : t.factors) {
            v *= p.marginal(f);
        }
        total += v;
    }
    return total;
}

int Witness::max_degree() const {
    int d = 0;
    for (const auto &t : terms) {
        d = std::max(d, static_cast<int>(t.factors.size()));
    }
    return d;
}

Witness Witness::normalized() const {
    double scale = 0.0;
    for (const auto &t : terms) {
        if (t.factors.size() == 1) {
            scale = std::max(scale, std::abs(t.coefficient));
        }
    }
    if (scale == 0.0) {
        for (const auto &t : terms) {
            scale = std::max(scale, std::abs(t.coefficient));
        }
    }
    Witness w = *this;
    if (scale > 0.0) {
        for (auto &t : w.terms) {
            t.coefficient /= scale;
        }
    }
    w.normalization = "max-degree1";
    return w;
}

void Witness::validate() const {
    std::map<std::vector<MarginalSpec>, int> seen;
    for (const auto &t : terms) {
        if (!std::isfinite(t.coefficient)) {
            throw WitnessError("non-finite witness coefficient");
        }
        for (const auto &f : t.factors) {
            if (f.parties.empty() || f.parties.size() != f.outputs.size() || f.parties.size() != f.inputs.size() ||
                !std::is_sorted(f.parties.begin(), f.parties.end()) ||
                std::adjacent_find(f.parties.begin(), f.parties.end()) != f.parties.end()) {
                throw WitnessError("malformed marginal in witness term");
            }
        }
        auto key = t.factors;
        std::sort(key.begin(), key.end());
        if (!seen.emplace(key, 0).second) {
            throw WitnessError("duplicate witness term");
        }
    }
}

Witness extract(const SolveReport &report, const InflationModel &model) {
    if (report.status != SolveStatus::Infeasible) {
        throw WitnessError("witness extraction needs an infeasible report, got " + status_name(report.status));
    }
    if (report.dual.empty()) {
        throw WitnessError("infeasible report carries no dual multipliers");
    }
    const auto &mm = model.moments();
    std::map<std::vector<MarginalSpec>, double> merged;
    for (const auto &[id, c] : report.dual) {
        if (id < 0 || id >= mm.num_variables() || !mm.known[id]) {
            throw WitnessError("dual multiplier attached to a moment without known value");
        }
        auto key = mm.known[id]->factors;
        std::sort(key.begin(), key.end());
        merged[key] += c;
    }
    Witness w;
    for (auto &[factors, c] : merged) {
        if (c != 0.0) {
            w.terms.push_back({c, factors});
        }
    }
    std::vector<std::string> parties;
    for (const auto &p : model.network().parties()) {
        parties.push_back(p.id);
    }
    w.metadata["network"] = model.network().to_json();
    w.metadata["parties"] = parties;
    w.metadata["inflation_order"] = model.order();
    w.metadata["level"] = model.level();
    w.metadata["certificate_value"] = report.certificate_value;
    return w;
}

namespace {

// Term spec like "AB:01*C:1": parties by letter, input labels by digit, outcome 0 throughout.
// `relabel[p]` maps party p's printed label to an input index.
Witness polynomial(const std::string &name, const std::vector<std::pair<double, std::string>> &spec,
                   const std::vector<std::vector<int>> &relabel) {
    std::map<std::vector<MarginalSpec>, double> acc;
    for (const auto &[coef, text] : spec) {
        std::vector<MarginalSpec> factors;
        std::stringstream ss(text);
        std::string item;
        while (std::getline(ss, item, '*')) {
            auto colon = item.find(':');
            MarginalSpec m;
            for (std::size_t k = 0; k < colon; k++) {
                int p = item[k] - 'A';
                m.parties.push_back(p);
                m.outputs.push_back(0);
                m.inputs.push_back(relabel[p][item[colon + 1 + k] - '0']);
            }
            factors.push_back(std::move(m));
        }
        std::sort(factors.begin(), factors.end());
        acc[factors] += coef;
    }
    Witness w;
    w.name = name;
    for (auto &[f, c] : acc) {
        w.terms.push_back({c, f});
    }
    w.metadata["parties"] = {"A", "B", "C", "D", "E", "F"};
    w.metadata["inflation_order"] = 2;
    return w;
}

Witness w1_fixture() {
    std::vector<std::pair<double, std::string>> s = {
        {1.0, "B:0"},       {1.0, "C:0"},       {1.0, "D:0"},       {1.0, "E:0"},       {0.474, "A:0"},
        {0.474, "F:0"},     {-0.886, "A:0*F:0"}, {-0.768, "AB:00"},  {-0.768, "AC:00"},  {-0.768, "DF:00"},
        {-0.768, "EF:00"},  {0.051, "A:0*B:0"}, {0.051, "A:0*C:0"}, {0.051, "D:0*F:0"}, {0.051, "E:0*F:0"},
        {-0.758, "BC:00"},  {-0.758, "DE:00"},  {-0.122, "B:0*C:0"}, {-0.122, "D:0*E:0"}, {-0.621, "BD:00"},
        {-0.621, "BE:00"},  {-0.621, "CD:00"},  {-0.621, "CE:00"},  {0.041, "C:0*D:0"}, {0.041, "C:0*E:0"},
        {0.041, "B:0*D:0"}, {0.041, "B:0*E:0"}, {0.717, "B:0*F:0"}, {0.717, "C:0*F:0"}, {0.717, "A:0*D:0"},
        {0.717, "A:0*E:0"}, {-0.031, "A:0*A:0"}, {-0.031, "F:0*F:0"}, {0.02, "B:0*B:0"}, {0.02, "C:0*C:0"},
        {0.02, "D:0*D:0"},  {0.02, "E:0*E:0"},
    };
    Witness w = polynomial("W1", s, std::vector<std::vector<int>>(6, {1, 0}));
    w.metadata["scenario"] = "ghz6";
    w.metadata["level"] = "1";
    w.metadata["inputs"] = "X,Z";
    return w;
}

// Trident witness with the single-output party `c` (C for XY, D for YZ).
Witness trident_xy_like(const std::string &name, char c, const std::vector<std::vector<int>> &inputs) {
    const double r2 = 1.0 / std::sqrt(2.0);
    const std::string C(1, c);
    auto pair = [&](char other, bool c_first) {
        std::string parties = c_first ? C + other : std::string(1, other) + C;
        std::string outs = c_first ? "10" : "01";
        return parties + ":" + outs;
    };
    std::vector<std::pair<double, std::string>> s = {
        {1.0, "AB:00*" + C + ":1"},
        {-1.0, std::string("AB") + C + ":001"},
        {1.0, C + ":1*EF:00"},
        {-1.0, C + "EF:100"},
        {r2, "AB:00*A:0"},
        {r2, "AB:00*B:0"},
        {-r2, "AB:00*AB:00"},
        {r2, "EF:00*E:0"},
        {r2, "EF:00*F:0"},
        {-r2, "EF:00*EF:00"},
        {0.5, pair('A', false)},
        {-0.5, "A:0*" + C + ":1"},
        {0.5, pair('B', false)},
        {-0.5, "B:0*" + C + ":1"},
        {0.5, pair('E', true)},
        {-0.5, C + ":1*E:0"},
        {0.5, pair('F', true)},
        {-0.5, C + ":1*F:0"},
        {r2 / 2, C + ":1"},
        {-r2 / 2, C + ":1*" + C + ":1"},
        {-r2 / 2, "AB:00"},
        {-r2 / 2, "A:0*B:0"},
        {-r2 / 2, "E:0*F:0"},
        {-r2 / 2, "EF:00"},
        {r2 / 4, "A:0"},
        {r2 / 4, "B:0"},
        {r2 / 4, "E:0"},
        {r2 / 4, "F:0"},
        {-r2 / 4, "A:0*A:0"},
        {-r2 / 4, "B:0*B:0"},
        {-r2 / 4, "E:0*E:0"},
        {-r2 / 4, "F:0*F:0"},
    };
    Witness w = polynomial(name, s, inputs);
    w.metadata["scenario"] = "trident";
    w.metadata["level"] = "1+AB";
    return w;
}

Witness trident_xz(const std::vector<std::vector<int>> &inputs) {
    const double a = 0.471, b = 0.236;
    std::vector<std::pair<double, std::string>> s = {
        {1.0, "AB:01*A:0"},    {1.0, "AB:01*B:1"},    {1.0, "EF:01*E:0"},    {1.0, "EF:01*F:1"},
        {-1.0, "AB:01*AB:01"}, {-1.0, "EF:01*EF:01"},

        {a, "AB:01*CD:10"},    {a, "AB:01*C:1"},      {a, "AB:01*D:0"},      {a, "EF:01*CD:10"},
        {a, "EF:01*C:1"},      {a, "EF:01*D:0"},      {-a, "ABCD:0110"},     {-a, "ABC:011"},
        {-a, "ABD:010"},       {-a, "CDEF:1001"},     {-a, "CEF:101"},       {-a, "DEF:001"},

        {-0.5, "AB:01"},       {-0.5, "A:0*B:1"},     {-0.5, "EF:01"},       {-0.5, "E:0*F:1"},

        {b, "ACD:010"},        {b, "AC:01"},          {b, "AD:00"},          {-b, "A:0*CD:10"},
        {-b, "A:0*C:1"},       {-b, "A:0*D:0"},       {b, "BCD:110"},        {b, "BC:11"},
        {b, "BD:10"},          {-b, "B:1*CD:10"},     {-b, "B:1*C:1"},       {-b, "B:1*D:0"},
        {b, "CDE:100"},        {b, "CE:10"},          {b, "DE:00"},          {-b, "CD:10*E:0"},
        {-b, "C:1*E:0"},       {-b, "D:0*E:0"},       {b, "CDF:101"},        {b, "CF:11"},
        {b, "DF:01"},          {-b, "CD:10*F:1"},     {-b, "C:1*F:1"},       {-b, "D:0*F:1"},

        {0.25, "A:0"},         {0.25, "B:1"},         {0.25, "E:0"},         {0.25, "F:1"},
        {-0.25, "A:0*A:0"},    {-0.25, "B:1*B:1"},    {-0.25, "E:0*E:0"},    {-0.25, "F:1*F:1"},

        {0.388, "CD:10"},

        {0.055, "C:1"},        {-0.055, "C:1*C:1"},   {0.055, "D:0"},        {-0.055, "D:0*D:0"},
        {-0.055, "CD:10*CD:10"},

        {-0.111, "CD:10*C:1"}, {-0.111, "CD:10*D:0"}, {-0.111, "C:1*D:0"},
    };
    Witness w = polynomial("W_XZ", s, inputs);
    w.metadata["scenario"] = "trident";
    w.metadata["level"] = "1+AB";
    w.metadata["inputs"] = "X,Z";
    return w;
}

}  // namespace

Witness trident_fixture(const std::string &pair, const std::vector<std::vector<int>> &inputs) {
    if (pair == "XY") {
        Witness w = trident_xy_like("W_XY", 'C', inputs);
        w.metadata["inputs"] = "X,Y";
        return w;
    }
    if (pair == "YZ") {
        Witness w = trident_xy_like("W_YZ", 'D', inputs);
        w.metadata["inputs"] = "Y,Z";
        return w;
    }
    if (pair == "XZ") {
        return trident_xz(inputs);
    }
    throw std::invalid_argument("unknown trident input pair " + pair);
}

std::vector<Witness> builtin_fixtures() {
    const std::vector<std::vector<int>> direct(6, {0, 1});
    return {w1_fixture(), trident_fixture("XY", direct), trident_fixture("XZ", direct), trident_fixture("YZ", direct)};
}

Witness builtin_fixture(const std::string &name) {
    for (auto &w : builtin_fixtures()) {
        if (w.name == name) {
            return w;
        }
    }
    throw std::invalid_argument("unknown fixture " + name);
}

namespace {

std::string exact_decimal(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

double parse_decimal(const std::string &s) {
    char *end = nullptr;
    double v = std::strtod(s.c_str(), &end);
    if (s.empty() || end != s.c_str() + s.size() || !std::isfinite(v)) {
        throw WitnessError("invalid coefficient '" + s + "'");
    }
    return v;
}

}  // namespace

nlohmann::ordered_json serialize(const Witness &w) {
    nlohmann::ordered_json doc;
    doc["schema"] = "netcert.witness";
    doc["version"] = kWitnessSchemaVersion;
    doc["name"] = w.name;
    doc["normalization"] = w.normalization;
    doc["metadata"] = w.metadata;
    auto terms = nlohmann::ordered_json::array();
    for (const auto &t : w.terms) {
        auto factors = nlohmann::ordered_json::array();
        for (const auto &f : t.factors) {
            factors.push_back({{"parties", f.parties}, {"outputs", f.outputs}, {"inputs", f.inputs}});
        }
        terms.push_back({{"coefficient", exact_decimal(t.coefficient)}, {"factors", factors}});
    }
    doc["terms"] = terms;
    return doc;
}

Witness deserialize(const nlohmann::ordered_json &doc) {
    try {
        if (!doc.is_object() || doc.value("schema", "") != "netcert.witness") {
            throw WitnessError("not a witness document");
        }
        if (!doc.contains("version") || doc["version"] != kWitnessSchemaVersion) {
            throw WitnessError("unsupported witness schema version");
        }
        for (auto it = doc.begin(); it != doc.end(); ++it) {
            static const std::vector<std::string> keys = {"schema", "version", "name", "normalization", "metadata",
                                                          "terms"};
            if (std::find(keys.begin(), keys.end(), it.key()) == keys.end()) {
                throw WitnessError("unknown key '" + it.key() + "'");
            }
        }
        Witness w;
        w.name = doc.value("name", "");
        w.normalization = doc.value("normalization", "none");
        if (doc.contains("metadata")) {
            w.metadata = doc["metadata"];
        }
        for (const auto &t : doc.at("terms")) {
            WitnessTerm term;
            term.coefficient = parse_decimal(t.at("coefficient").get<std::string>());
            for (const auto &f : t.at("factors")) {
                MarginalSpec m;
                m.parties = f.at("parties").get<std::vector<int>>();
                m.outputs = f.at("outputs").get<std::vector<int>>();
                m.inputs = f.at("inputs").get<std::vector<int>>();
                term.factors.push_back(std::move(m));
            }
            w.terms.push_back(std::move(term));
        }
        w.validate();
        return w;
    } catch (const nlohmann::json::exception &e) {
        throw WitnessError(std::string("malformed witness document: ") + e.what());
    }
}

void save_witness(const Witness &w, const std::string &path) {
    write_file_atomic(path, serialize(w).dump(2) + "\n");
}

Witness load_witness(const std::string &path) {
    return deserialize(read_json_file(path));
}

WitnessMatrix witness_matrix(const std::vector<Witness> &witnesses, const std::vector<std::string> &row_labels,
                             const std::vector<Distribution> &distributions,
                             const std::vector<std::string> &col_labels, double threshold) {
    if (witnesses.size() != row_labels.size() || distributions.size() != col_labels.size()) {
        throw std::invalid_argument("label counts do not match");
    }
    WitnessMatrix m;
    m.row_labels = row_labels;
    m.col_labels = col_labels;
    for (const auto &w : witnesses) {
        std::vector<double> row;
        std::vector<char> mask;
        for (const auto &d : distributions) {
            double v = w.evaluate(d);
            row.push_back(v);
            mask.push_back(v < -threshold);
        }
        m.values.push_back(std::move(row));
        m.detected.push_back(std::move(mask));
    }
    return m;
}

std::string to_csv(const WitnessMatrix &m) {
    std::string out = "witness";
    for (const auto &c : m.col_labels) {
        out += "," + c;
    }
    out += "\n";
    for (std::size_t r = 0; r < m.values.size(); r++) {
        out += m.row_labels[r];
        for (double v : m.values[r]) {
            out += "," + exact_decimal(v);
        }
        out += "\n";
    }
    return out;
}

}  // namespace netcert
