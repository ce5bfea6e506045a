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

#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "netcert/qsim.h"
#include "netcert/witness.h"

namespace netcert {
namespace {

const std::vector<int> kTwo(6, 2);

TEST(Witness, FixturesAreWellFormed) {
    auto fixtures = builtin_fixtures();
    ASSERT_EQ(fixtures.size(), 4u);
    EXPECT_EQ(fixtures[0].name, "W1");
    for (const auto &w : fixtures) {
        EXPECT_NO_THROW(w.validate());
        EXPECT_GE(w.max_degree(), 2);
    }
    EXPECT_EQ(builtin_fixture("W_XZ").name, "W_XZ");
    EXPECT_THROW(builtin_fixture("W_Q"), std::invalid_argument);
}

TEST(Witness, W1OnClassicalGhzByHand) {
    // Every single-party marginal is 1/2 and every pair marginal 1/2 in the Z basis.
    EXPECT_NEAR(builtin_fixture("W1").evaluate(ghz_setup_two_input(1.0)), -0.531, 1e-12);
}

TEST(Witness, FixturesOnDeterministicPoint) {
    Distribution d = deterministic_distribution(kTwo, kTwo, 0);
    for (const auto &w : builtin_fixtures()) {
        EXPECT_GE(w.evaluate(d), -1e-9) << w.name;
    }
}

TEST(Witness, TridentPairsSwapRolesOfCAndD) {
    // Exchanging parties C and D maps the XY witness onto the YZ witness term by term.
    Witness xy = builtin_fixture("W_XY");
    Witness yz = builtin_fixture("W_YZ");
    ASSERT_EQ(xy.terms.size(), yz.terms.size());
    std::mt19937_64 rng(9);
    for (int i = 0; i < 5; i++) {
        Distribution p = random_product_distribution(kTwo, kTwo, rng);
        Distribution q(kTwo, kTwo);
        for (std::size_t x = 0; x < p.num_input_tuples(); x++) {
            auto in = p.decode_inputs(x);
            std::swap(in[2], in[3]);
            for (std::size_t a = 0; a < p.num_output_tuples(); a++) {
                auto out = p.decode_outputs(a);
                std::swap(out[2], out[3]);
                q.at(q.encode_outputs(out), q.encode_inputs(in)) = p.at(a, x);
            }
        }
        EXPECT_NEAR(xy.evaluate(p), yz.evaluate(q), 1e-12);
    }
}

TEST(Witness, JsonRoundTripIsExact) {
    for (const auto &w : builtin_fixtures()) {
        auto doc = serialize(w);
        Witness back = deserialize(doc);
        EXPECT_EQ(serialize(back), doc);
        ASSERT_EQ(back.terms.size(), w.terms.size());
        for (std::size_t i = 0; i < w.terms.size(); i++) {
            EXPECT_EQ(back.terms[i].coefficient, w.terms[i].coefficient);
        }
    }
}

TEST(Witness, RejectsSchemaViolations) {
    auto doc = serialize(builtin_fixture("W1"));
    auto bad = doc;
    bad["version"] = 99;
    EXPECT_THROW(deserialize(bad), WitnessError);
    bad = doc;
    bad["terms"].push_back(bad["terms"][0]);
    EXPECT_THROW(deserialize(bad), WitnessError);
    bad = doc;
    bad["colour"] = "red";
    EXPECT_THROW(deserialize(bad), WitnessError);
    bad = doc;
    bad["terms"][0]["coefficient"] = "1.5x";
    EXPECT_THROW(deserialize(bad), WitnessError);
    bad = doc;
    bad["schema"] = "other";
    EXPECT_THROW(deserialize(bad), WitnessError);
    EXPECT_THROW(load_witness("/nonexistent/w.json"), std::runtime_error);
}

TEST(Witness, NormalizationKeepsSign) {
    Witness w = builtin_fixture("W1");
    for (auto &t : w.terms) {
        t.coefficient *= 3.7;
    }
    Witness n = w.normalized();
    EXPECT_EQ(n.normalization, "max-degree1");
    double mx = 0.0;
    for (const auto &t : n.terms) {
        if (t.factors.size() == 1) {
            mx = std::max(mx, std::abs(t.coefficient));
        }
    }
    EXPECT_NEAR(mx, 1.0, 1e-12);
    for (double v : {1.0, 0.7, 0.3}) {
        Distribution p = ghz_setup_two_input(v);
        EXPECT_EQ(std::signbit(w.evaluate(p)), std::signbit(n.evaluate(p)));
    }
}

class Extracted : public ::testing::Test {
   protected:
    static void SetUpTestSuite() {
        model_ = new InflationModel(ghz6_network(2, 2), 2, "1");
        AdmmSolver s;
        SolverOptions opt;
        opt.decide = true;
        auto r = s.solve(model_->assemble(ghz_setup_two_input(1.0)), opt);
        ASSERT_EQ(r.status, SolveStatus::Infeasible);
        report_ = new SolveReport(r);
    }
    static void TearDownTestSuite() {
        delete model_;
        delete report_;
    }
    static InflationModel *model_;
    static SolveReport *report_;
};
InflationModel *Extracted::model_ = nullptr;
SolveReport *Extracted::report_ = nullptr;

TEST_F(Extracted, SeparatesTheTarget) {
    Witness w = extract(*report_, *model_);
    EXPECT_NO_THROW(w.validate());
    EXPECT_LT(w.evaluate(ghz_setup_two_input(1.0)), 0.0);
    EXPECT_NEAR(w.evaluate(ghz_setup_two_input(1.0)), report_->certificate_value, 1e-9);
    EXPECT_EQ(w.metadata["level"], "1");
    EXPECT_LE(w.max_degree(), 2);
}

TEST_F(Extracted, NonnegativeOnCompatibleDistributions) {
    Witness w = extract(*report_, *model_).normalized();
    std::mt19937_64 rng(17);
    for (int i = 0; i < 20; i++) {
        EXPECT_GE(w.evaluate(random_network_distribution(ghz6_network(2, 2), rng)), -1e-6);
        EXPECT_GE(w.evaluate(random_product_distribution(kTwo, kTwo, rng)), -1e-6);
    }
    EXPECT_GE(w.evaluate(ghz_setup_two_input(0.5)), -1e-6);
}

TEST_F(Extracted, LinearInCoefficients) {
    Witness w = extract(*report_, *model_);
    Witness twice = w;
    for (auto &t : twice.terms) {
        t.coefficient *= 2.0;
    }
    Distribution p = ghz_setup_two_input(0.9);
    EXPECT_NEAR(twice.evaluate(p), 2.0 * w.evaluate(p), 1e-12);
}

TEST(Witness, ExtractRequiresInfeasibleReport) {
    InflationModel m(ghz6_network(2, 2), 2, "1");
    SolveReport r;
    r.status = SolveStatus::Feasible;
    EXPECT_THROW(extract(r, m), WitnessError);
    r.status = SolveStatus::Infeasible;
    EXPECT_THROW(extract(r, m), WitnessError);
}

TEST(Witness, MatrixAndCsv) {
    std::vector<Witness> ws = {builtin_fixture("W1")};
    std::vector<Distribution> ds = {ghz_setup_two_input(1.0), ghz_setup_two_input(0.0)};
    auto m = witness_matrix(ws, {"W1"}, ds, {"v1", "v0"});
    ASSERT_EQ(m.values.size(), 1u);
    EXPECT_TRUE(m.detected[0][0]);
    EXPECT_EQ(to_csv(m).substr(0, 16), "witness,v1,v0\nW1");
    auto empty = witness_matrix({}, {}, ds, {"v1", "v0"});
    EXPECT_EQ(to_csv(empty), "witness,v1,v0\n");
    EXPECT_THROW(witness_matrix(ws, {}, ds, {"a", "b"}), std::invalid_argument);
}

}  // namespace
}  // namespace netcert
