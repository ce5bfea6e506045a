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

#include "netcert/network.h"

namespace netcert {
namespace {

nlohmann::ordered_json line_doc() {
    return nlohmann::ordered_json::parse(R"({
        "sources": {"S1": ["A", "B"], "S2": ["B", "C"]},
        "parties": {"A": {"inputs": 2, "outputs": 2}, "B": {}, "C": {"outputs": 3}}
    })");
}

TEST(Network, ParsesDocumentOrder) {
    Network net = Network::from_json(line_doc());
    ASSERT_EQ(net.num_parties(), 3);
    ASSERT_EQ(net.num_sources(), 2);
    EXPECT_EQ(net.parties()[0].id, "A");
    EXPECT_EQ(net.parties()[0].n_inputs, 2);
    EXPECT_EQ(net.parties()[1].n_inputs, 1);
    EXPECT_EQ(net.parties()[2].n_outputs, 3);
    EXPECT_TRUE(net.feeds(net.source_index("S2"), net.party_index("C")));
    EXPECT_FALSE(net.feeds(net.source_index("S1"), net.party_index("C")));
    EXPECT_EQ(net.sources_of(net.party_index("B")).size(), 2u);
}

TEST(Network, JsonRoundTrip) {
    Network net = Network::from_json(line_doc());
    EXPECT_EQ(Network::from_json(net.to_json()), net);
    Network g = ghz6_network(2, 2);
    EXPECT_EQ(Network::from_json(g.to_json()), g);
}

TEST(Network, RejectsMalformedDocuments) {
    auto doc = line_doc();
    doc["extra"] = 1;
    EXPECT_THROW(Network::from_json(doc), NetworkError);

    doc = line_doc();
    doc["sources"]["S3"] = {"Q"};
    EXPECT_THROW(Network::from_json(doc), NetworkError);

    doc = line_doc();
    doc["parties"]["A"]["inputs"] = "two";
    EXPECT_THROW(Network::from_json(doc), NetworkError);

    doc = line_doc();
    doc.erase("parties");
    EXPECT_THROW(Network::from_json(doc), NetworkError);

    EXPECT_THROW(Network::from_json(nlohmann::ordered_json::array()), NetworkError);
    EXPECT_THROW(Network::from_file("/nonexistent/net.json"), NetworkError);
}

TEST(Network, BuiltinTopologies) {
    Network g = ghz6_network();
    EXPECT_EQ(g.num_parties(), 6);
    EXPECT_EQ(g.num_sources(), 3);
    EXPECT_EQ(g.sources()[0].parties, (std::vector<int>{0, 1, 2}));
    EXPECT_EQ(g.sources()[1].parties, (std::vector<int>{1, 2, 3, 4}));
    EXPECT_EQ(g.sources()[2].parties, (std::vector<int>{3, 4, 5}));
    Network t = trident_network();
    EXPECT_EQ(t.num_parties(), 6);
    Network raw = trident_network_raw();
    EXPECT_EQ(raw.num_sources(), 4);
    EXPECT_EQ(t.num_sources(), 2);
    EXPECT_EQ(absorb_dominated_sources(raw).num_sources(), 2);
}

TEST(Network, AbsorbsDominatedSources) {
    auto doc = nlohmann::ordered_json::parse(R"({
        "sources": {"S1": ["A", "B"], "S2": ["B"], "S3": ["A", "B"]},
        "parties": {"A": {}, "B": {}}
    })");
    Network net = absorb_dominated_sources(Network::from_json(doc));
    EXPECT_EQ(net.num_sources(), 1);
}

}  // namespace
}  // namespace netcert
