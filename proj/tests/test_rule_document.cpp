// SPDX-License-Identifier: MIT
#include "latcub/rule_document.hpp"

#include <gtest/gtest.h>
#include <json.hpp>

using namespace latcub;

namespace {

void expect_same_rule(const CubatureRule& a, const CubatureRule& b) {
    EXPECT_EQ(a.dim, b.dim);
    EXPECT_EQ(a.n, b.n);
    EXPECT_EQ(a.kind, b.kind);
    EXPECT_EQ(a.normalization, b.normalization);
    EXPECT_EQ(a.exactness, b.exactness);
    EXPECT_EQ(a.node_indices, b.node_indices);
    EXPECT_EQ(a.exact_weights, b.exact_weights);
    ASSERT_EQ(a.size(), b.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        EXPECT_EQ(a.nodes[i], b.nodes[i]);
        EXPECT_EQ(a.weights[i], b.weights[i]);
    }
}

}  // namespace

TEST(RuleDocument, JsonRoundTripIsExact) {
    for (auto kind : {WeightKind::trig_sym, WeightKind::trig_equal, WeightKind::W0, WeightKind::W1})
        for (int dim : {2, 3})
            for (int n : {3, 4}) {
                const auto rule = make_rule(kind, dim, n);
                expect_same_rule(parse_json(emit_json(rule)), rule);
            }
}

TEST(RuleDocument, JsonLayout) {
    const auto doc = nlohmann::json::parse(emit_json(w0_rule(2, 2)));
    EXPECT_EQ(doc["schema_version"], "1.0");
    EXPECT_EQ(doc["weight_kind"], "W0");
    EXPECT_EQ(doc["normalization"], "1/8");
    EXPECT_EQ(doc["nodes"].size(), 5u);
    EXPECT_EQ(doc["node_indices"][2], (std::vector<int>{1, 1}));
    EXPECT_EQ(doc["weights"][2], "4");
    EXPECT_EQ(doc["exactness"], "total_degree<=3");
}

TEST(RuleDocument, MalformedInputRejected) {
    EXPECT_THROW(parse_json("{"), std::invalid_argument);
    EXPECT_THROW(parse_json(R"({"schema_version":"2.0"})"), std::invalid_argument);
    auto doc = nlohmann::json::parse(emit_json(w0_rule(2, 2)));
    doc["weights"].erase(0);
    EXPECT_THROW(parse_json(doc.dump()), std::invalid_argument);
}

TEST(RuleDocument, CsvLayout) {
    const std::string csv = emit_csv(w0_rule(2, 2));
    EXPECT_EQ(csv.substr(0, csv.find('\n')), "k1,k2,x1,x2,weight");
    EXPECT_EQ(std::count(csv.begin(), csv.end(), '\n'), 6);
    const std::string csv3 = emit_csv(w1_rule(3, 3));
    EXPECT_EQ(csv3.substr(0, csv3.find('\n')), "k1,k2,k3,x1,x2,x3,weight");
}

// Both emissions describe the same rule.
TEST(RuleDocument, CsvAndJsonAgree) {
    for (auto kind : {WeightKind::trig_sym, WeightKind::W0, WeightKind::W1})
        for (int dim : {2, 3}) {
            const auto rule = make_rule(kind, dim, 4);
            const auto from_json = parse_json(emit_json(rule));
            const auto from_csv = parse_csv(emit_csv(rule));
            EXPECT_EQ(from_csv.dim, from_json.dim);
            EXPECT_EQ(from_csv.node_indices, from_json.node_indices);
            EXPECT_EQ(from_csv.nodes, from_json.nodes);
            EXPECT_EQ(from_csv.weights, full_weight_strings(from_json));
        }
}

TEST(RuleDocument, CsvErrors) {
    EXPECT_THROW(parse_csv(""), std::invalid_argument);
    EXPECT_THROW(parse_csv("a,b,c\n"), std::invalid_argument);
    EXPECT_THROW(parse_csv("k1,k2,x1,x2,weight\n1,2,3\n"), std::invalid_argument);
}
