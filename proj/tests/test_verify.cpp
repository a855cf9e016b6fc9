// SPDX-License-Identifier: MIT
#include "latcub/verify.hpp"

#include <gtest/gtest.h>
#include <json.hpp>

using namespace latcub;

TEST(Verify, RngIsDeterministicPerCheck) {
    auto a = make_rng(7, "x", 2, 3), b = make_rng(7, "x", 2, 3), c = make_rng(7, "y", 2, 3);
    EXPECT_EQ(a(), b());
    EXPECT_NE(make_rng(7, "x", 2, 3)(), c());
}

TEST(Verify, JsonLine) {
    const CheckResult r{"exactness", "w0", 2, 4, 1e-16, 1e-12, CheckStatus::pass, ""};
    const auto j = nlohmann::json::parse(to_json_line(r));
    EXPECT_EQ(j["check"], "w0");
    EXPECT_EQ(j["status"], "pass");
    EXPECT_EQ(to_json_line(r).find('\n'), std::string::npos);
}

TEST(Verify, UnexpectedFailureDetection) {
    std::vector<CheckResult> rs{{"s", "a", 2, 2, 0, 1, CheckStatus::pass, ""},
                                {"s", "b", 2, 2, 1, 0, CheckStatus::expected_fail, ""}};
    EXPECT_FALSE(has_unexpected_failure(rs));
    rs.push_back({"s", "c", 2, 2, 1, 0, CheckStatus::fail, ""});
    EXPECT_TRUE(has_unexpected_failure(rs));
}

TEST(Verify, ExactnessSuiteHasWitness) {
    const auto rs = verify_exactness(3, 2, {});
    EXPECT_FALSE(has_unexpected_failure(rs));
    const auto w = std::find_if(rs.begin(), rs.end(), [](const auto& r) { return r.name == "w0_witness_TnTn"; });
    ASSERT_NE(w, rs.end());
    EXPECT_EQ(w->status, CheckStatus::expected_fail);
    EXPECT_GT(w->max_error, 1e-3);
}

TEST(Verify, SuitesPassAtSmallN) {
    for (int dim : {2, 3}) {
        EXPECT_FALSE(has_unexpected_failure(verify_kernels(dim, 3, {})));
        EXPECT_FALSE(has_unexpected_failure(verify_interpolation(dim, 2, {})));
    }
}

TEST(Verify, ToleranceScaleCanForceFailure) {
    VerifyOptions opt;
    opt.tolerance_scale = 1e-30;
    EXPECT_TRUE(has_unexpected_failure(verify_kernels(2, 4, opt)));
}

TEST(Verify, RandomSpaceElementUsesNoHigherPairwiseDegree) {
    std::mt19937_64 g(1);
    const auto f = random_space_element(3, 4, g);
    for (const auto& [m, c] : f.terms) {
        EXPECT_LE(m[0] + m[1], 4);
        EXPECT_LE(m[0] + m[2], 4);
        EXPECT_LE(m[1] + m[2], 4);
    }
}
