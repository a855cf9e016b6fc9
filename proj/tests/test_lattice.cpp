// SPDX-License-Identifier: MIT
#include "latcub/lattice.hpp"
#include "latcub/transform.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <set>

using namespace latcub;

namespace {

std::size_t size_of(IndexSetKind k, int dim, int n) {
    return generate_index_set(k, dim, n).size();
}

}  // namespace

TEST(IndexSets, Cardinalities2D) {
    EXPECT_EQ(size_of(IndexSetKind::Lambda, 2, 3), 18u);
    EXPECT_EQ(size_of(IndexSetKind::XStar, 2, 2), 13u);
    for (int n = 1; n <= 12; ++n) {
        EXPECT_EQ(size_of(IndexSetKind::Lambda, 2, n), static_cast<std::size_t>(2 * n * n));
        EXPECT_EQ(size_of(IndexSetKind::X, 2, n), static_cast<std::size_t>(2 * n * n));
        EXPECT_EQ(size_of(IndexSetKind::XStar, 2, n), static_cast<std::size_t>(2 * n * n + 2 * n + 1));
        const int a = n / 2 + 1, b = (n - 1) / 2 + 1;
        EXPECT_EQ(size_of(IndexSetKind::Xi, 2, n), static_cast<std::size_t>(a * a + b * b));
    }
}

TEST(IndexSets, Cardinalities3D) {
    EXPECT_EQ(size_of(IndexSetKind::XStar, 3, 1), 9u);
    EXPECT_EQ(size_of(IndexSetKind::LambdaDagStar, 3, 1), 7u);
    for (int n = 1; n <= 6; ++n) {
        const std::size_t n3 = static_cast<std::size_t>(n * n * n);
        EXPECT_EQ(size_of(IndexSetKind::Lambda, 3, n), 2 * n3);
        EXPECT_EQ(size_of(IndexSetKind::LambdaDag, 3, n), 2 * n3);
        EXPECT_EQ(size_of(IndexSetKind::X, 3, n), 2 * n3);
        EXPECT_EQ(size_of(IndexSetKind::XStar, 3, n), n3 + static_cast<std::size_t>((n + 1) * (n + 1) * (n + 1)));
    }
}

TEST(IndexSets, Xi3DAtTwo) {
    const auto xi = generate_index_set(IndexSetKind::Xi, 3, 2);
    std::set<IndexVector> want;
    for (int a : {0, 2})
        for (int b : {0, 2})
            for (int c : {0, 2})
                want.emplace(a, b, c);
    want.emplace(1, 1, 1);
    EXPECT_EQ(std::set<IndexVector>(xi.begin(), xi.end()), want);
}

TEST(IndexSets, LexicographicAndMembership) {
    for (auto kind : {IndexSetKind::Lambda, IndexSetKind::LambdaStar, IndexSetKind::XStar, IndexSetKind::Xi}) {
        const auto s = generate_index_set(kind, 2, 4);
        EXPECT_TRUE(std::is_sorted(s.begin(), s.end()));
        for (const auto& v : s)
            EXPECT_TRUE(in_index_set(kind, v, 4));
    }
    EXPECT_FALSE(in_index_set(IndexSetKind::XStar, IndexVector(5, 0), 2));
}

TEST(IndexSets, ZeroDegreeClosedSets) {
    EXPECT_EQ(generate_index_set(IndexSetKind::LambdaStar, 2, 0), std::vector<IndexVector>{IndexVector(0, 0)});
    EXPECT_EQ(generate_index_set(IndexSetKind::LambdaDagStar, 3, 0), std::vector<IndexVector>{IndexVector(0, 0, 0)});
}

TEST(IndexSets, Errors) {
    EXPECT_THROW(generate_index_set(IndexSetKind::X, 4, 2), std::invalid_argument);
    EXPECT_THROW(generate_index_set(IndexSetKind::X, 2, 0), std::invalid_argument);
    EXPECT_THROW(generate_index_set(IndexSetKind::LambdaDag, 2, 2), std::invalid_argument);
}

TEST(Classification, SpatialExamples) {
    EXPECT_EQ(classify_spatial(IndexVector(0, 0), 2).kind, BoundaryKind::interior);
    EXPECT_EQ(classify_spatial(IndexVector(0, 0), 2).multiplicity, 1);
    EXPECT_EQ(classify_spatial(IndexVector(2, 0), 2).multiplicity, 2);
    EXPECT_EQ(classify_spatial(IndexVector(2, 2), 2).kind, BoundaryKind::vertex);
    EXPECT_EQ(classify_spatial(IndexVector(2, 2, 2), 2).kind, BoundaryKind::vertex);
    EXPECT_EQ(classify_spatial(IndexVector(2, 2, 2), 2).multiplicity, 8);
    EXPECT_EQ(spatial_weight(IndexVector(2, 2, 2), 2), Rational(1, 8));
}

TEST(Classification, FrequencyExamples) {
    EXPECT_EQ(classify_frequency(IndexVector(0, 0, 0), 3).multiplicity, 1);
    for (int n : {2, 4, 6}) {
        const IndexVector k13 = hom_index_inverse({n, n, n, -3 * n});
        EXPECT_EQ(classify_frequency(k13, n).multiplicity, 4) << n;
    }
    for (int n : {1, 2, 3}) {
        const IndexVector k22 = hom_index_inverse({2 * n, 2 * n, -2 * n, -2 * n});
        EXPECT_EQ(classify_frequency(k22, n).multiplicity, 6) << n;
    }
}

// Weights are reciprocal class sizes, so each class contributes exactly one.
TEST(Classification, WeightsSumToDeterminant) {
    for (int dim : {2, 3})
        for (int n = 1; n <= (dim == 2 ? 8 : 4); ++n) {
            Rational sx(0), sf(0);
            for (const auto& k : generate_index_set(IndexSetKind::XStar, dim, n))
                sx += spatial_weight(k, n);
            const auto fk = dim == 2 ? IndexSetKind::LambdaStar : IndexSetKind::LambdaDagStar;
            for (const auto& j : generate_index_set(fk, dim, n))
                sf += frequency_weight(j, n);
            const Rational det(dim == 2 ? 2 * n * n : 2 * n * n * n);
            EXPECT_EQ(sx, det);
            EXPECT_EQ(sf, det);
        }
}

TEST(Classification, LambdaWeightIsSignImagesTimesBoundaryWeight) {
    for (int dim : {2, 3})
        for (int n = 1; n <= 5; ++n) {
            Rational total(0);
            for (const auto& k : generate_index_set(IndexSetKind::Xi, dim, n)) {
                int interior = 0;
                for (int v : k)
                    interior += (v > 0 && v < n) ? 1 : 0;
                EXPECT_EQ(lambda_weight(k, n), Rational(1 << interior));
                total += lambda_weight(k, n);
            }
            EXPECT_EQ(total, Rational(dim == 2 ? 2 * n * n : 2 * n * n * n));
        }
}

TEST(Congruence, Examples) {
    const auto xs = generate_index_set(IndexSetKind::XStar, 2, 2);
    const auto period = GeneratorMatrix::scaled_identity(2, 4);
    auto sorted = [](std::vector<IndexVector> v) {
        std::sort(v.begin(), v.end());
        return v;
    };
    EXPECT_EQ(sorted(congruence_class(IndexVector(2, 0), xs, period)),
              (std::vector<IndexVector>{IndexVector(-2, 0), IndexVector(2, 0)}));
    EXPECT_EQ(congruence_class(IndexVector(0, 0), xs, period), std::vector<IndexVector>{IndexVector(0, 0)});
    EXPECT_EQ(sorted(congruence_class(IndexVector(2, 2), xs, period)),
              (std::vector<IndexVector>{IndexVector(-2, -2), IndexVector(-2, 2), IndexVector(2, -2), IndexVector(2, 2)}));
}

TEST(Generators, Basics) {
    EXPECT_EQ(GeneratorMatrix::rhombus(3).determinant(), 18);
    EXPECT_EQ(GeneratorMatrix::fcc(2).determinant(), 16);
    EXPECT_TRUE(GeneratorMatrix::rhombus(2).contains(IndexVector(2, -2)));
    EXPECT_FALSE(GeneratorMatrix::rhombus(2).contains(IndexVector(1, 0)));
    EXPECT_TRUE(GeneratorMatrix::fcc(1).contains(IndexVector(1, 1, 0)));
    EXPECT_FALSE(GeneratorMatrix::fcc(1).contains(IndexVector(1, 0, 0)));
}

TEST(Orthogonality, Examples) {
    EXPECT_EQ(orthogonality_sums(IndexVector(1, 1), 2, SumSide::spatial), 0);
    EXPECT_EQ(orthogonality_sums(IndexVector(0, 0), 2, SumSide::spatial), 1);
    EXPECT_EQ(orthogonality_sums(IndexVector(2, 2), 2, SumSide::spatial), 1);
    EXPECT_NEAR(std::abs(orthogonality_sum_numeric(IndexVector(1, 1), 2, SumSide::spatial)), 0.0, 1e-14);
}

// The exact and floating orthogonality sums agree on every small index.
TEST(Orthogonality, ExactMatchesNumeric) {
    for (int dim : {2, 3}) {
        const int n = 2;
        for (const auto& v : generate_index_set(IndexSetKind::XStar, dim, 2 * n))
            for (auto side : {SumSide::spatial, SumSide::frequency}) {
                const double exact = orthogonality_sums(v, n, side);
                EXPECT_NEAR(orthogonality_sum_numeric(v, n, side).real(), exact, 1e-12);
            }
    }
}
