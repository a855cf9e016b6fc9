// SPDX-License-Identifier: MIT
#include "latcub/lattice.hpp"
#include "latcub/oracle.hpp"
#include "latcub/transform.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <set>

using namespace latcub;

TEST(Transform, CosineMap) {
    const auto t0 = cosine_map(TorusPoint(0.0, 0.0));
    EXPECT_DOUBLE_EQ(t0[0], 1.0);
    EXPECT_DOUBLE_EQ(t0[1], 1.0);
    const auto t = cosine_map(TorusPoint(0.25, 0.5));
    EXPECT_NEAR(t[0], 0.0, 1e-16);
    EXPECT_DOUBLE_EQ(t[1], -1.0);
}

TEST(Transform, ArccosRoundTrip) {
    for (double a : {-1.0, -0.3, 0.0, 0.7, 1.0}) {
        const AlgebraicPoint t(a, -a, 0.5 * a);
        const auto back = cosine_map(arccos_map(t));
        for (int i = 0; i < 3; ++i)
            EXPECT_NEAR(back[i], t[i], 1e-15);
    }
}

TEST(Transform, ChebyshevNodes) {
    for (int n = 1; n <= 9; ++n)
        for (int k = 0; k <= n; ++k) {
            EXPECT_NEAR(chebyshev_node(k, n), std::cos(k * M_PI / n), 1e-15);
            EXPECT_EQ(chebyshev_node(k, n), -chebyshev_node(n - k, n));
        }
    EXPECT_EQ(chebyshev_node(2, 4), 0.0);
}

TEST(Transform, NodeMapIsGaussLobattoGrid) {
    const int n = 5;
    for (const auto& k : generate_index_set(IndexSetKind::Xi, 2, n)) {
        const auto t = cosine_map(TorusPoint(k[0] / (2.0 * n), k[1] / (2.0 * n)));
        EXPECT_NEAR(t[0], std::cos(k[0] * M_PI / n), 1e-15);
        EXPECT_NEAR(t[1], std::cos(k[1] * M_PI / n), 1e-15);
    }
}

TEST(Transform, PointDomainChecked) {
    EXPECT_THROW(AlgebraicPoint(1.5, 0.0), std::domain_error);
    EXPECT_THROW(TorusPoint(0.75, 0.0), std::domain_error);
}

TEST(IndexMap, TwoD) {
    EXPECT_EQ(index_map_2d(IndexVector(0, 0)), IndexVector(0, 0));
    EXPECT_EQ(index_map_2d(IndexVector(1, 0)), IndexVector(1, -1));
    EXPECT_EQ(index_map_2d_inverse(IndexVector(2, 0)), IndexVector(1, 1));
    EXPECT_THROW(index_map_2d_inverse(IndexVector(1, 0)), std::domain_error);
}

TEST(IndexMap, TwoDMapsFrequencySetsOntoSpatialSets) {
    for (int n = 1; n <= 5; ++n) {
        std::set<IndexVector> img;
        for (const auto& j : generate_index_set(IndexSetKind::LambdaStar, 2, n))
            img.insert(index_map_2d(j));
        const auto xs = generate_index_set(IndexSetKind::XStar, 2, n);
        std::set<IndexVector> parity;
        for (const auto& k : xs)
            if ((k[0] + k[1]) % 2 == 0)
                parity.insert(k);
        EXPECT_EQ(img, parity);
    }
}

TEST(IndexMap, ThreeD) {
    EXPECT_EQ(index_map_3d(IndexVector(1, 1, 1)), IndexVector(1, 1, 1));
    EXPECT_EQ(index_map_3d(IndexVector(0, 0, 0)), IndexVector(0, 0, 0));
    for (const auto& j : generate_index_set(IndexSetKind::Lambda, 3, 3))
        EXPECT_EQ(index_map_3d_inverse(index_map_3d(j)), j);
    EXPECT_THROW(index_map_3d_inverse(IndexVector(1, 0, 0)), std::domain_error);
}

TEST(Homogeneous, Examples) {
    const double z[3] = {0.0, 0.0, 0.0};
    const auto t0 = to_homogeneous(std::span<const double>(z, 3));
    for (int i = 0; i < 4; ++i)
        EXPECT_EQ(t0[i], 0.0);
    const double e1[3] = {1.0, 0.0, 0.0};
    const auto t = to_homogeneous(std::span<const double>(e1, 3));
    EXPECT_DOUBLE_EQ(t[0], -0.5);
    EXPECT_DOUBLE_EQ(t[1], 0.5);
    EXPECT_DOUBLE_EQ(t[2], 0.5);
    EXPECT_DOUBLE_EQ(t[3], -0.5);
    const double x[3] = {0.1, -0.2, 0.37};
    const auto back = from_homogeneous(to_homogeneous(std::span<const double>(x, 3)));
    for (int i = 0; i < 3; ++i)
        EXPECT_NEAR(back[static_cast<std::size_t>(i)], x[i], 1e-16);
    EXPECT_THROW(HomogeneousPoint(0.1, 0.0, 0.0, 0.0), std::domain_error);
}

TEST(Homogeneous, IndexMap) {
    EXPECT_EQ(hom_index_map(IndexVector(0, 0, 0)), (std::array<int, 4>{0, 0, 0, 0}));
    EXPECT_EQ(hom_index_map(IndexVector(1, 0, 0)), (std::array<int, 4>{-2, 2, 2, -2}));
    for (const auto& k : generate_index_set(IndexSetKind::LambdaDagStar, 3, 2))
        EXPECT_EQ(hom_index_inverse(hom_index_map(k)), k);
    EXPECT_THROW(hom_index_inverse({1, 1, 1, -3}), std::domain_error);
}

// k . x equals (j . t) / 4 for the homogeneous image j of k.
TEST(Homogeneous, PairingPreserved) {
    const double x[3] = {0.13, -0.41, 0.29};
    const auto t = to_homogeneous(std::span<const double>(x, 3));
    for (const auto& k : generate_index_set(IndexSetKind::LambdaDagStar, 3, 2)) {
        const auto j = hom_index_map(k);
        double jt = 0.0;
        for (int i = 0; i < 4; ++i)
            jt += j[static_cast<std::size_t>(i)] * t[i];
        EXPECT_NEAR(k[0] * x[0] + k[1] * x[1] + k[2] * x[2], jt / 4.0, 1e-14);
    }
}

TEST(Chebyshev, Examples) {
    EXPECT_NEAR(chebyshev_eval(ChebyshevKind::first, 2, 0.5), -0.5, 1e-15);
    EXPECT_NEAR(chebyshev_eval(ChebyshevKind::second, 1, 0.3), 0.6, 1e-15);
    EXPECT_THROW(chebyshev_eval(ChebyshevKind::first, 1, 1.5), std::domain_error);
}

TEST(Chebyshev, MatchesRecurrenceOracle) {
    for (int d = 0; d <= 30; ++d)
        for (double t : {-1.0, -0.999, -0.5, 0.0, 0.2, 0.9999, 1.0}) {
            EXPECT_NEAR(chebyshev_eval(ChebyshevKind::first, d, t), oracle::chebyshev_recurrence(false, d, t), 1e-12);
            EXPECT_NEAR(chebyshev_eval(ChebyshevKind::second, d, t), oracle::chebyshev_recurrence(true, d, t),
                        1e-11 * (d + 1));
        }
}
