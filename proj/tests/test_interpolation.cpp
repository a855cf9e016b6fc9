// SPDX-License-Identifier: MIT
#include "latcub/interpolation.hpp"
#include "latcub/lattice.hpp"
#include "latcub/oracle.hpp"
#include "latcub/transform.hpp"
#include "latcub/verify.hpp"

#include <gtest/gtest.h>

#include <numbers>
#include <random>
#include <set>

using namespace latcub;

namespace {

std::array<double, 3> rnd(std::mt19937_64& g, double lo, double hi) {
    std::uniform_real_distribution<double> u(lo, hi);
    return {u(g), u(g), u(g)};
}

std::span<const double> sp(const std::array<double, 3>& x, int dim) {
    return {x.data(), static_cast<std::size_t>(dim)};
}

}  // namespace

TEST(TrigInterpolant, ConstantIsReproduced) {
    for (int dim : {2, 3}) {
        const int n = 3;
        const auto in = trig_interpolant(dim, n, sample_torus(InterpolantFlavor::trig_I, dim, n, [](auto) { return 1.0; }));
        std::mt19937_64 g(1);
        for (int p = 0; p < 100; ++p) {
            const auto x = rnd(g, -0.5, 0.5);
            EXPECT_NEAR(std::abs(in.evaluate_complex(sp(x, dim)) - 1.0), 0.0, 1e-12);
        }
    }
}

TEST(TrigInterpolant, DeltaDataAtNodes) {
    const int n = 3;
    const auto nodes = interpolation_nodes(InterpolantFlavor::trig_I, 2, n);
    SampleMap s;
    for (const auto& k : nodes)
        s[k] = k == nodes[5] ? 1.0 : 0.0;
    const auto in = trig_interpolant(2, n, s);
    for (const auto& k : nodes) {
        const double x[2] = {k[0] / (2.0 * n), k[1] / (2.0 * n)};
        EXPECT_NEAR(std::abs(in.evaluate_complex(std::span<const double>(x, 2)) - s[k]), 0.0, 1e-12);
    }
}

// An exponential of the fundamental frequency set is reproduced everywhere.
TEST(TrigInterpolant, ReproducesFundamentalExponentials) {
    const int n = 3;
    std::mt19937_64 g(2);
    for (const auto& nu : generate_index_set(IndexSetKind::Lambda, 2, n)) {
        const auto e = [nu](std::span<const double> x) {
            return std::polar(1.0, 2 * std::numbers::pi * (nu[0] * x[0] + nu[1] * x[1]));
        };
        SampleMap re, im;
        for (const auto& k : interpolation_nodes(InterpolantFlavor::trig_I, 2, n)) {
            const double x[2] = {k[0] / (2.0 * n), k[1] / (2.0 * n)};
            re[k] = e(std::span<const double>(x, 2)).real();
            im[k] = e(std::span<const double>(x, 2)).imag();
        }
        const auto ir = trig_interpolant(2, n, re), ii = trig_interpolant(2, n, im);
        for (int p = 0; p < 10; ++p) {
            const auto x = rnd(g, -0.5, 0.5);
            const std::complex<double> got =
                ir.evaluate_complex(sp(x, 2)) + std::complex<double>(0, 1) * ii.evaluate_complex(sp(x, 2));
            EXPECT_LT(std::abs(got - e(sp(x, 2))), 1e-10) << nu;
        }
    }
}

TEST(SymInterpolant, ClassSumsAtBoundaryNodes) {
    for (int dim : {2, 3}) {
        std::mt19937_64 g(3);
        EXPECT_LT(sym_interpolation_error(dim, 2, g), 1e-12);
        EXPECT_LT(sym_interpolation_error(dim, 3, g), 1e-12);
    }
}

TEST(Interpolant, KeyMismatchIsReported) {
    SampleMap s = sample_algebraic(2, 3, [](auto t) { return t[0]; });
    s.erase(IndexVector(1, 1));
    s[IndexVector(9, 9)] = 0.0;
    try {
        (void)algebraic_interpolant(2, 3, s);
        FAIL() << "expected invalid_argument";
    } catch (const std::invalid_argument& e) {
        const std::string msg = e.what();
        EXPECT_NE(msg.find("(1,1)"), std::string::npos) << msg;
        EXPECT_NE(msg.find("(9,9)"), std::string::npos) << msg;
    }
}

TEST(Interpolant, AlgebraicChartOnlyForAlgebraicFlavor) {
    const auto in = trig_interpolant(2, 2, sample_torus(InterpolantFlavor::trig_I, 2, 2, [](auto) { return 1.0; }));
    EXPECT_THROW((void)in.evaluate(AlgebraicPoint(0.1, 0.2)), std::logic_error);
}

TEST(Symmetrization, AveragesSignFlips) {
    const SymmetrizationOperator p(2);
    const auto f = [](std::span<const double> x) { return x[0] + 2 * x[1] * x[1] + x[0] * x[1]; };
    const double x[2] = {0.3, -0.2};
    EXPECT_NEAR(p(f, std::span<const double>(x, 2)), 2 * 0.04, 1e-15);
    const auto pf = p.apply(f);
    EXPECT_NEAR(pf(std::span<const double>(x, 2)), 0.08, 1e-15);
}

TEST(FundamentalPoly, DeltaProperty) {
    for (int n = 1; n <= 6; ++n)
        EXPECT_LT(delta_property_error(2, n), 1e-12) << n;
    for (int n = 1; n <= 4; ++n)
        EXPECT_LT(delta_property_error(3, n), 1e-12) << n;
}

TEST(FundamentalPoly, AlgebraicChartMatchesTorusChart) {
    std::mt19937_64 g(4);
    const int n = 4;
    for (int p = 0; p < 20; ++p) {
        const auto x = rnd(g, 0.0, 0.5);
        const AlgebraicPoint t = cosine_map(TorusPoint(sp(x, 3)));
        for (const auto& k : generate_index_set(IndexSetKind::Xi, 3, n))
            EXPECT_NEAR(fundamental_poly(3, n, k, t), fundamental_poly(3, n, k, sp(x, 3)), 1e-12);
    }
}

TEST(FundamentalPoly, ClosedForm2D) {
    std::mt19937_64 g(5);
    for (int n = 1; n <= 8; ++n)
        EXPECT_LT(closed_form_error(n, 100, g), 1e-11) << n;
}

TEST(FundamentalPoly, RejectsForeignIndex) {
    const double x[2] = {0.1, 0.2};
    EXPECT_THROW(fundamental_poly(2, 3, IndexVector(-1, 0), std::span<const double>(x, 2)), std::domain_error);
    EXPECT_THROW(fundamental_poly(2, 3, IndexVector(1, 0), std::span<const double>(x, 2)), std::domain_error);
}

TEST(AlgebraicInterpolant, ReproducesBilinear) {
    const int n = 3;
    const auto f = [](std::span<const double> t) { return t[0] * t[1]; };
    const auto in = algebraic_interpolant(2, n, sample_algebraic(2, n, f));
    std::mt19937_64 g(6);
    for (int p = 0; p < 50; ++p) {
        const auto t = rnd(g, -1.0, 1.0);
        EXPECT_NEAR(in.evaluate(AlgebraicPoint(sp(t, 2))), f(sp(t, 2)), 1e-12);
    }
}

TEST(AlgebraicInterpolant, SpaceReproductionAndWitness) {
    std::mt19937_64 g(7);
    EXPECT_LT(reproduction_error(2, 4, 3, 50, g), 1e-11);
    EXPECT_LT(reproduction_error(3, 3, 3, 50, g), 1e-11);
    EXPECT_GT(nonreproduction_witness(2, 4, 50, g), 1e-3);
    EXPECT_GT(nonreproduction_witness(3, 3, 50, g), 1e-3);
}

// The class-constant space has exactly one degree of freedom per node.
TEST(AlgebraicInterpolant, SpaceDimensionMatchesNodeCount) {
    for (int dim : {2, 3})
        for (int n = 1; n <= (dim == 2 ? 8 : 5); ++n) {
            const auto freqs =
                generate_index_set(dim == 2 ? IndexSetKind::LambdaStar : IndexSetKind::LambdaDagStar, dim, n);
            const auto lattice = GeneratorMatrix::tiling(dim, n);
            std::set<std::set<IndexVector>> orbits;  // sign orbits of congruence classes
            for (const auto& nu : freqs) {
                std::set<IndexVector> orbit;
                for (int s = 0; s < (1 << dim); ++s) {
                    IndexVector m = nu;
                    for (int i = 0; i < dim; ++i)
                        if (s >> i & 1)
                            m[i] = -m[i];
                    for (const auto& c : congruence_class(m, freqs, lattice))
                        orbit.insert(c);
                }
                orbits.insert(orbit);
            }
            EXPECT_EQ(orbits.size(), generate_index_set(IndexSetKind::Xi, dim, n).size()) << dim << " " << n;
        }
}

TEST(AlgebraicInterpolant, OutputStaysInSpace) {
    std::mt19937_64 g(8);
    EXPECT_LT(space_membership_error(2, 4, g), 1e-12);
    EXPECT_LT(space_membership_error(3, 3, g), 1e-12);
}

TEST(LebesgueFunction, AtNodesIsOne) {
    const int n = 4;
    for (const auto& k : generate_index_set(IndexSetKind::Xi, 2, n)) {
        const double x[2] = {k[0] / (2.0 * n), k[1] / (2.0 * n)};
        EXPECT_NEAR(lebesgue_function(2, n, std::span<const double>(x, 2)), 1.0, 1e-12);
    }
}
