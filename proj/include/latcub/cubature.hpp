// SPDX-License-Identifier: MIT
#pragma once

#include "latcub/index_vector.hpp"
#include "latcub/rational.hpp"

#include <array>
#include <complex>
#include <functional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace latcub {

enum class WeightKind {
    trig_sym,    // symmetric trigonometric rule on XStar with boundary weights
    trig_equal,  // equal-weight (Chebyshev) trigonometric rule on X
    W0,          // product Chebyshev weight of the first kind
    W1,          // product Chebyshev weight of the second kind
};

std::string_view to_string(WeightKind kind);
/// Accepts both the enum spelling and the CLI spelling (trig-sym, w0, ...).
WeightKind parse_weight_kind(std::string_view s);

/// Set of multi-indices on which a rule is claimed exact.
///
/// total_degree:   m_1 + ... + m_d <= degree
/// pairwise_sum:   m_a + m_b <= degree for every pair (the 3D space Pi*)
/// trig_frequency: exponentials e_m with m in the closed frequency set of the
///                 given degree (LambdaStar in 2D, LambdaDagStar in 3D)
struct ExactnessClass {
    enum class Kind { total_degree, pairwise_sum, trig_frequency };
    Kind kind;
    int degree;

    [[nodiscard]] bool contains(std::span<const int> m) const;
    [[nodiscard]] std::string describe() const;
    static ExactnessClass parse(const std::string& description);

    friend bool operator==(const ExactnessClass&, const ExactnessClass&) = default;
};

/// A materialized cubature rule: value = normalization * sum_i weights[i] f(nodes[i]).
///
/// Trigonometric rules have torus nodes k/(2n); algebraic rules have nodes
/// z_k = (cos(k_1 pi/n), ...). node_indices holds the integer k of each node.
/// W1 weights are products of sin^2(k_i pi / n) and have no exact rational
/// form, so exact_weights is empty for W1 and filled for the other kinds.
struct CubatureRule {
    int dim = 2;
    int n = 0;
    WeightKind kind = WeightKind::W0;
    std::vector<IndexVector> node_indices;
    std::vector<std::array<double, 3>> nodes;
    std::vector<double> weights;
    std::vector<Rational> exact_weights;
    Rational normalization{1};
    ExactnessClass exactness{ExactnessClass::Kind::total_degree, 0};

    [[nodiscard]] std::size_t size() const { return nodes.size(); }
    [[nodiscard]] std::span<const double> node(std::size_t i) const {
        return {nodes[i].data(), static_cast<std::size_t>(dim)};
    }
};

using Integrand = std::function<double(std::span<const double>)>;
using ComplexIntegrand = std::function<std::complex<double>(std::span<const double>)>;

/// Thrown by apply when the integrand fails at a node; carries the node index.
class NodeEvaluationError : public std::runtime_error {
public:
    NodeEvaluationError(const IndexVector& node, const std::string& what);
    [[nodiscard]] const IndexVector& node() const { return node_; }

private:
    IndexVector node_;
};

/// Trigonometric rule exact for e_j, j in the closed frequency set of degree 2n-1.
/// symmetric: nodes k/(2n), k in XStar, weights c_k; equal weight: k in X, weights 1.
/// Normalization 1/(2n^d). Requires n >= 2.
CubatureRule trig_rule(int dim, int n, bool symmetric);

/// First-kind rule for (1/pi^d) \int f W0: nodes z_k, k in Xi, weights lambda_k,
/// normalization 1/(2n^d). Requires n >= 2.
CubatureRule w0_rule(int dim, int n);

/// Second-kind rule for (1/pi^d) \int f W1: interior nodes only (0 < k_i < n),
/// weights prod sin^2(k_i pi/n), normalization 2/n^2 (2D) or 4/n^3 (3D).
/// Requires n >= 3.
CubatureRule w1_rule(int dim, int n);

/// Builds any of the four families by kind.
CubatureRule make_rule(WeightKind kind, int dim, int n);

double apply(const CubatureRule& rule, const Integrand& f);
std::complex<double> apply(const CubatureRule& rule, const ComplexIntegrand& f);

/// The 2D first-kind rule written in its explicit even/odd form, as a
/// separate evaluation path: for n = 2m a doubly-halved sum over the even
/// grid plus the odd grid; for n = 2m+1 two first-term-halved sums.
/// Requires n >= 2.
double w0_apply_split_2d(int n, const Integrand& f);

}  // namespace latcub
