// SPDX-License-Identifier: MIT
#pragma once

#include "latcub/index_vector.hpp"
#include "latcub/kernels.hpp"
#include "latcub/transform.hpp"

#include <complex>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

namespace latcub {

enum class InterpolantFlavor {
    trig_I,      // samples on X, translates of Phi_n
    trig_Istar,  // samples on XStar, translates of PhiStar_n
    algebraic_L, // samples on Xi, fundamental polynomials
};

std::string_view to_string(InterpolantFlavor flavor);

using SampleMap = std::map<IndexVector, double>;

/// Immutable interpolant built from samples at the flavor's node set.
///
/// Trigonometric flavors are evaluated at torus points; the algebraic flavor
/// can be evaluated either at a torus point x (as the even trigonometric
/// polynomial) or at an algebraic point t = cos(2 pi x).
class Interpolant {
public:
    /// Throws std::invalid_argument if the sample keys differ from the node
    /// set; the message lists the missing and the extra keys.
    Interpolant(InterpolantFlavor flavor, int dim, int n, SampleMap samples, KernelEvalConfig cfg = {});

    [[nodiscard]] InterpolantFlavor flavor() const { return flavor_; }
    [[nodiscard]] int dim() const { return dim_; }
    [[nodiscard]] int n() const { return n_; }
    [[nodiscard]] const SampleMap& samples() const { return samples_; }

    /// Full complex value; only trig_I produces a nonzero imaginary part.
    [[nodiscard]] std::complex<double> evaluate_complex(std::span<const double> x) const;
    [[nodiscard]] double evaluate(std::span<const double> x) const;
    [[nodiscard]] double evaluate(const TorusPoint& x) const { return evaluate(x.coords()); }
    /// Algebraic flavor only.
    [[nodiscard]] double evaluate(const AlgebraicPoint& t) const;

private:
    InterpolantFlavor flavor_;
    int dim_;
    int n_;
    SampleMap samples_;
    KernelEvalConfig cfg_;
    std::vector<IndexVector> keys_;
    std::vector<double> values_;
    std::optional<TrigKernel> kernel_;
};

/// The node set an interpolant flavor samples on.
std::vector<IndexVector> interpolation_nodes(InterpolantFlavor flavor, int dim, int n);

Interpolant trig_interpolant(int dim, int n, SampleMap samples);
Interpolant sym_trig_interpolant(int dim, int n, SampleMap samples);
Interpolant algebraic_interpolant(int dim, int n, SampleMap samples);

/// Samples f(k/(2n)) (torus chart) over the flavor's node set.
SampleMap sample_torus(InterpolantFlavor flavor, int dim, int n,
                       const std::function<double(std::span<const double>)>& f);

/// Samples f(z_k), z_k = cos(k pi / n), over Xi_n.
SampleMap sample_algebraic(int dim, int n, const std::function<double(std::span<const double>)>& f);

/// Average over all 2^d coordinate sign flips of the argument.
class SymmetrizationOperator {
public:
    using Function = std::function<double(std::span<const double>)>;

    explicit SymmetrizationOperator(int dim);

    [[nodiscard]] int dim() const { return dim_; }
    [[nodiscard]] double operator()(const Function& f, std::span<const double> x) const;
    [[nodiscard]] Function apply(Function f) const;

private:
    int dim_;
};

/// ell_k(x) = lambda_k P[PhiStar_n( . - k/(2n))](x) for k in Xi_n, x a torus
/// point (any real vector). Throws std::domain_error if k is not in Xi_n.
double fundamental_poly(int dim, int n, const IndexVector& k, std::span<const double> x,
                        const KernelEvalConfig& cfg = {});

/// The same polynomial in the algebraic chart, ell*_k(t) = ell_k(x) with t = cos 2 pi x.
double fundamental_poly(int dim, int n, const IndexVector& k, const AlgebraicPoint& t,
                        const KernelEvalConfig& cfg = {});

/// 2D closed form in the algebraic chart:
///   (lambda_k / n^2) [ P(D_n + D_{n-1})(x - k/2n) - ((-1)^{k1} T_n(t1) + (-1)^{k2} T_n(t2)) / 4 ].
double fundamental_poly_2d_closed(int n, const IndexVector& k, const AlgebraicPoint& t);

/// Lebesgue function sum_k |ell_k(x)| by direct kernel evaluation.
double lebesgue_function(int dim, int n, std::span<const double> x, const KernelEvalConfig& cfg = {});

struct LebesgueEstimate {
    double value;         // max of the two below
    double grid_max;      // over the half-cell-offset tensor grid
    double node_grid_max; // over the node grid {0..n}/(2n) per axis
};

/// Lower bound on the Lebesgue constant of the algebraic interpolant: the
/// max of sum_k |ell_k| over x_i = (i + 1/2)/(2G), i < G, on [0, 1/2]^d and
/// over the node grid. Uses the cosine expansion of ell_k with
/// sum factorization. Throws std::invalid_argument if G < 4n.
LebesgueEstimate lebesgue_estimate(int dim, int n, int grid_per_axis);

}  // namespace latcub
