// SPDX-License-Identifier: MIT
#pragma once

#include "latcub/index_vector.hpp"
#include "latcub/transform.hpp"

#include <complex>
#include <span>
#include <vector>

namespace latcub {

/// How the closed forms treat a vanishing denominator.
///
/// Ratio forms (the 2D Dirichlet kernel and the 3D x-form) switch to the
/// fallback once the denominator magnitude drops below singular_threshold:
/// direct_sum evaluates the defining exponential sum, limit_formula uses an
/// equivalent product form whose factors have removable singularities.
/// Product forms (Theta and friends) always reduce each factor to its
/// nearest singular point and use the series limit below the threshold.
struct KernelEvalConfig {
    enum class Fallback { direct_sum, limit_formula };

    double singular_threshold = 1e-8;
    Fallback fallback = Fallback::direct_sum;

    /// Throws std::invalid_argument unless the threshold is positive.
    void validate() const;
};

// Kernel arguments are arbitrary real vectors: differences of torus points
// leave [-1/2, 1/2]^d and every kernel here is 1-periodic.

/// D_n(x) = 1/4 sum_{nu in LambdaStar_n} e_nu(x) via the ratio closed form.
double dirichlet_2d(int n, std::span<const double> x, const KernelEvalConfig& cfg = {});
double dirichlet_2d(int n, const TorusPoint& x, const KernelEvalConfig& cfg = {});

/// The same kernel as 1/4 [S_{n+1}(u) S_{n+1}(v) + S_n(u) S_n(v)],
/// u = x1 + x2, v = x1 - x2, S_m(u) = sin(m pi u) / sin(pi u).
double dirichlet_2d_product(int n, std::span<const double> x, double threshold = 1e-8);

/// PhiStar_n(x) = 1/(2n^2) sum_{LambdaStar_n} c_nu e_nu(x), evaluated as
/// [2 (D_n + D_{n-1}) - (cos 2 pi n x1 + cos 2 pi n x2) / 2] / (2n^2). n >= 1.
double phi_star_2d(int n, std::span<const double> x, const KernelEvalConfig& cfg = {});
double phi_star_2d(int n, const TorusPoint& x, const KernelEvalConfig& cfg = {});

/// Theta_n(t) = prod_{i=1}^4 sin(pi n t_i) / sin(pi t_i); 0 for n <= 0.
double theta(int n, const HomogeneousPoint& t, double threshold = 1e-8);

/// Odd-index closed form: for even n
///   prod sin((n+2) pi t_i) / sin(2 pi t_i) * sum_j sin(n pi t_j) / sin((n+2) pi t_j),
/// for odd n
///   prod sin((n+1) pi t_i) / sin(2 pi t_i) * sum_j sin((n+3) pi t_j) / sin((n+1) pi t_j),
/// evaluated as sum_j prod_{i != j} so every factor has a removable singularity.
/// 0 for n <= 0.
double theta_odd(int n, const HomogeneousPoint& t, double threshold = 1e-8);

/// D*_n(t) = sum over the closed rhombic dodecahedron of e_k(x)
///        = Theta_{n+1} - Theta_n - (ThetaOdd_n - ThetaOdd_{n-2}); 1 for n = 0.
double dn_star_3d(int n, const HomogeneousPoint& t, double threshold = 1e-8);
double dn_star_3d(int n, std::span<const double> x, double threshold = 1e-8);

/// The same kernel through the cosine-ratio x-form, with fallback per cfg
/// near vanishing denominators.
double dn_star_3d_x(int n, std::span<const double> x, const KernelEvalConfig& cfg = {});
double dn_star_3d_x(int n, const TorusPoint& x, const KernelEvalConfig& cfg = {});

/// PhiStar_n(x) = 1/(2n^3) sum_{LambdaDagStar_n} mu_nu e_nu(x), via
///   1/(2n^3) [ (D*_n + D*_{n-1})/2 - E12/3 - E22/3 - E13/2 ]
/// with the boundary corrections written in homogeneous coordinates. n >= 1.
double phi_star_3d(int n, std::span<const double> x, const KernelEvalConfig& cfg = {});
double phi_star_3d(int n, const TorusPoint& x, const KernelEvalConfig& cfg = {});

/// Symmetric kernel of either dimension.
double phi_star(int dim, int n, std::span<const double> x, const KernelEvalConfig& cfg = {});

/// The unsymmetric kernel Phi_n(x) = 1/(2n^d) sum_{nu in F} e_nu(x) with
/// F = Lambda_n (2D) or LambdaDag_n (3D). The frequency set is enumerated
/// once at construction.
class TrigKernel {
public:
    TrigKernel(int dim, int n);

    [[nodiscard]] int dim() const { return dim_; }
    [[nodiscard]] int n() const { return n_; }
    [[nodiscard]] std::complex<double> operator()(std::span<const double> x) const;

private:
    int dim_;
    int n_;
    std::vector<IndexVector> freqs_;
};

std::complex<double> phi_2d(int n, std::span<const double> x);
std::complex<double> phi_3d(int n, std::span<const double> x);

}  // namespace latcub
