// SPDX-License-Identifier: MIT
#pragma once

// Brute-force ground truth. Nothing here calls the cubature, kernel or
// interpolation code; index sets come from lattice generation or from the
// enumerations below, and boundary weights from explicit case rules.

#include "latcub/index_vector.hpp"
#include "latcub/rational.hpp"

#include <array>
#include <complex>
#include <functional>
#include <map>
#include <span>
#include <vector>

namespace latcub::oracle {

enum class Weight { W0, W1 };

/// Normalized moment (1/pi^d) \int prod P_{j_i}(t_i) W(t) dt with P = T for
/// W0 and P = U for W1: 1 or 1/2^d at j = 0, otherwise 0.
/// Throws std::invalid_argument for negative indices.
Rational exact_moment(Weight w, std::span<const int> j);
Rational exact_moment(Weight w, const IndexVector& j);

/// Three-term recurrence for T_n / U_n.
double chebyshev_recurrence(bool second_kind, int degree, double t);

enum class KernelId {
    dirichlet_2d,   // 1/4 sum_{LambdaStar_n} e_nu(x)
    phi_star_2d,    // 1/(2n^2) sum_{LambdaStar_n} c_nu e_nu(x)
    phi_2d,         // 1/(2n^2) sum_{Lambda_n} e_nu(x)
    theta_step,     // sum over H*_n of e_j(t) (= Theta_{n+1} - Theta_n)
    odd_sum,        // sum over H_n^odd of e_j(t)
    dn_star_3d,     // sum_{LambdaDagStar_n} e_k(x)
    phi_star_3d,    // 1/(2n^3) sum_{LambdaDagStar_n} mu_k e_k(x)
    phi_3d,         // 1/(2n^3) sum_{LambdaDag_n} e_k(x)
};

/// Literal summation of the kernel's defining sum at the torus point x
/// (2 or 3 coordinates; theta_step and odd_sum take x and map it to
/// homogeneous coordinates themselves).
std::complex<double> direct_kernel_sum(KernelId id, int n, std::span<const double> x);

/// 2D boundary weight of a frequency nu in LambdaStar_n from the spatial case
/// table (1 inside, 1/2 on an edge, 1/4 at a vertex of k = (nu1+nu2, nu2-nu1)).
Rational c_tilde_2d(const IndexVector& nu, int n);

/// 3D weight of a homogeneous index j in G_n: with I (J) the coordinates
/// attaining the max (min) of j, the point is on the boundary iff
/// max - min = 4n, and then mu = 1 / binom(|I|+|J|, |I|); 1 otherwise.
Rational mu_homogeneous(const std::array<int, 4>& j, int n);

/// H*_n = {j in Z^4: sum 0, all j_i congruent mod 4, |j_a - j_b| <= 4n}.
std::vector<std::array<int, 4>> h_star_set(int n);
/// Elements of H*_n with odd coordinates.
std::vector<std::array<int, 4>> h_odd_set(int n);
/// Elements of H*_n with even coordinates (the image of LambdaDagStar_n).
std::vector<std::array<int, 4>> g_set(int n);

using Function = std::function<double(std::span<const double>)>;

/// Tensor Gauss-Chebyshev rule of the given order per axis for
/// (1/pi^d) \int f W. Throws std::invalid_argument if order < 1.
double reference_quadrature(const Function& f, int dim, int order, Weight w = Weight::W0);

/// Product-Chebyshev coefficients c_m of f = sum c_m prod T_{m_i}, for
/// 0 <= m_i <= resolution / 2, by first-kind Gauss quadrature of order
/// `resolution` (exact when resolution >= 2 * per-axis degree of f).
std::map<IndexVector, double> coefficient_extract(const Function& f, int dim, int resolution);

/// max |f| over the uniform tensor grid with `points` points per axis on [-1,1]^d.
double grid_max(const Function& f, int dim, int points);

}  // namespace latcub::oracle
