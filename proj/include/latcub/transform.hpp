// SPDX-License-Identifier: MIT
#pragma once

#include "latcub/index_vector.hpp"

#include <array>
#include <span>

namespace latcub {

/// Which coordinate chart a cube point lives in. Torus points are the
/// periodic variables x in [-1/2, 1/2]^d; algebraic points are t in [-1, 1]^d
/// with t_i = cos(2 pi x_i).
enum class Chart { torus, algebraic };

template <Chart C>
class CubePoint {
public:
    CubePoint(double a, double b) : dim_(2), c_{a, b, 0.0} { check(); }
    CubePoint(double a, double b, double c) : dim_(3), c_{a, b, c} { check(); }
    explicit CubePoint(std::span<const double> coords);

    [[nodiscard]] int dim() const { return dim_; }
    [[nodiscard]] double operator[](int i) const { return c_[static_cast<std::size_t>(i)]; }
    [[nodiscard]] std::span<const double> coords() const { return {c_.data(), static_cast<std::size_t>(dim_)}; }

private:
    void check() const;

    int dim_;
    std::array<double, 3> c_;
};

using TorusPoint = CubePoint<Chart::torus>;
using AlgebraicPoint = CubePoint<Chart::algebraic>;

extern template class CubePoint<Chart::torus>;
extern template class CubePoint<Chart::algebraic>;

/// cos(k pi / n), evaluated as sin(pi (n - 2k) / (2n)) so the node set is
/// exactly symmetric and the midpoint is exactly zero.
double chebyshev_node(int k, int n);

/// t_i = cos(2 pi x_i).
AlgebraicPoint cosine_map(const TorusPoint& x);

/// Inverse of cosine_map onto the nonnegative half [0, 1/2]^d.
TorusPoint arccos_map(const AlgebraicPoint& t);

/// Index change k = 2n B^{-T} j for the rhombus generator: k = (j1+j2, j2-j1).
/// It maps Lambda_n onto X_n and LambdaStar_n onto XStar_n.
IndexVector index_map_2d(const IndexVector& j);

/// Inverse of index_map_2d; throws std::domain_error when k1+k2 is odd.
IndexVector index_map_2d_inverse(const IndexVector& k);

/// Index change k = 2n B^{-T} j for the fcc generator:
/// k = (-j1+j2+j3, j1-j2+j3, j1+j2-j3).
IndexVector index_map_3d(const IndexVector& j);

/// Inverse j = (k2+k3, k1+k3, k1+k2)/2; throws std::domain_error unless all
/// pair sums are even.
IndexVector index_map_3d_inverse(const IndexVector& k);

/// Point of the zero-sum hyperplane of R^4.
class HomogeneousPoint {
public:
    static constexpr double sum_tolerance = 1e-14;

    /// Throws std::domain_error if |t1+t2+t3+t4| exceeds sum_tolerance.
    HomogeneousPoint(double t1, double t2, double t3, double t4);

    [[nodiscard]] double operator[](int i) const { return t_[static_cast<std::size_t>(i)]; }
    [[nodiscard]] const std::array<double, 4>& coords() const { return t_; }

private:
    std::array<double, 4> t_;
};

/// x -> t with t1 = (-x1+x2+x3)/2, t2 = (x1-x2+x3)/2, t3 = (x1+x2-x3)/2,
/// t4 = -(x1+x2+x3)/2. Accepts any real x (the kernels are periodic).
HomogeneousPoint to_homogeneous(std::span<const double> x);
HomogeneousPoint to_homogeneous(const TorusPoint& x);

/// t -> x with x1 = t2+t3, x2 = t1+t3, x3 = t1+t2.
std::array<double, 3> from_homogeneous(const HomogeneousPoint& t);

/// Integer homogeneous image of a 3D frequency:
/// (2(-k1+k2+k3), 2(k1-k2+k3), 2(k1+k2-k3), -2(k1+k2+k3)), so that
/// k . x = (j . t) / 4.
std::array<int, 4> hom_index_map(const IndexVector& k);

/// Inverse of hom_index_map; throws std::domain_error if j is not an image.
IndexVector hom_index_inverse(const std::array<int, 4>& j);

enum class ChebyshevKind { first, second };

/// T_degree(t) = cos(degree theta) or U_degree(t) = sin((degree+1) theta) / sin theta,
/// t = cos theta, evaluated through the angle. Throws std::domain_error for |t| > 1.
double chebyshev_eval(ChebyshevKind kind, int degree, double t);

}  // namespace latcub
