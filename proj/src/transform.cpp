// SPDX-License-Identifier: MIT
#include "latcub/transform.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace latcub {

template <Chart C>
CubePoint<C>::CubePoint(std::span<const double> coords) : dim_(static_cast<int>(coords.size())), c_{0.0, 0.0, 0.0} {
    require_dim(dim_);
    for (std::size_t i = 0; i < coords.size(); ++i)
        c_[i] = coords[i];
    check();
}

template <Chart C>
void CubePoint<C>::check() const {
    const double bound = C == Chart::torus ? 0.5 : 1.0;
    for (int i = 0; i < dim_; ++i) {
        const double v = c_[static_cast<std::size_t>(i)];
        if (!(std::abs(v) <= bound))
            throw std::domain_error(std::string(C == Chart::torus ? "torus" : "algebraic") + " coordinate " +
                                    std::to_string(v) + " outside [-" + std::to_string(bound) + ", " +
                                    std::to_string(bound) + "]");
    }
}

template class CubePoint<Chart::torus>;
template class CubePoint<Chart::algebraic>;

double chebyshev_node(int k, int n) {
    return std::sin(std::numbers::pi * (n - 2 * k) / (2.0 * n));
}

AlgebraicPoint cosine_map(const TorusPoint& x) {
    std::array<double, 3> t{};
    for (int i = 0; i < x.dim(); ++i)
        t[static_cast<std::size_t>(i)] = std::cos(2.0 * std::numbers::pi * x[i]);
    return AlgebraicPoint(std::span<const double>(t.data(), static_cast<std::size_t>(x.dim())));
}

TorusPoint arccos_map(const AlgebraicPoint& t) {
    std::array<double, 3> x{};
    for (int i = 0; i < t.dim(); ++i)
        x[static_cast<std::size_t>(i)] = std::acos(t[i]) / (2.0 * std::numbers::pi);
    return TorusPoint(std::span<const double>(x.data(), static_cast<std::size_t>(t.dim())));
}

IndexVector index_map_2d(const IndexVector& j) {
    if (j.dim() != 2)
        throw std::invalid_argument("index_map_2d needs a 2D index");
    return {j[0] + j[1], j[1] - j[0]};
}

IndexVector index_map_2d_inverse(const IndexVector& k) {
    if (k.dim() != 2)
        throw std::invalid_argument("index_map_2d_inverse needs a 2D index");
    if ((k[0] + k[1]) % 2 != 0)
        throw std::domain_error("index_map_2d_inverse: k1+k2 is odd for " + k.to_string());
    return {(k[0] - k[1]) / 2, (k[0] + k[1]) / 2};
}

IndexVector index_map_3d(const IndexVector& j) {
    if (j.dim() != 3)
        throw std::invalid_argument("index_map_3d needs a 3D index");
    return {-j[0] + j[1] + j[2], j[0] - j[1] + j[2], j[0] + j[1] - j[2]};
}

IndexVector index_map_3d_inverse(const IndexVector& k) {
    if (k.dim() != 3)
        throw std::invalid_argument("index_map_3d_inverse needs a 3D index");
    const int s23 = k[1] + k[2], s13 = k[0] + k[2], s12 = k[0] + k[1];
    if (s23 % 2 != 0 || s13 % 2 != 0 || s12 % 2 != 0)
        throw std::domain_error("index_map_3d_inverse: mixed parity in " + k.to_string());
    return {s23 / 2, s13 / 2, s12 / 2};
}

HomogeneousPoint::HomogeneousPoint(double t1, double t2, double t3, double t4) : t_{t1, t2, t3, t4} {
    const double s = t1 + t2 + t3 + t4;
    if (!(std::abs(s) <= sum_tolerance))
        throw std::domain_error("homogeneous coordinates must sum to zero (sum = " + std::to_string(s) + ")");
}

HomogeneousPoint to_homogeneous(std::span<const double> x) {
    if (x.size() != 3)
        throw std::invalid_argument("homogeneous coordinates are defined for 3D points");
    const double t1 = 0.5 * (-x[0] + x[1] + x[2]);
    const double t2 = 0.5 * (x[0] - x[1] + x[2]);
    const double t3 = 0.5 * (x[0] + x[1] - x[2]);
    // t4 closes the sum exactly in floating point
    const double t4 = -((t1 + t2) + t3);
    return {t1, t2, t3, t4};
}

HomogeneousPoint to_homogeneous(const TorusPoint& x) {
    return to_homogeneous(x.coords());
}

std::array<double, 3> from_homogeneous(const HomogeneousPoint& t) {
    return {t[1] + t[2], t[0] + t[2], t[1] + t[0]};
}

std::array<int, 4> hom_index_map(const IndexVector& k) {
    if (k.dim() != 3)
        throw std::invalid_argument("hom_index_map needs a 3D index");
    return {2 * (-k[0] + k[1] + k[2]), 2 * (k[0] - k[1] + k[2]), 2 * (k[0] + k[1] - k[2]),
            2 * (-k[0] - k[1] - k[2])};
}

IndexVector hom_index_inverse(const std::array<int, 4>& j) {
    // j1+j2 = 4 k3, j1+j3 = 4 k2, j2+j3 = 4 k1
    const int a = j[1] + j[2], b = j[0] + j[2], c = j[0] + j[1];
    if (j[0] + j[1] + j[2] + j[3] != 0 || a % 4 != 0 || b % 4 != 0 || c % 4 != 0)
        throw std::domain_error("hom_index_inverse: not the image of an integer frequency");
    return {a / 4, b / 4, c / 4};
}

double chebyshev_eval(ChebyshevKind kind, int degree, double t) {
    if (degree < 0)
        throw std::invalid_argument("Chebyshev degree must be nonnegative");
    if (!(std::abs(t) <= 1.0))
        throw std::domain_error("chebyshev_eval: |t| > 1 (t = " + std::to_string(t) + ")");
    // reflect to t >= 0 so the angle is computed away from pi
    const double phi = std::acos(std::abs(t));
    const double sign = (t < 0.0 && degree % 2 == 1) ? -1.0 : 1.0;
    if (kind == ChebyshevKind::first)
        return sign * std::cos(degree * phi);
    const double m = degree + 1.0;
    if (phi < 1e-8)
        return sign * m * (1.0 - (m * m - 1.0) * phi * phi / 6.0);
    return sign * std::sin(m * phi) / std::sin(phi);
}

}  // namespace latcub
