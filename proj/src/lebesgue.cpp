// SPDX-License-Identifier: MIT
#include "latcub/interpolation.hpp"
#include "latcub/lattice.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace latcub {

namespace {

// Row-major (m, i) table of cos(2 pi m x_i).
std::vector<double> cos_table(int n, const std::vector<double>& xs) {
    const std::size_t g = xs.size();
    std::vector<double> c(static_cast<std::size_t>(n + 1) * g);
    for (int m = 0; m <= n; ++m)
        for (std::size_t i = 0; i < g; ++i)
            c[static_cast<std::size_t>(m) * g + i] = std::cos(2.0 * std::numbers::pi * m * xs[i]);
    return c;
}

// Everything that does not depend on the evaluation grid:
// ell_k(x) = sum_m a_k[m] prod_i cos(2 pi m_i x_i) with
// a_k[m] = lambda_k / (2 n^d) * w[m] * prod_i cos(pi m_i k_i / n),
// w[m] the summed frequency weights over the sign images of m.
struct Expansion {
    int dim;
    int n;
    std::vector<IndexVector> nodes;
    std::vector<double> scale;   // lambda_k / (2 n^d)
    std::vector<double> weight;  // w[m], dense over [0, n]^d
    std::vector<double> kcos;    // cos(pi m k / n), (m, k) row-major
};

Expansion build_expansion(int dim, int n) {
    Expansion e{dim, n, generate_index_set(IndexSetKind::Xi, dim, n), {}, {}, {}};
    const std::size_t side = static_cast<std::size_t>(n + 1);
    e.weight.assign(dim == 2 ? side * side : side * side * side, 0.0);
    const auto freqs = generate_index_set(dim == 2 ? IndexSetKind::LambdaStar : IndexSetKind::LambdaDagStar, dim, n);
    for (const auto& v : freqs) {
        std::size_t idx = 0;
        for (int i = 0; i < dim; ++i)
            idx = idx * side + static_cast<std::size_t>(std::abs(v[i]));
        e.weight[idx] += to_double(frequency_weight(v, n));
    }
    double nd = 2.0;
    for (int i = 0; i < dim; ++i)
        nd *= n;
    for (const auto& k : e.nodes)
        e.scale.push_back(to_double(lambda_weight(k, n)) / nd);
    e.kcos.resize(side * side);
    for (int m = 0; m <= n; ++m)
        for (int k = 0; k <= n; ++k)
            e.kcos[static_cast<std::size_t>(m) * side + static_cast<std::size_t>(k)] =
                std::cos(std::numbers::pi * m * k / n);
    return e;
}

double sweep_2d(const Expansion& e, const std::vector<double>& xs) {
    const int n = e.n;
    const std::size_t side = static_cast<std::size_t>(n + 1);
    const std::size_t g = xs.size();
    const auto c = cos_table(n, xs);
    std::vector<double> leb(g * g, 0.0), a(side * side), t1(side * g), val(g * g);
    for (std::size_t q = 0; q < e.nodes.size(); ++q) {
        const IndexVector& k = e.nodes[q];
        for (std::size_t m1 = 0; m1 < side; ++m1)
            for (std::size_t m2 = 0; m2 < side; ++m2)
                a[m1 * side + m2] = e.scale[q] * e.weight[m1 * side + m2] *
                                    e.kcos[m1 * side + static_cast<std::size_t>(k[0])] *
                                    e.kcos[m2 * side + static_cast<std::size_t>(k[1])];
        std::fill(t1.begin(), t1.end(), 0.0);
        for (std::size_t m1 = 0; m1 < side; ++m1)
            for (std::size_t m2 = 0; m2 < side; ++m2) {
                const double am = a[m1 * side + m2];
                if (am == 0.0)
                    continue;
                for (std::size_t i2 = 0; i2 < g; ++i2)
                    t1[m1 * g + i2] += am * c[m2 * g + i2];
            }
        std::fill(val.begin(), val.end(), 0.0);
        for (std::size_t m1 = 0; m1 < side; ++m1)
            for (std::size_t i1 = 0; i1 < g; ++i1) {
                const double cm = c[m1 * g + i1];
                for (std::size_t i2 = 0; i2 < g; ++i2)
                    val[i1 * g + i2] += cm * t1[m1 * g + i2];
            }
        for (std::size_t i = 0; i < val.size(); ++i)
            leb[i] += std::abs(val[i]);
    }
    return *std::max_element(leb.begin(), leb.end());
}

double sweep_3d(const Expansion& e, const std::vector<double>& xs) {
    const int n = e.n;
    const std::size_t side = static_cast<std::size_t>(n + 1);
    const std::size_t g = xs.size();
    const std::size_t gg = g * g;
    const auto c = cos_table(n, xs);
    std::vector<double> leb(gg * g, 0.0), a(side * side * side), t1(side * side * g), t2(side * gg), val(gg * g);
    for (std::size_t q = 0; q < e.nodes.size(); ++q) {
        const IndexVector& k = e.nodes[q];
        const auto kc = [&](std::size_t m, int i) { return e.kcos[m * side + static_cast<std::size_t>(k[i])]; };
        for (std::size_t m1 = 0; m1 < side; ++m1)
            for (std::size_t m2 = 0; m2 < side; ++m2)
                for (std::size_t m3 = 0; m3 < side; ++m3) {
                    const std::size_t idx = (m1 * side + m2) * side + m3;
                    a[idx] = e.weight[idx] == 0.0 ? 0.0 : e.scale[q] * e.weight[idx] * kc(m1, 0) * kc(m2, 1) * kc(m3, 2);
                }
        // contract m3 -> i3
        std::fill(t1.begin(), t1.end(), 0.0);
        for (std::size_t m12 = 0; m12 < side * side; ++m12)
            for (std::size_t m3 = 0; m3 < side; ++m3) {
                const double am = a[m12 * side + m3];
                if (am == 0.0)
                    continue;
                for (std::size_t i3 = 0; i3 < g; ++i3)
                    t1[m12 * g + i3] += am * c[m3 * g + i3];
            }
        // contract m2 -> i2
        std::fill(t2.begin(), t2.end(), 0.0);
        for (std::size_t m1 = 0; m1 < side; ++m1)
            for (std::size_t m2 = 0; m2 < side; ++m2) {
                const double* row = &t1[(m1 * side + m2) * g];
                for (std::size_t i2 = 0; i2 < g; ++i2) {
                    const double cm = c[m2 * g + i2];
                    double* out = &t2[m1 * gg + i2 * g];
                    for (std::size_t i3 = 0; i3 < g; ++i3)
                        out[i3] += cm * row[i3];
                }
            }
        // contract m1 -> i1
        std::fill(val.begin(), val.end(), 0.0);
        for (std::size_t m1 = 0; m1 < side; ++m1) {
            const double* plane = &t2[m1 * gg];
            for (std::size_t i1 = 0; i1 < g; ++i1) {
                const double cm = c[m1 * g + i1];
                double* out = &val[i1 * gg];
                for (std::size_t j = 0; j < gg; ++j)
                    out[j] += cm * plane[j];
            }
        }
        for (std::size_t i = 0; i < val.size(); ++i)
            leb[i] += std::abs(val[i]);
    }
    return *std::max_element(leb.begin(), leb.end());
}

}  // namespace

LebesgueEstimate lebesgue_estimate(int dim, int n, int grid_per_axis) {
    require_dim(dim);
    if (n < 1)
        throw std::invalid_argument("lebesgue_estimate needs n >= 1");
    if (grid_per_axis < 4 * n)
        throw std::invalid_argument("grid_per_axis must be at least 4n (got " + std::to_string(grid_per_axis) +
                                    " for n = " + std::to_string(n) + ")");
    const Expansion e = build_expansion(dim, n);
    std::vector<double> offset(static_cast<std::size_t>(grid_per_axis));
    for (int i = 0; i < grid_per_axis; ++i)
        offset[static_cast<std::size_t>(i)] = (i + 0.5) / (2.0 * grid_per_axis);
    std::vector<double> node_grid(static_cast<std::size_t>(n + 1));
    for (int i = 0; i <= n; ++i)
        node_grid[static_cast<std::size_t>(i)] = i / (2.0 * n);
    const auto sweep = dim == 2 ? sweep_2d : sweep_3d;
    LebesgueEstimate r{};
    r.grid_max = sweep(e, offset);
    r.node_grid_max = sweep(e, node_grid);
    r.value = std::max(r.grid_max, r.node_grid_max);
    return r;
}

}  // namespace latcub
