// SPDX-License-Identifier: MIT
#include "latcub/oracle.hpp"

#include "latcub/lattice.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <stdexcept>
#include <string>

namespace latcub::oracle {

namespace {

constexpr double pi = std::numbers::pi;

void require_dim_len(std::span<const double> x, std::size_t d, const char* what) {
    if (x.size() != d)
        throw std::invalid_argument(std::string(what) + " expects a " + std::to_string(d) + "D point");
}

std::array<double, 4> homogeneous(std::span<const double> x) {
    return {0.5 * (-x[0] + x[1] + x[2]), 0.5 * (x[0] - x[1] + x[2]), 0.5 * (x[0] + x[1] - x[2]),
            -0.5 * (x[0] + x[1] + x[2])};
}

std::complex<double> e_x(const IndexVector& v, std::span<const double> x) {
    double dot = 0.0;
    for (int i = 0; i < v.dim(); ++i)
        dot += v[i] * x[static_cast<std::size_t>(i)];
    return std::polar(1.0, 2.0 * pi * dot);
}

std::complex<double> e_t(const std::array<int, 4>& j, const std::array<double, 4>& t) {
    double dot = 0.0;
    for (std::size_t i = 0; i < 4; ++i)
        dot += j[i] * t[i];
    return std::polar(1.0, 0.5 * pi * dot);
}

// Plain pairwise reduction keeps the oracle's rounding independent of the
// compensated accumulators used in the library.
std::complex<double> pairwise_sum(std::vector<std::complex<double>>& v) {
    if (v.empty())
        return 0.0;
    for (std::size_t width = 1; width < v.size(); width *= 2)
        for (std::size_t i = 0; i + width < v.size(); i += 2 * width)
            v[i] += v[i + width];
    return v[0];
}

}  // namespace

Rational exact_moment(Weight w, std::span<const int> j) {
    Rational r(1);
    for (int v : j) {
        if (v < 0)
            throw std::invalid_argument("moment indices must be nonnegative");
        if (v != 0)
            return Rational(0);
        // (1/pi) \int T_0 w_0 = 1, (1/pi) \int U_0 w_1 = 1/2
        if (w == Weight::W1)
            r *= Rational(1, 2);
    }
    return r;
}

Rational exact_moment(Weight w, const IndexVector& j) {
    return exact_moment(w, std::span<const int>(j.begin(), j.end()));
}

double chebyshev_recurrence(bool second_kind, int degree, double t) {
    if (degree < 0)
        throw std::invalid_argument("degree must be nonnegative");
    double p0 = 1.0;
    double p1 = second_kind ? 2.0 * t : t;
    if (degree == 0)
        return p0;
    for (int k = 1; k < degree; ++k) {
        const double p2 = 2.0 * t * p1 - p0;
        p0 = p1;
        p1 = p2;
    }
    return p1;
}

// ---------------------------------------------------------------------------
// Weights from explicit case rules

Rational c_tilde_2d(const IndexVector& nu, int n) {
    const int k1 = nu[0] + nu[1];
    const int k2 = nu[1] - nu[0];
    if (std::abs(k1) > n || std::abs(k2) > n)
        throw std::domain_error("c_tilde_2d: " + nu.to_string() + " outside LambdaStar");
    const int on_edge = (std::abs(k1) == n) + (std::abs(k2) == n);
    return on_edge == 0 ? Rational(1) : on_edge == 1 ? Rational(1, 2) : Rational(1, 4);
}

Rational mu_homogeneous(const std::array<int, 4>& j, int n) {
    const int hi = *std::max_element(j.begin(), j.end());
    const int lo = *std::min_element(j.begin(), j.end());
    if (hi - lo > 4 * n)
        throw std::domain_error("mu_homogeneous: index outside G_n");
    if (hi - lo < 4 * n)
        return Rational(1);
    const int ni = static_cast<int>(std::count(j.begin(), j.end(), hi));
    const int nj = static_cast<int>(std::count(j.begin(), j.end(), lo));
    // binom(ni + nj, ni) for ni + nj <= 4
    std::int64_t b = 1;
    for (int i = 1; i <= ni; ++i)
        b = b * (nj + i) / i;
    return Rational(1, b);
}

// ---------------------------------------------------------------------------
// Homogeneous index sets

namespace {

enum class HPart { all, odd, even };

std::vector<std::array<int, 4>> enumerate_h(int n, HPart part) {
    if (n < 0)
        throw std::invalid_argument("H sets need n >= 0");
    std::vector<std::array<int, 4>> out;
    const int r = 3 * n + 3;
    const auto mod4 = [](int a) { return ((a % 4) + 4) % 4; };
    for (int a = -r; a <= r; ++a)
        for (int b = -r; b <= r; ++b)
            for (int c = -r; c <= r; ++c) {
                const std::array<int, 4> j{a, b, c, -(a + b + c)};
                const int m = mod4(j[3]);
                if (mod4(a) != m || mod4(b) != m || mod4(c) != m)
                    continue;
                const int hi = *std::max_element(j.begin(), j.end());
                const int lo = *std::min_element(j.begin(), j.end());
                if (hi - lo > 4 * n)
                    continue;
                const bool odd = (m % 2) != 0;
                if ((part == HPart::odd && !odd) || (part == HPart::even && odd))
                    continue;
                out.push_back(j);
            }
    return out;
}

const std::vector<std::array<int, 4>>& cached_h(int n, HPart part) {
    thread_local std::map<std::pair<int, int>, std::vector<std::array<int, 4>>> cache;
    const auto key = std::make_pair(n, static_cast<int>(part));
    auto it = cache.find(key);
    if (it == cache.end())
        it = cache.emplace(key, enumerate_h(n, part)).first;
    return it->second;
}

const std::vector<IndexVector>& cached_set(IndexSetKind kind, int dim, int n) {
    thread_local std::map<std::array<int, 3>, std::vector<IndexVector>> cache;
    const std::array<int, 3> key{static_cast<int>(kind), dim, n};
    auto it = cache.find(key);
    if (it == cache.end())
        it = cache.emplace(key, generate_index_set(kind, dim, n)).first;
    return it->second;
}

}  // namespace

std::vector<std::array<int, 4>> h_star_set(int n) {
    return enumerate_h(n, HPart::all);
}

std::vector<std::array<int, 4>> h_odd_set(int n) {
    return enumerate_h(n, HPart::odd);
}

std::vector<std::array<int, 4>> g_set(int n) {
    return enumerate_h(n, HPart::even);
}

// ---------------------------------------------------------------------------
// Direct sums

std::complex<double> direct_kernel_sum(KernelId id, int n, std::span<const double> x) {
    std::vector<std::complex<double>> terms;
    double scale = 1.0;
    switch (id) {
    case KernelId::dirichlet_2d:
        require_dim_len(x, 2, "dirichlet_2d");
        for (const auto& v : cached_set(IndexSetKind::LambdaStar, 2, n))
            terms.push_back(e_x(v, x));
        scale = 0.25;
        break;
    case KernelId::phi_star_2d:
        require_dim_len(x, 2, "phi_star_2d");
        for (const auto& v : cached_set(IndexSetKind::LambdaStar, 2, n))
            terms.push_back(to_double(c_tilde_2d(v, n)) * e_x(v, x));
        scale = 1.0 / (2.0 * n * n);
        break;
    case KernelId::phi_2d:
        require_dim_len(x, 2, "phi_2d");
        for (const auto& v : cached_set(IndexSetKind::Lambda, 2, n))
            terms.push_back(e_x(v, x));
        scale = 1.0 / (2.0 * n * n);
        break;
    case KernelId::theta_step:
    case KernelId::odd_sum: {
        require_dim_len(x, 3, "homogeneous sums");
        const auto t = homogeneous(x);
        for (const auto& j : cached_h(n, id == KernelId::theta_step ? HPart::all : HPart::odd))
            terms.push_back(e_t(j, t));
        break;
    }
    case KernelId::dn_star_3d:
        require_dim_len(x, 3, "dn_star_3d");
        for (const auto& v : cached_set(IndexSetKind::LambdaDagStar, 3, n))
            terms.push_back(e_x(v, x));
        break;
    case KernelId::phi_star_3d: {
        require_dim_len(x, 3, "phi_star_3d");
        const auto t = homogeneous(x);
        for (const auto& j : cached_h(n, HPart::even))
            terms.push_back(to_double(mu_homogeneous(j, n)) * e_t(j, t));
        scale = 1.0 / (2.0 * n * n * n);
        break;
    }
    case KernelId::phi_3d:
        require_dim_len(x, 3, "phi_3d");
        for (const auto& v : cached_set(IndexSetKind::LambdaDag, 3, n))
            terms.push_back(e_x(v, x));
        scale = 1.0 / (2.0 * n * n * n);
        break;
    }
    return scale * pairwise_sum(terms);
}

// ---------------------------------------------------------------------------
// Quadrature and coefficients

namespace {

struct Rule1D {
    std::vector<double> nodes;
    std::vector<double> weights;  // already divided by pi
};

Rule1D gauss_chebyshev(int order, Weight w) {
    if (order < 1)
        throw std::invalid_argument("quadrature order must be >= 1");
    Rule1D r;
    for (int i = 1; i <= order; ++i) {
        if (w == Weight::W0) {
            r.nodes.push_back(std::cos((2 * i - 1) * pi / (2.0 * order)));
            r.weights.push_back(1.0 / order);
        } else {
            const double th = i * pi / (order + 1.0);
            r.nodes.push_back(std::cos(th));
            r.weights.push_back(std::sin(th) * std::sin(th) / (order + 1.0));
        }
    }
    return r;
}

}  // namespace

double reference_quadrature(const Function& f, int dim, int order, Weight w) {
    require_dim(dim);
    const Rule1D r = gauss_chebyshev(order, w);
    const std::size_t m = r.nodes.size();
    double acc = 0.0;
    if (dim == 2) {
        for (std::size_t i = 0; i < m; ++i) {
            double row = 0.0;
            for (std::size_t j = 0; j < m; ++j) {
                const double t[2] = {r.nodes[i], r.nodes[j]};
                row += r.weights[j] * f(t);
            }
            acc += r.weights[i] * row;
        }
        return acc;
    }
    for (std::size_t i = 0; i < m; ++i) {
        double plane = 0.0;
        for (std::size_t j = 0; j < m; ++j) {
            double row = 0.0;
            for (std::size_t k = 0; k < m; ++k) {
                const double t[3] = {r.nodes[i], r.nodes[j], r.nodes[k]};
                row += r.weights[k] * f(t);
            }
            plane += r.weights[j] * row;
        }
        acc += r.weights[i] * plane;
    }
    return acc;
}

std::map<IndexVector, double> coefficient_extract(const Function& f, int dim, int resolution) {
    require_dim(dim);
    if (resolution < 2)
        throw std::invalid_argument("coefficient_extract needs resolution >= 2");
    const std::size_t r = static_cast<std::size_t>(resolution);
    const std::size_t mmax = r / 2 + 1;
    std::vector<double> theta(r);
    for (std::size_t i = 0; i < r; ++i)
        theta[i] = (2.0 * static_cast<double>(i) + 1.0) * pi / (2.0 * static_cast<double>(r));
    // basis[m][i] = gamma_m / R * cos(m theta_i)
    std::vector<double> basis(mmax * r);
    for (std::size_t m = 0; m < mmax; ++m)
        for (std::size_t i = 0; i < r; ++i)
            basis[m * r + i] = (m == 0 ? 1.0 : 2.0) / static_cast<double>(r) * std::cos(static_cast<double>(m) * theta[i]);

    std::map<IndexVector, double> out;
    if (dim == 2) {
        std::vector<double> v(r * r);
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < r; ++j) {
                const double t[2] = {std::cos(theta[i]), std::cos(theta[j])};
                v[i * r + j] = f(t);
            }
        for (std::size_t a = 0; a < mmax; ++a)
            for (std::size_t b = 0; b < mmax; ++b) {
                double s = 0.0;
                for (std::size_t i = 0; i < r; ++i) {
                    double row = 0.0;
                    for (std::size_t j = 0; j < r; ++j)
                        row += basis[b * r + j] * v[i * r + j];
                    s += basis[a * r + i] * row;
                }
                out[IndexVector(static_cast<int>(a), static_cast<int>(b))] = s;
            }
        return out;
    }
    std::vector<double> v(r * r * r);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < r; ++j)
            for (std::size_t k = 0; k < r; ++k) {
                const double t[3] = {std::cos(theta[i]), std::cos(theta[j]), std::cos(theta[k])};
                v[(i * r + j) * r + k] = f(t);
            }
    // contract the last axis, then the middle, then the first
    std::vector<double> s1(r * r * mmax, 0.0), s2(r * mmax * mmax, 0.0);
    for (std::size_t ij = 0; ij < r * r; ++ij)
        for (std::size_t c = 0; c < mmax; ++c) {
            double s = 0.0;
            for (std::size_t k = 0; k < r; ++k)
                s += basis[c * r + k] * v[ij * r + k];
            s1[ij * mmax + c] = s;
        }
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t b = 0; b < mmax; ++b)
            for (std::size_t c = 0; c < mmax; ++c) {
                double s = 0.0;
                for (std::size_t j = 0; j < r; ++j)
                    s += basis[b * r + j] * s1[(i * r + j) * mmax + c];
                s2[(i * mmax + b) * mmax + c] = s;
            }
    for (std::size_t a = 0; a < mmax; ++a)
        for (std::size_t b = 0; b < mmax; ++b)
            for (std::size_t c = 0; c < mmax; ++c) {
                double s = 0.0;
                for (std::size_t i = 0; i < r; ++i)
                    s += basis[a * r + i] * s2[(i * mmax + b) * mmax + c];
                out[IndexVector(static_cast<int>(a), static_cast<int>(b), static_cast<int>(c))] = s;
            }
    return out;
}

double grid_max(const Function& f, int dim, int points) {
    require_dim(dim);
    if (points < 2)
        throw std::invalid_argument("grid_max needs at least 2 points per axis");
    std::vector<double> g(static_cast<std::size_t>(points));
    for (int i = 0; i < points; ++i)
        g[static_cast<std::size_t>(i)] = -1.0 + 2.0 * i / (points - 1.0);
    double best = 0.0;
    if (dim == 2) {
        for (double a : g)
            for (double b : g) {
                const double t[2] = {a, b};
                best = std::max(best, std::abs(f(t)));
            }
        return best;
    }
    for (double a : g)
        for (double b : g)
            for (double c : g) {
                const double t[3] = {a, b, c};
                best = std::max(best, std::abs(f(t)));
            }
    return best;
}

}  // namespace latcub::oracle
