// SPDX-License-Identifier: MIT
#include "latcub/kernels.hpp"

#include "latcub/compensated_sum.hpp"
#include "latcub/lattice.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace latcub {

namespace {

constexpr double pi = std::numbers::pi;

// sin(m pi t) / sin(pi t). With t = p + d, p the nearest integer, the ratio
// is (-1)^(p(m-1)) sin(m pi d) / sin(pi d), whose limit at d = 0 is m.
double sin_ratio(int m, double t, double threshold) {
    if (m == 0)
        return 0.0;
    const double p = std::nearbyint(t);
    const double d = t - p;
    const bool flip = (static_cast<long long>(p) * (m - 1)) % 2 != 0;
    const double s = std::sin(pi * d);
    double r;
    if (std::abs(s) < threshold) {
        const double pd = pi * d;
        r = m * (1.0 - (static_cast<double>(m) * m - 1.0) * pd * pd / 6.0);
    } else {
        r = std::sin(m * pi * d) / s;
    }
    return flip ? -r : r;
}

// sin(m pi t) / sin(2 pi t) for even m. With t = p/2 + d the ratio is
// (-1)^(mp/2 + p) sin(m pi d) / sin(2 pi d), with limit m/2 at d = 0.
double sin_ratio_half(int m, double t, double threshold) {
    if (m == 0)
        return 0.0;
    if (m % 2 != 0)
        throw std::logic_error("sin_ratio_half needs an even multiplier");
    const double p = std::nearbyint(2.0 * t);
    const double d = t - 0.5 * p;
    const long long ip = static_cast<long long>(p);
    const bool flip = ((m / 2) * ip + ip) % 2 != 0;
    const double s = std::sin(2.0 * pi * d);
    double r;
    if (std::abs(s) < threshold) {
        const double pd = pi * d;
        r = 0.5 * m * (1.0 - (static_cast<double>(m) * m - 4.0) * pd * pd / 6.0);
    } else {
        r = std::sin(m * pi * d) / s;
    }
    return flip ? -r : r;
}

double real_exp_sum(std::span<const IndexVector> set, std::span<const double> x) {
    CompensatedSum acc;
    for (const auto& v : set) {
        double dot = 0.0;
        for (int i = 0; i < v.dim(); ++i)
            dot += v[i] * x[static_cast<std::size_t>(i)];
        acc += std::cos(2.0 * pi * dot);
    }
    return acc.value();
}

void require_len(std::span<const double> x, std::size_t d, const char* what) {
    if (x.size() != d)
        throw std::invalid_argument(std::string(what) + ": expected a " + std::to_string(d) + "D point");
}

void require_n(int n, int min, const char* what) {
    if (n < min)
        throw std::invalid_argument(std::string(what) + " needs n >= " + std::to_string(min));
}

// numerator/denominator of the x-form: 4 prod_i sin(m pi t_i)
double cos_form(int m, std::span<const double> y) {
    const double c1 = std::cos(m * pi * y[0]);
    const double c2 = std::cos(m * pi * y[1]);
    const double c3 = std::cos(m * pi * y[2]);
    return c1 * c1 + c2 * c2 + c3 * c3 - 2.0 * c1 * c2 * c3 - 1.0;
}

}  // namespace

void KernelEvalConfig::validate() const {
    if (!(singular_threshold > 0.0))
        throw std::invalid_argument("singular_threshold must be positive");
}

// ---------------------------------------------------------------------------
// 2D

double dirichlet_2d(int n, std::span<const double> x, const KernelEvalConfig& cfg) {
    cfg.validate();
    require_n(n, 0, "dirichlet_2d");
    require_len(x, 2, "dirichlet_2d");
    const double den = std::cos(2.0 * pi * x[0]) - std::cos(2.0 * pi * x[1]);
    if (std::abs(den) < cfg.singular_threshold) {
        if (cfg.fallback == KernelEvalConfig::Fallback::limit_formula)
            return dirichlet_2d_product(n, x, cfg.singular_threshold);
        return 0.25 * real_exp_sum(generate_index_set(IndexSetKind::LambdaStar, 2, n), x);
    }
    const int m = 2 * n + 1;
    const double num = std::cos(pi * m * x[0]) * std::cos(pi * x[0]) - std::cos(pi * m * x[1]) * std::cos(pi * x[1]);
    return 0.5 * num / den;
}

double dirichlet_2d(int n, const TorusPoint& x, const KernelEvalConfig& cfg) {
    return dirichlet_2d(n, x.coords(), cfg);
}

double dirichlet_2d_product(int n, std::span<const double> x, double threshold) {
    require_n(n, 0, "dirichlet_2d_product");
    require_len(x, 2, "dirichlet_2d_product");
    const double u = x[0] + x[1];
    const double v = x[0] - x[1];
    return 0.25 * (sin_ratio(n + 1, u, threshold) * sin_ratio(n + 1, v, threshold) +
                   sin_ratio(n, u, threshold) * sin_ratio(n, v, threshold));
}

double phi_star_2d(int n, std::span<const double> x, const KernelEvalConfig& cfg) {
    require_n(n, 1, "phi_star_2d");
    require_len(x, 2, "phi_star_2d");
    const double d = dirichlet_2d(n, x, cfg) + dirichlet_2d(n - 1, x, cfg);
    const double vertex = std::cos(2.0 * pi * n * x[0]) + std::cos(2.0 * pi * n * x[1]);
    return (2.0 * d - 0.5 * vertex) / (2.0 * n * n);
}

double phi_star_2d(int n, const TorusPoint& x, const KernelEvalConfig& cfg) {
    return phi_star_2d(n, x.coords(), cfg);
}

// ---------------------------------------------------------------------------
// 3D product forms

double theta(int n, const HomogeneousPoint& t, double threshold) {
    if (n <= 0)
        return 0.0;
    double r = 1.0;
    for (int i = 0; i < 4; ++i)
        r *= sin_ratio(n, t[i], threshold);
    return r;
}

double theta_odd(int n, const HomogeneousPoint& t, double threshold) {
    if (n <= 0)
        return 0.0;
    const int big = n % 2 == 0 ? n + 2 : n + 1;
    const int small = n % 2 == 0 ? n : n + 3;
    std::array<double, 4> f{}, g{};
    for (int i = 0; i < 4; ++i) {
        f[static_cast<std::size_t>(i)] = sin_ratio_half(big, t[i], threshold);
        g[static_cast<std::size_t>(i)] = sin_ratio_half(small, t[i], threshold);
    }
    double acc = 0.0;
    for (std::size_t j = 0; j < 4; ++j) {
        double term = g[j];
        for (std::size_t i = 0; i < 4; ++i)
            if (i != j)
                term *= f[i];
        acc += term;
    }
    return acc;
}

double dn_star_3d(int n, const HomogeneousPoint& t, double threshold) {
    require_n(n, 0, "dn_star_3d");
    if (n == 0)
        return 1.0;
    return theta(n + 1, t, threshold) - theta(n, t, threshold) -
           (theta_odd(n, t, threshold) - theta_odd(n - 2, t, threshold));
}

double dn_star_3d(int n, std::span<const double> x, double threshold) {
    require_len(x, 3, "dn_star_3d");
    return dn_star_3d(n, to_homogeneous(x), threshold);
}

// ---------------------------------------------------------------------------
// 3D x-form

namespace {

// Theta~_m(y) = cos_form(m, y) / cos_form(1, y); false if the denominator is small.
bool theta_tilde(int m, std::span<const double> y, double threshold, double& out) {
    if (m <= 0) {
        out = 0.0;
        return true;
    }
    const double den = cos_form(1, y);
    if (std::abs(den) < threshold)
        return false;
    out = cos_form(m, y) / den;
    return true;
}

bool theta_tilde_odd(int n, std::span<const double> x, const HomogeneousPoint& t, double threshold, double& out) {
    if (n <= 0) {
        out = 0.0;
        return true;
    }
    const int big = n % 2 == 0 ? n + 2 : n + 1;
    const int small = n % 2 == 0 ? n : n + 3;
    const double y[3] = {2.0 * x[0], 2.0 * x[1], 2.0 * x[2]};
    double prod = 0.0;
    if (!theta_tilde(big / 2, y, threshold, prod))
        return false;
    double s = 0.0;
    for (int j = 0; j < 4; ++j) {
        const double den = std::sin(big * pi * t[j]);
        if (std::abs(den) < threshold)
            return false;
        s += std::sin(small * pi * t[j]) / den;
    }
    out = prod * s;
    return true;
}

}  // namespace

double dn_star_3d_x(int n, std::span<const double> x, const KernelEvalConfig& cfg) {
    cfg.validate();
    require_n(n, 0, "dn_star_3d_x");
    require_len(x, 3, "dn_star_3d_x");
    if (n == 0)
        return 1.0;
    const HomogeneousPoint t = to_homogeneous(x);
    double a = 0.0, b = 0.0, c = 0.0, d = 0.0;
    const double thr = cfg.singular_threshold;
    if (theta_tilde(n + 1, x, thr, a) && theta_tilde(n, x, thr, b) && theta_tilde_odd(n, x, t, thr, c) &&
        theta_tilde_odd(n - 2, x, t, thr, d))
        return a - b - (c - d);
    if (cfg.fallback == KernelEvalConfig::Fallback::limit_formula)
        return dn_star_3d(n, t, thr);
    return real_exp_sum(generate_index_set(IndexSetKind::LambdaDagStar, 3, n), x);
}

double dn_star_3d_x(int n, const TorusPoint& x, const KernelEvalConfig& cfg) {
    return dn_star_3d_x(n, x.coords(), cfg);
}

double phi_star_3d(int n, std::span<const double> x, const KernelEvalConfig& cfg) {
    cfg.validate();
    require_n(n, 1, "phi_star_3d");
    require_len(x, 3, "phi_star_3d");
    const double thr = cfg.singular_threshold;
    const HomogeneousPoint t = to_homogeneous(x);
    const double d = dn_star_3d(n, t, thr) + dn_star_3d(n - 1, t, thr);

    const int lo = 2 * ((n - 1) / 2);
    const int half = n / 2;
    double e12 = 0.0;
    for (int v = 0; v < 4; ++v) {
        const double r = sin_ratio_half(lo, t[v], thr);
        if (r == 0.0)
            continue;
        double s = 0.0;
        for (int j = 0; j < 4; ++j)
            if (j != v)
                s += std::cos(2.0 * pi * (n * t[j] + half * t[v]));
        e12 += r * s;
    }
    double e22 = 0.0;
    for (int a = 0; a < 4; ++a)
        for (int b = a + 1; b < 4; ++b)
            e22 += std::cos(2.0 * pi * n * (t[a] + t[b]));
    double e13 = 0.0;
    if (n % 2 == 0)
        for (int j = 0; j < 4; ++j)
            e13 += std::cos(2.0 * pi * n * t[j]);

    const double bracket = 0.5 * d - e12 / 3.0 - e22 / 3.0 - 0.5 * e13;
    return bracket / (2.0 * n * n * n);
}

double phi_star_3d(int n, const TorusPoint& x, const KernelEvalConfig& cfg) {
    return phi_star_3d(n, x.coords(), cfg);
}

double phi_star(int dim, int n, std::span<const double> x, const KernelEvalConfig& cfg) {
    require_dim(dim);
    return dim == 2 ? phi_star_2d(n, x, cfg) : phi_star_3d(n, x, cfg);
}

// ---------------------------------------------------------------------------
// Unsymmetric kernel

TrigKernel::TrigKernel(int dim, int n)
    : dim_(dim), n_(n), freqs_(generate_index_set(dim == 2 ? IndexSetKind::Lambda : IndexSetKind::LambdaDag, dim, n)) {
}

std::complex<double> TrigKernel::operator()(std::span<const double> x) const {
    require_len(x, static_cast<std::size_t>(dim_), "TrigKernel");
    CompensatedComplexSum acc;
    for (const auto& v : freqs_) {
        double dot = 0.0;
        for (int i = 0; i < dim_; ++i)
            dot += v[i] * x[static_cast<std::size_t>(i)];
        acc += std::polar(1.0, 2.0 * pi * dot);
    }
    double scale = 2.0;
    for (int i = 0; i < dim_; ++i)
        scale *= n_;
    return acc.value() / scale;
}

std::complex<double> phi_2d(int n, std::span<const double> x) {
    return TrigKernel(2, n)(x);
}

std::complex<double> phi_3d(int n, std::span<const double> x) {
    return TrigKernel(3, n)(x);
}

}  // namespace latcub
