// SPDX-License-Identifier: MIT
#include "latcub/interpolation.hpp"

#include "latcub/compensated_sum.hpp"
#include "latcub/lattice.hpp"
#include "latcub/transform.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <set>
#include <sstream>
#include <stdexcept>

namespace latcub {

std::string_view to_string(InterpolantFlavor flavor) {
    switch (flavor) {
    case InterpolantFlavor::trig_I: return "trig_I";
    case InterpolantFlavor::trig_Istar: return "trig_Istar";
    case InterpolantFlavor::algebraic_L: return "algebraic_L";
    }
    return "?";
}

std::vector<IndexVector> interpolation_nodes(InterpolantFlavor flavor, int dim, int n) {
    switch (flavor) {
    case InterpolantFlavor::trig_I: return generate_index_set(IndexSetKind::X, dim, n);
    case InterpolantFlavor::trig_Istar: return generate_index_set(IndexSetKind::XStar, dim, n);
    case InterpolantFlavor::algebraic_L: return generate_index_set(IndexSetKind::Xi, dim, n);
    }
    throw std::invalid_argument("unknown interpolant flavor");
}

namespace {

void check_keys(const SampleMap& samples, const std::vector<IndexVector>& nodes, InterpolantFlavor flavor) {
    std::vector<IndexVector> missing, extra;
    for (const auto& k : nodes)
        if (!samples.contains(k))
            missing.push_back(k);
    const std::set<IndexVector> expected(nodes.begin(), nodes.end());
    for (const auto& [k, v] : samples)
        if (!expected.contains(k))
            extra.push_back(k);
    if (missing.empty() && extra.empty())
        return;
    std::ostringstream os;
    os << "samples for " << to_string(flavor) << " do not match the node set";
    const auto list = [&os](const char* label, const std::vector<IndexVector>& v) {
        if (v.empty())
            return;
        os << "; " << label << ":";
        for (std::size_t i = 0; i < v.size() && i < 20; ++i)
            os << ' ' << v[i];
        if (v.size() > 20)
            os << " ... (" << v.size() << " total)";
    };
    list("missing", missing);
    list("extra", extra);
    throw std::invalid_argument(os.str());
}

// Point with coordinates x - k/(2n).
std::array<double, 3> shift(std::span<const double> x, const IndexVector& k, int n) {
    std::array<double, 3> y{0.0, 0.0, 0.0};
    for (int i = 0; i < k.dim(); ++i)
        y[static_cast<std::size_t>(i)] = x[static_cast<std::size_t>(i)] - k[i] / (2.0 * n);
    return y;
}

}  // namespace

Interpolant::Interpolant(InterpolantFlavor flavor, int dim, int n, SampleMap samples, KernelEvalConfig cfg)
    : flavor_(flavor), dim_(dim), n_(n), samples_(std::move(samples)), cfg_(cfg) {
    require_dim(dim);
    if (n < 1)
        throw std::invalid_argument("interpolation needs n >= 1");
    cfg_.validate();
    const auto nodes = interpolation_nodes(flavor, dim, n);
    for (const auto& [k, v] : samples_)
        if (k.dim() != dim)
            throw std::invalid_argument("sample key " + k.to_string() + " has the wrong dimension");
    check_keys(samples_, nodes, flavor);
    for (const auto& k : nodes) {
        keys_.push_back(k);
        values_.push_back(samples_.at(k));
    }
    if (flavor == InterpolantFlavor::trig_I)
        kernel_.emplace(dim, n);
}

std::complex<double> Interpolant::evaluate_complex(std::span<const double> x) const {
    if (x.size() != static_cast<std::size_t>(dim_))
        throw std::invalid_argument("evaluation point has the wrong dimension");
    if (flavor_ == InterpolantFlavor::trig_I) {
        CompensatedComplexSum acc;
        for (std::size_t i = 0; i < keys_.size(); ++i) {
            const auto y = shift(x, keys_[i], n_);
            acc += values_[i] * (*kernel_)(std::span<const double>(y.data(), x.size()));
        }
        return acc.value();
    }
    CompensatedSum acc;
    for (std::size_t i = 0; i < keys_.size(); ++i) {
        if (values_[i] == 0.0)
            continue;
        if (flavor_ == InterpolantFlavor::trig_Istar) {
            const auto y = shift(x, keys_[i], n_);
            acc += values_[i] * phi_star(dim_, n_, std::span<const double>(y.data(), x.size()), cfg_);
        } else {
            acc += values_[i] * fundamental_poly(dim_, n_, keys_[i], x, cfg_);
        }
    }
    return acc.value();
}

double Interpolant::evaluate(std::span<const double> x) const {
    return evaluate_complex(x).real();
}

double Interpolant::evaluate(const AlgebraicPoint& t) const {
    if (flavor_ != InterpolantFlavor::algebraic_L)
        throw std::logic_error("algebraic-chart evaluation needs the algebraic_L flavor");
    if (t.dim() != dim_)
        throw std::invalid_argument("evaluation point has the wrong dimension");
    return evaluate(arccos_map(t).coords());
}

Interpolant trig_interpolant(int dim, int n, SampleMap samples) {
    return {InterpolantFlavor::trig_I, dim, n, std::move(samples)};
}

Interpolant sym_trig_interpolant(int dim, int n, SampleMap samples) {
    return {InterpolantFlavor::trig_Istar, dim, n, std::move(samples)};
}

Interpolant algebraic_interpolant(int dim, int n, SampleMap samples) {
    return {InterpolantFlavor::algebraic_L, dim, n, std::move(samples)};
}

SampleMap sample_torus(InterpolantFlavor flavor, int dim, int n,
                       const std::function<double(std::span<const double>)>& f) {
    SampleMap out;
    for (const auto& k : interpolation_nodes(flavor, dim, n)) {
        std::array<double, 3> x{0.0, 0.0, 0.0};
        for (int i = 0; i < dim; ++i)
            x[static_cast<std::size_t>(i)] = k[i] / (2.0 * n);
        out[k] = f(std::span<const double>(x.data(), static_cast<std::size_t>(dim)));
    }
    return out;
}

SampleMap sample_algebraic(int dim, int n, const std::function<double(std::span<const double>)>& f) {
    SampleMap out;
    for (const auto& k : generate_index_set(IndexSetKind::Xi, dim, n)) {
        std::array<double, 3> z{0.0, 0.0, 0.0};
        for (int i = 0; i < dim; ++i)
            z[static_cast<std::size_t>(i)] = chebyshev_node(k[i], n);
        out[k] = f(std::span<const double>(z.data(), static_cast<std::size_t>(dim)));
    }
    return out;
}

// ---------------------------------------------------------------------------
// Symmetrization and fundamental polynomials

SymmetrizationOperator::SymmetrizationOperator(int dim) : dim_(dim) {
    require_dim(dim);
}

double SymmetrizationOperator::operator()(const Function& f, std::span<const double> x) const {
    if (x.size() != static_cast<std::size_t>(dim_))
        throw std::invalid_argument("symmetrization point has the wrong dimension");
    const int count = 1 << dim_;
    double acc = 0.0;
    std::array<double, 3> y{0.0, 0.0, 0.0};
    for (int s = 0; s < count; ++s) {
        for (int i = 0; i < dim_; ++i)
            y[static_cast<std::size_t>(i)] = (s >> i & 1) ? -x[static_cast<std::size_t>(i)] : x[static_cast<std::size_t>(i)];
        acc += f(std::span<const double>(y.data(), x.size()));
    }
    return acc / count;
}

SymmetrizationOperator::Function SymmetrizationOperator::apply(Function f) const {
    return [op = *this, f = std::move(f)](std::span<const double> x) { return op(f, x); };
}

namespace {

void require_xi(int dim, int n, const IndexVector& k) {
    require_dim(dim);
    if (k.dim() != dim || n < 1 || !in_index_set(IndexSetKind::Xi, k, n))
        throw std::domain_error("fundamental polynomial index " + k.to_string() + " is not in Xi_" +
                                std::to_string(n));
}

}  // namespace

double fundamental_poly(int dim, int n, const IndexVector& k, std::span<const double> x, const KernelEvalConfig& cfg) {
    require_xi(dim, n, k);
    if (x.size() != static_cast<std::size_t>(dim))
        throw std::invalid_argument("fundamental_poly: point has the wrong dimension");
    const SymmetrizationOperator sym(dim);
    const double p = sym(
        [&](std::span<const double> y) {
            const auto z = shift(y, k, n);
            return phi_star(dim, n, std::span<const double>(z.data(), y.size()), cfg);
        },
        x);
    return to_double(lambda_weight(k, n)) * p;
}

double fundamental_poly(int dim, int n, const IndexVector& k, const AlgebraicPoint& t, const KernelEvalConfig& cfg) {
    return fundamental_poly(dim, n, k, arccos_map(t).coords(), cfg);
}

double fundamental_poly_2d_closed(int n, const IndexVector& k, const AlgebraicPoint& t) {
    require_xi(2, n, k);
    if (t.dim() != 2)
        throw std::invalid_argument("fundamental_poly_2d_closed needs a 2D point");
    const TorusPoint x = arccos_map(t);
    const SymmetrizationOperator sym(2);
    const double d = sym(
        [&](std::span<const double> y) {
            const auto z = shift(y, k, n);
            const std::span<const double> zs(z.data(), 2);
            return dirichlet_2d_product(n, zs) + dirichlet_2d_product(n - 1, zs);
        },
        x.coords());
    const double s1 = k[0] % 2 == 0 ? 1.0 : -1.0;
    const double s2 = k[1] % 2 == 0 ? 1.0 : -1.0;
    const double vertex =
        s1 * chebyshev_eval(ChebyshevKind::first, n, t[0]) + s2 * chebyshev_eval(ChebyshevKind::first, n, t[1]);
    return to_double(lambda_weight(k, n)) / (static_cast<double>(n) * n) * (d - 0.25 * vertex);
}

double lebesgue_function(int dim, int n, std::span<const double> x, const KernelEvalConfig& cfg) {
    CompensatedSum acc;
    for (const auto& k : generate_index_set(IndexSetKind::Xi, dim, n))
        acc += std::abs(fundamental_poly(dim, n, k, x, cfg));
    return acc.value();
}

}  // namespace latcub
