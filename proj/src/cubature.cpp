// SPDX-License-Identifier: MIT
#include "latcub/cubature.hpp"
#include "latcub/transform.hpp"

#include "latcub/compensated_sum.hpp"
#include "latcub/lattice.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace latcub {

std::string_view to_string(WeightKind kind) {
    switch (kind) {
    case WeightKind::trig_sym: return "trig_sym";
    case WeightKind::trig_equal: return "trig_equal";
    case WeightKind::W0: return "W0";
    case WeightKind::W1: return "W1";
    }
    return "?";
}

WeightKind parse_weight_kind(std::string_view s) {
    if (s == "trig_sym" || s == "trig-sym")
        return WeightKind::trig_sym;
    if (s == "trig_equal" || s == "trig-equal")
        return WeightKind::trig_equal;
    if (s == "W0" || s == "w0")
        return WeightKind::W0;
    if (s == "W1" || s == "w1")
        return WeightKind::W1;
    throw std::invalid_argument("unknown rule kind '" + std::string(s) + "'");
}

// ---------------------------------------------------------------------------
// ExactnessClass

bool ExactnessClass::contains(std::span<const int> m) const {
    const int d = static_cast<int>(m.size());
    switch (kind) {
    case Kind::total_degree: {
        int s = 0;
        for (int v : m) {
            if (v < 0)
                return false;
            s += v;
        }
        return s <= degree;
    }
    case Kind::pairwise_sum:
        for (int v : m)
            if (v < 0)
                return false;
        for (int a = 0; a < d; ++a)
            for (int b = a + 1; b < d; ++b)
                if (m[a] + m[b] > degree)
                    return false;
        return true;
    case Kind::trig_frequency: {
        const IndexVector v = d == 2 ? IndexVector(m[0], m[1]) : IndexVector(m[0], m[1], m[2]);
        return in_index_set(d == 2 ? IndexSetKind::LambdaStar : IndexSetKind::LambdaDagStar, v, degree);
    }
    }
    return false;
}

namespace {

constexpr std::string_view kind_names[] = {"total_degree", "pairwise_sum", "trig_frequency"};

}  // namespace

std::string ExactnessClass::describe() const {
    return std::string(kind_names[static_cast<int>(kind)]) + "<=" + std::to_string(degree);
}

ExactnessClass ExactnessClass::parse(const std::string& description) {
    const auto pos = description.find("<=");
    if (pos == std::string::npos)
        throw std::invalid_argument("bad exactness description '" + description + "'");
    const std::string name = description.substr(0, pos);
    for (int i = 0; i < 3; ++i) {
        if (name == kind_names[i]) {
            std::size_t used = 0;
            const std::string deg = description.substr(pos + 2);
            int d = 0;
            try {
                d = std::stoi(deg, &used);
            } catch (const std::logic_error&) {
                used = 0;
            }
            if (used == 0 || used != deg.size())
                throw std::invalid_argument("bad exactness degree in '" + description + "'");
            return {static_cast<Kind>(i), d};
        }
    }
    throw std::invalid_argument("unknown exactness class '" + name + "'");
}

// ---------------------------------------------------------------------------
// Rule assembly

NodeEvaluationError::NodeEvaluationError(const IndexVector& node, const std::string& what)
    : std::runtime_error("integrand failed at node " + node.to_string() + ": " + what), node_(node) {}

namespace {

void require_n(int n, int min, const char* what) {
    if (n < min)
        throw std::invalid_argument(std::string(what) + " needs n >= " + std::to_string(min) + ", got " +
                                    std::to_string(n));
}

std::int64_t ipow(int n, int d) {
    std::int64_t r = 1;
    for (int i = 0; i < d; ++i)
        r *= n;
    return r;
}

std::array<double, 3> cos_node(const IndexVector& k, int n) {
    std::array<double, 3> z{0.0, 0.0, 0.0};
    for (int i = 0; i < k.dim(); ++i)
        z[static_cast<std::size_t>(i)] = chebyshev_node(k[i], n);
    return z;
}

}  // namespace

CubatureRule trig_rule(int dim, int n, bool symmetric) {
    require_dim(dim);
    require_n(n, 2, "trig_rule");
    CubatureRule r;
    r.dim = dim;
    r.n = n;
    r.kind = symmetric ? WeightKind::trig_sym : WeightKind::trig_equal;
    r.normalization = Rational(1, 2 * ipow(n, dim));
    r.exactness = {ExactnessClass::Kind::trig_frequency, 2 * n - 1};
    r.node_indices = generate_index_set(symmetric ? IndexSetKind::XStar : IndexSetKind::X, dim, n);
    for (const auto& k : r.node_indices) {
        std::array<double, 3> x{0.0, 0.0, 0.0};
        for (int i = 0; i < dim; ++i)
            x[static_cast<std::size_t>(i)] = k[i] / (2.0 * n);
        r.nodes.push_back(x);
        const Rational w = symmetric ? spatial_weight(k, n) : Rational(1);
        r.exact_weights.push_back(w);
        r.weights.push_back(to_double(w));
    }
    return r;
}

CubatureRule w0_rule(int dim, int n) {
    require_dim(dim);
    require_n(n, 2, "w0_rule");
    CubatureRule r;
    r.dim = dim;
    r.n = n;
    r.kind = WeightKind::W0;
    r.normalization = Rational(1, 2 * ipow(n, dim));
    r.exactness = {dim == 2 ? ExactnessClass::Kind::total_degree : ExactnessClass::Kind::pairwise_sum, 2 * n - 1};
    r.node_indices = generate_index_set(IndexSetKind::Xi, dim, n);
    Rational total(0);
    for (const auto& k : r.node_indices) {
        r.nodes.push_back(cos_node(k, n));
        const Rational w = lambda_weight(k, n);
        total += w;
        r.exact_weights.push_back(w);
        r.weights.push_back(to_double(w));
    }
    if (total * r.normalization != Rational(1))
        throw std::logic_error("w0_rule: weights do not sum to the normalization inverse");
    return r;
}

CubatureRule w1_rule(int dim, int n) {
    require_dim(dim);
    require_n(n, 3, "w1_rule");
    CubatureRule r;
    r.dim = dim;
    r.n = n;
    r.kind = WeightKind::W1;
    r.normalization = dim == 2 ? Rational(2, ipow(n, 2)) : Rational(4, ipow(n, 3));
    r.exactness = {dim == 2 ? ExactnessClass::Kind::total_degree : ExactnessClass::Kind::pairwise_sum, 2 * n - 5};
    for (const auto& k : generate_index_set(IndexSetKind::Xi, dim, n)) {
        bool interior = true;
        for (int v : k)
            interior = interior && v > 0 && v < n;
        if (!interior)
            continue;
        r.node_indices.push_back(k);
        r.nodes.push_back(cos_node(k, n));
        double w = 1.0;
        for (int v : k) {
            const double s = std::sin(v * std::numbers::pi / n);
            w *= s * s;
        }
        r.weights.push_back(w);
    }
    return r;
}

CubatureRule make_rule(WeightKind kind, int dim, int n) {
    switch (kind) {
    case WeightKind::trig_sym: return trig_rule(dim, n, true);
    case WeightKind::trig_equal: return trig_rule(dim, n, false);
    case WeightKind::W0: return w0_rule(dim, n);
    case WeightKind::W1: return w1_rule(dim, n);
    }
    throw std::invalid_argument("unknown rule kind");
}

// ---------------------------------------------------------------------------
// Application

namespace {

template <class Acc, class F>
auto apply_impl(const CubatureRule& rule, const F& f) {
    Acc acc;
    for (std::size_t i = 0; i < rule.size(); ++i) {
        try {
            acc += rule.weights[i] * f(rule.node(i));
        } catch (const std::exception& e) {
            throw NodeEvaluationError(rule.node_indices[i], e.what());
        }
    }
    return to_double(rule.normalization) * acc.value();
}

}  // namespace

double apply(const CubatureRule& rule, const Integrand& f) {
    return apply_impl<CompensatedSum>(rule, f);
}

std::complex<double> apply(const CubatureRule& rule, const ComplexIntegrand& f) {
    return apply_impl<CompensatedComplexSum>(rule, f);
}

double w0_apply_split_2d(int n, const Integrand& f) {
    require_n(n, 2, "w0_apply_split_2d");
    const auto z = [n](int k) { return chebyshev_node(k, n); };
    const auto eval = [&](int a, int b) {
        const double t[2] = {z(a), z(b)};
        try {
            return f(t);
        } catch (const std::exception& e) {
            throw NodeEvaluationError(IndexVector(a, b), e.what());
        }
    };
    const int m = n / 2;
    CompensatedSum acc;
    if (n % 2 == 0) {
        // first and last terms halved in both sums over the even grid
        const auto h = [m](int i) { return (i == 0 || i == m) ? 0.5 : 1.0; };
        for (int i = 0; i <= m; ++i)
            for (int j = 0; j <= m; ++j)
                acc += h(i) * h(j) * eval(2 * i, 2 * j);
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < m; ++j)
                acc += eval(2 * i + 1, 2 * j + 1);
    } else {
        // only the first term halved
        const auto h = [](int i) { return i == 0 ? 0.5 : 1.0; };
        for (int i = 0; i <= m; ++i)
            for (int j = 0; j <= m; ++j)
                acc += h(i) * h(j) * eval(2 * i, 2 * j);
        for (int i = 0; i <= m; ++i)
            for (int j = 0; j <= m; ++j)
                acc += h(i) * h(j) * eval(n - 2 * i, n - 2 * j);
    }
    return 2.0 / (static_cast<double>(n) * n) * acc.value();
}

}  // namespace latcub
