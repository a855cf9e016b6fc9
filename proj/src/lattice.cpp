// SPDX-License-Identifier: MIT
#include "latcub/lattice.hpp"

#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace latcub {

// ---------------------------------------------------------------------------
// IndexVector

IndexVector::IndexVector(std::initializer_list<int> coords) {
    require_dim(static_cast<int>(coords.size()));
    dim_ = static_cast<int>(coords.size());
    std::size_t i = 0;
    for (int v : coords)
        c_[i++] = v;
}

IndexVector IndexVector::zeros(int dim) {
    require_dim(dim);
    return dim == 2 ? IndexVector(0, 0) : IndexVector(0, 0, 0);
}

IndexVector& IndexVector::operator+=(const IndexVector& o) {
    if (o.dim_ != dim_)
        throw std::invalid_argument("IndexVector dimension mismatch");
    for (std::size_t i = 0; i < 3; ++i)
        c_[i] += o.c_[i];
    return *this;
}

IndexVector& IndexVector::operator-=(const IndexVector& o) {
    if (o.dim_ != dim_)
        throw std::invalid_argument("IndexVector dimension mismatch");
    for (std::size_t i = 0; i < 3; ++i)
        c_[i] -= o.c_[i];
    return *this;
}

IndexVector operator-(IndexVector a) {
    for (auto& v : a.c_)
        v = -v;
    return a;
}

IndexVector operator*(int s, IndexVector a) {
    for (auto& v : a.c_)
        v *= s;
    return a;
}

std::string IndexVector::to_string() const {
    std::ostringstream os;
    os << *this;
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const IndexVector& v) {
    os << '(';
    for (int i = 0; i < v.dim(); ++i)
        os << (i ? "," : "") << v[i];
    return os << ')';
}

// ---------------------------------------------------------------------------
// Rational helpers

std::string to_string(const Rational& r) {
    if (r.denominator() == 1)
        return std::to_string(r.numerator());
    return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

Rational parse_rational(const std::string& s) {
    const auto slash = s.find('/');
    std::size_t used = 0;
    try {
        if (slash == std::string::npos) {
            const long long p = std::stoll(s, &used);
            if (used != s.size())
                throw std::invalid_argument(s);
            return Rational(p);
        }
        const std::string num = s.substr(0, slash);
        const std::string den = s.substr(slash + 1);
        const long long p = std::stoll(num, &used);
        if (used != num.size())
            throw std::invalid_argument(s);
        const long long q = std::stoll(den, &used);
        if (used != den.size() || q == 0)
            throw std::invalid_argument(s);
        return Rational(p, q);
    } catch (const std::logic_error&) {
        throw std::invalid_argument("not a rational number: '" + s + "'");
    }
}

// ---------------------------------------------------------------------------
// GeneratorMatrix

GeneratorMatrix GeneratorMatrix::rhombus(int n) {
    if (n < 1)
        throw std::invalid_argument("generator degree n must be >= 1");
    GeneratorMatrix g(2, n);
    g.m_[0] = {n, n, 0};
    g.m_[1] = {-n, n, 0};
    return g;
}

GeneratorMatrix GeneratorMatrix::fcc(int n) {
    if (n < 1)
        throw std::invalid_argument("generator degree n must be >= 1");
    GeneratorMatrix g(3, n);
    g.m_[0] = {0, n, n};
    g.m_[1] = {n, 0, n};
    g.m_[2] = {n, n, 0};
    return g;
}

GeneratorMatrix GeneratorMatrix::tiling(int dim, int n) {
    require_dim(dim);
    return dim == 2 ? rhombus(n) : fcc(n);
}

GeneratorMatrix GeneratorMatrix::scaled_identity(int dim, int scale) {
    require_dim(dim);
    if (scale == 0)
        throw std::invalid_argument("scaled identity needs a nonzero scale");
    GeneratorMatrix g(dim, scale);
    for (int i = 0; i < dim; ++i)
        g.m_[i][i] = scale;
    return g;
}

std::int64_t GeneratorMatrix::determinant() const {
    if (dim_ == 2)
        return m_[0][0] * m_[1][1] - m_[0][1] * m_[1][0];
    return m_[0][0] * (m_[1][1] * m_[2][2] - m_[1][2] * m_[2][1]) -
           m_[0][1] * (m_[1][0] * m_[2][2] - m_[1][2] * m_[2][0]) +
           m_[0][2] * (m_[1][0] * m_[2][1] - m_[1][1] * m_[2][0]);
}

GeneratorMatrix GeneratorMatrix::transpose() const {
    GeneratorMatrix t(dim_, n_);
    for (int r = 0; r < dim_; ++r)
        for (int c = 0; c < dim_; ++c)
            t.m_[r][c] = m_[c][r];
    return t;
}

namespace {

using Mat3 = std::array<std::array<std::int64_t, 3>, 3>;

// Adjugate, so that M^{-1} = adj(M) / det(M).
Mat3 adjugate(const GeneratorMatrix& g) {
    Mat3 a{};
    const auto e = [&](int r, int c) { return g.entry(r, c); };
    if (g.dim() == 2) {
        a[0][0] = e(1, 1);
        a[0][1] = -e(0, 1);
        a[1][0] = -e(1, 0);
        a[1][1] = e(0, 0);
        return a;
    }
    for (int r = 0; r < 3; ++r) {
        for (int c = 0; c < 3; ++c) {
            // cofactor of (c, r)
            const int r0 = (c + 1) % 3, r1 = (c + 2) % 3;
            const int c0 = (r + 1) % 3, c1 = (r + 2) % 3;
            a[r][c] = e(r0, c0) * e(r1, c1) - e(r0, c1) * e(r1, c0);
        }
    }
    return a;
}

std::array<std::int64_t, 3> mat_vec(const Mat3& m, const IndexVector& v) {
    std::array<std::int64_t, 3> out{0, 0, 0};
    for (int r = 0; r < v.dim(); ++r)
        for (int c = 0; c < v.dim(); ++c)
            out[r] += m[r][c] * v[c];
    return out;
}

std::int64_t mod(std::int64_t a, std::int64_t m) {
    const std::int64_t r = a % m;
    return r < 0 ? r + m : r;
}

}  // namespace

bool GeneratorMatrix::contains(const IndexVector& v) const {
    if (v.dim() != dim_)
        throw std::invalid_argument("lattice/vector dimension mismatch");
    const std::int64_t det = determinant();
    const auto w = mat_vec(adjugate(*this), v);
    for (int i = 0; i < dim_; ++i)
        if (w[i] % det != 0)
            return false;
    return true;
}

// ---------------------------------------------------------------------------
// Index sets

std::string_view to_string(IndexSetKind kind) {
    switch (kind) {
    case IndexSetKind::Lambda: return "Lambda";
    case IndexSetKind::LambdaStar: return "LambdaStar";
    case IndexSetKind::LambdaDag: return "LambdaDag";
    case IndexSetKind::LambdaDagStar: return "LambdaDagStar";
    case IndexSetKind::X: return "X";
    case IndexSetKind::XStar: return "XStar";
    case IndexSetKind::Xi: return "Xi";
    }
    return "?";
}

namespace {

// lo <= v < hi (half-open) or lo <= v <= hi (closed)
bool within(int v, int lo, int hi, bool closed) {
    return v >= lo && (closed ? v <= hi : v < hi);
}

bool same_parity(const IndexVector& v) {
    const int p = v[0] & 1;
    for (int i = 1; i < v.dim(); ++i)
        if ((v[i] & 1) != p)
            return false;
    return true;
}

bool rhombus_member(const IndexVector& v, int n, bool closed) {
    return within(v[0] + v[1], -n, n, closed) && within(v[1] - v[0], -n, n, closed);
}

// -n <= -j1+j2+j3, j1-j2+j3, j1+j2-j3 < n
bool fcc_spatial_member(const IndexVector& v, int n, bool closed) {
    return within(-v[0] + v[1] + v[2], -n, n, closed) && within(v[0] - v[1] + v[2], -n, n, closed) &&
           within(v[0] + v[1] - v[2], -n, n, closed);
}

// -n <= k_a +- k_b < n for all pairs a < b
bool dodecahedron_member(const IndexVector& v, int n, bool closed) {
    for (int a = 0; a < 3; ++a)
        for (int b = a + 1; b < 3; ++b)
            if (!within(v[a] + v[b], -n, n, closed) || !within(v[a] - v[b], -n, n, closed))
                return false;
    return true;
}

bool box_member(const IndexVector& v, int lo, int hi, bool closed) {
    for (int i = 0; i < v.dim(); ++i)
        if (!within(v[i], lo, hi, closed))
            return false;
    return true;
}

void check_kind(IndexSetKind kind, int dim, int n) {
    require_dim(dim);
    if ((kind == IndexSetKind::LambdaDag || kind == IndexSetKind::LambdaDagStar) && dim == 2)
        throw std::invalid_argument(std::string(to_string(kind)) +
                                    " is defined only in three dimensions (in 2D it coincides with Lambda)");
    const bool closed_symmetric = kind == IndexSetKind::LambdaStar || kind == IndexSetKind::LambdaDagStar;
    if (n < (closed_symmetric ? 0 : 1))
        throw std::invalid_argument("index set degree n too small: " + std::to_string(n));
}

}  // namespace

bool in_index_set(IndexSetKind kind, const IndexVector& v, int n) {
    check_kind(kind, v.dim(), n);
    const bool d2 = v.dim() == 2;
    switch (kind) {
    case IndexSetKind::Lambda:
        return d2 ? rhombus_member(v, n, false) : fcc_spatial_member(v, n, false);
    case IndexSetKind::LambdaStar:
        return d2 ? rhombus_member(v, n, true) : fcc_spatial_member(v, n, true);
    case IndexSetKind::LambdaDag:
        return dodecahedron_member(v, n, false);
    case IndexSetKind::LambdaDagStar:
        return dodecahedron_member(v, n, true);
    case IndexSetKind::X:
        return same_parity(v) && box_member(v, -n, n, false);
    case IndexSetKind::XStar:
        return same_parity(v) && box_member(v, -n, n, true);
    case IndexSetKind::Xi:
        return same_parity(v) && box_member(v, 0, n, true);
    }
    return false;
}

std::vector<IndexVector> generate_index_set(IndexSetKind kind, int dim, int n) {
    check_kind(kind, dim, n);
    // Every set lies in the box [-n, n]^d.
    std::vector<IndexVector> out;
    if (dim == 2) {
        for (int a = -n; a <= n; ++a)
            for (int b = -n; b <= n; ++b)
                if (IndexVector v(a, b); in_index_set(kind, v, n))
                    out.push_back(v);
    } else {
        for (int a = -n; a <= n; ++a)
            for (int b = -n; b <= n; ++b)
                for (int c = -n; c <= n; ++c)
                    if (IndexVector v(a, b, c); in_index_set(kind, v, n))
                        out.push_back(v);
    }
    return out;
}

// ---------------------------------------------------------------------------
// Classification and weights

std::string_view to_string(BoundaryKind kind) {
    switch (kind) {
    case BoundaryKind::interior: return "interior";
    case BoundaryKind::face: return "face";
    case BoundaryKind::edge: return "edge";
    case BoundaryKind::vertex: return "vertex";
    }
    return "?";
}

BoundaryClass classify_spatial(const IndexVector& k, int n) {
    if (n < 1 || !in_index_set(IndexSetKind::XStar, k, n))
        throw std::domain_error("classify_spatial: " + k.to_string() + " is not in X*_" + std::to_string(n));
    int on_boundary = 0;
    for (int v : k)
        on_boundary += std::abs(v) == n;
    static constexpr BoundaryKind kinds2[] = {BoundaryKind::interior, BoundaryKind::edge, BoundaryKind::vertex};
    static constexpr BoundaryKind kinds3[] = {BoundaryKind::interior, BoundaryKind::face, BoundaryKind::edge,
                                              BoundaryKind::vertex};
    return {k.dim() == 2 ? kinds2[on_boundary] : kinds3[on_boundary], 1 << on_boundary};
}

BoundaryClass classify_frequency(const IndexVector& j, int n) {
    const int dim = j.dim();
    require_dim(dim);
    const IndexSetKind set = dim == 2 ? IndexSetKind::LambdaStar : IndexSetKind::LambdaDagStar;
    if (n < 1 || !in_index_set(set, j, n))
        throw std::domain_error("classify_frequency: " + j.to_string() + " is not in the closed frequency set of degree " +
                                std::to_string(n));
    const GeneratorMatrix b = GeneratorMatrix::tiling(dim, n);
    // Congruent points differ by B l; the set's diameter bounds |l_i| <= 3.
    int count = 0;
    const int r = 3;
    const int r3 = dim == 3 ? r : 0;
    for (int l0 = -r; l0 <= r; ++l0)
        for (int l1 = -r; l1 <= r; ++l1)
            for (int l2 = -r3; l2 <= r3; ++l2) {
                IndexVector q = j;
                for (int row = 0; row < dim; ++row) {
                    const std::int64_t shift =
                        b.entry(row, 0) * l0 + b.entry(row, 1) * l1 + (dim == 3 ? b.entry(row, 2) * l2 : 0);
                    q[row] -= static_cast<int>(shift);
                }
                count += in_index_set(set, q, n);
            }
    BoundaryKind kind = BoundaryKind::interior;
    if (dim == 2) {
        kind = count == 1 ? BoundaryKind::interior : count == 2 ? BoundaryKind::edge : BoundaryKind::vertex;
    } else {
        switch (count) {
        case 1: kind = BoundaryKind::interior; break;
        case 2: kind = BoundaryKind::face; break;
        case 3: kind = BoundaryKind::edge; break;
        default: kind = BoundaryKind::vertex; break;
        }
    }
    return {kind, count};
}

std::vector<IndexVector> congruence_class(const IndexVector& k, std::span<const IndexVector> set,
                                          const GeneratorMatrix& lattice) {
    bool member = false;
    for (const auto& v : set)
        member = member || v == k;
    if (!member)
        throw std::domain_error("congruence_class: " + k.to_string() + " is not in the given set");
    std::vector<IndexVector> out;
    for (const auto& v : set)
        if (lattice.contains(v - k))
            out.push_back(v);
    return out;
}

Rational spatial_weight(const IndexVector& k, int n) {
    return Rational(1, classify_spatial(k, n).multiplicity);
}

Rational frequency_weight(const IndexVector& j, int n) {
    return Rational(1, classify_frequency(j, n).multiplicity);
}

Rational lambda_weight(const IndexVector& k, int n) {
    if (n < 1 || !in_index_set(IndexSetKind::Xi, k, n))
        throw std::domain_error("lambda_weight: " + k.to_string() + " is not in Xi_" + std::to_string(n));
    int nonzero = 0;
    for (int v : k)
        nonzero += v != 0;
    return Rational(1 << nonzero) * spatial_weight(k, n);
}

// ---------------------------------------------------------------------------
// Orthogonality sums

namespace {

// Exact phase numerator p in exp(2 pi i p / det) for the spatial sum term j,
// and analogous frequency term k.
struct PhaseSetup {
    GeneratorMatrix b;
    Mat3 adj;
    std::int64_t det;
    std::vector<IndexVector> terms;
};

PhaseSetup phase_setup(int dim, int n, SumSide side) {
    GeneratorMatrix b = GeneratorMatrix::tiling(dim, n);
    Mat3 adj = adjugate(b);
    const std::int64_t det = b.determinant();
    IndexSetKind kind = IndexSetKind::Lambda;
    if (side == SumSide::frequency && dim == 3)
        kind = IndexSetKind::LambdaDag;
    return {b, adj, det, generate_index_set(kind, dim, n)};
}

}  // namespace

std::complex<double> orthogonality_sum_numeric(const IndexVector& v, int n, SumSide side) {
    const int dim = v.dim();
    const PhaseSetup s = phase_setup(dim, n, side);
    // spatial: v^T B^{-T} j = (B^{-1} v) . j = (adj v) . j / det
    // frequency: -k^T B^{-T} v = -k . (adj^T v) / det
    std::array<std::int64_t, 3> w{0, 0, 0};
    for (int r = 0; r < dim; ++r)
        for (int c = 0; c < dim; ++c)
            w[r] += (side == SumSide::spatial ? s.adj[r][c] : s.adj[c][r]) * v[c];
    const double sign = side == SumSide::spatial ? 1.0 : -1.0;
    std::complex<double> acc = 0.0;
    for (const auto& t : s.terms) {
        std::int64_t p = 0;
        for (int i = 0; i < dim; ++i)
            p += w[i] * t[i];
        const double angle = sign * 2.0 * std::numbers::pi * static_cast<double>(mod(p, s.det)) /
                             static_cast<double>(s.det);
        acc += std::polar(1.0, angle);
    }
    return acc / static_cast<double>(std::llabs(s.det));
}

int orthogonality_sums(const IndexVector& v, int n, SumSide side) {
    const GeneratorMatrix b = GeneratorMatrix::tiling(v.dim(), n);
    const int exact = (side == SumSide::spatial ? b : b.transpose()).contains(v) ? 1 : 0;
    const std::complex<double> numeric = orthogonality_sum_numeric(v, n, side);
    if (std::abs(numeric - static_cast<double>(exact)) > 1e-9)
        throw std::logic_error("orthogonality sum for " + v.to_string() + " does not round to " +
                               std::to_string(exact));
    return exact;
}

}  // namespace latcub
