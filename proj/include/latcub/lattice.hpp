// SPDX-License-Identifier: MIT
#pragma once

#include "latcub/index_vector.hpp"
#include "latcub/rational.hpp"

#include <array>
#include <complex>
#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

namespace latcub {

/// Integer generator matrix of a lattice M Z^d, d in {2, 3}.
///
/// The two tiling generators used throughout are the rhombus generator
/// n [[1,1],[-1,1]] (det 2n^2) and the fcc generator n [[0,1,1],[1,0,1],[1,1,0]]
/// (det 2n^3). A scaled identity s I is also representable, for congruence
/// modulo s Z^d.
class GeneratorMatrix {
public:
    static GeneratorMatrix rhombus(int n);
    static GeneratorMatrix fcc(int n);
    /// The tiling generator of the given dimension.
    static GeneratorMatrix tiling(int dim, int n);
    static GeneratorMatrix scaled_identity(int dim, int scale);

    [[nodiscard]] int dim() const { return dim_; }
    [[nodiscard]] int n() const { return n_; }
    [[nodiscard]] std::int64_t entry(int r, int c) const { return m_[r][c]; }
    [[nodiscard]] std::int64_t determinant() const;
    [[nodiscard]] GeneratorMatrix transpose() const;

    /// True iff v lies in M Z^d.
    [[nodiscard]] bool contains(const IndexVector& v) const;

private:
    GeneratorMatrix(int dim, int n) : dim_(dim), n_(n) {}

    int dim_;
    int n_;
    std::array<std::array<std::int64_t, 3>, 3> m_{};
};

enum class IndexSetKind {
    Lambda,         // fundamental frequency (2D) / spatial (3D) set, half-open
    LambdaStar,     // closed counterpart of Lambda
    LambdaDag,      // 3D only: integer points of the rhombic dodecahedron, half-open
    LambdaDagStar,  // 3D only: closed rhombic dodecahedron
    X,              // spatial node indices, half-open box
    XStar,          // spatial node indices, closed box
    Xi,             // nonnegative-orthant representatives of XStar
};

std::string_view to_string(IndexSetKind kind);

/// All integer points of the named set, in lexicographic order.
/// Throws std::invalid_argument for dim outside {2,3}, n < 1 (n < 0 for
/// LambdaStar/LambdaDagStar, whose n = 0 set is {0}), or a LambdaDag kind
/// in two dimensions.
std::vector<IndexVector> generate_index_set(IndexSetKind kind, int dim, int n);

/// Membership test for the same sets without enumerating them.
bool in_index_set(IndexSetKind kind, const IndexVector& v, int n);

enum class BoundaryKind { interior, face, edge, vertex };

std::string_view to_string(BoundaryKind kind);

struct BoundaryClass {
    BoundaryKind kind;
    int multiplicity;  // size of the congruence class containing the point

    friend bool operator==(const BoundaryClass&, const BoundaryClass&) = default;
};

/// Position of k in the closed box [-n, n]^d of XStar. The multiplicity is
/// 2^(number of coordinates equal to +-n), the size of k's class modulo 2n Z^d.
/// Throws std::domain_error if k is not in XStar.
BoundaryClass classify_spatial(const IndexVector& k, int n);

/// Class of a frequency j in the closed symmetric frequency set (LambdaStar
/// in 2D, LambdaDagStar in 3D) under congruence modulo the tiling lattice.
/// The multiplicity is counted by enumerating congruent points; in 3D it is
/// one of {1,2,3,4,6}, in 2D one of {1,2,4}.
/// Throws std::domain_error if j is outside the set.
BoundaryClass classify_frequency(const IndexVector& j, int n);

/// Members of `set` congruent to k modulo the lattice, k included.
/// Throws std::domain_error if k is not in `set`.
std::vector<IndexVector> congruence_class(const IndexVector& k,
                                          std::span<const IndexVector> set,
                                          const GeneratorMatrix& lattice);

/// Boundary weight c_k = 1 / spatial multiplicity, for k in XStar.
Rational spatial_weight(const IndexVector& k, int n);

/// Boundary weight for a frequency in the symmetric set: 1 / frequency
/// multiplicity (the 2D c-tilde and the 3D mu weights).
Rational frequency_weight(const IndexVector& j, int n);

/// Algebraic cubature weight lambda_k for k in Xi: the number of distinct
/// sign images of k times c_k, i.e. 2^(number of coordinates with 0 < k_i < n).
Rational lambda_weight(const IndexVector& k, int n);

enum class SumSide { spatial, frequency };

/// Normalized exponential orthogonality sums over the tiling sets.
///
/// spatial:   (1/|det B|) sum_{j in Lambda_B}  exp(2 pi i v^T B^{-T} j),
///            which is 1 iff v = 0 mod B and 0 otherwise.
/// frequency: (1/|det B|) sum_{k in Lambda_B^dag} exp(-2 pi i k^T B^{-T} v),
///            which is 1 iff v = 0 mod B^T.
///
/// The returned value is the exact lattice-membership answer; the floating
/// point sum is evaluated alongside and std::logic_error is thrown if it
/// does not round to the same integer.
int orthogonality_sums(const IndexVector& v, int n, SumSide side);

/// The floating-point exponential sum behind orthogonality_sums.
std::complex<double> orthogonality_sum_numeric(const IndexVector& v, int n, SumSide side);

}  // namespace latcub
