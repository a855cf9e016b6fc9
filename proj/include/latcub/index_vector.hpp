// SPDX-License-Identifier: MIT
#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <stdexcept>
#include <string>

namespace latcub {

/// Integer lattice point in two or three dimensions.
///
/// Ordering is lexicographic on the coordinates (vectors of different
/// dimension order by dimension first), which is the order every generated
/// index set is returned in.
class IndexVector {
public:
    IndexVector() = default;
    IndexVector(int a, int b) : dim_(2), c_{a, b, 0} {}
    IndexVector(int a, int b, int c) : dim_(3), c_{a, b, c} {}
    IndexVector(std::initializer_list<int> coords);

    static IndexVector zeros(int dim);

    [[nodiscard]] int dim() const { return dim_; }
    [[nodiscard]] int operator[](int i) const { return c_[static_cast<std::size_t>(i)]; }
    int& operator[](int i) { return c_[static_cast<std::size_t>(i)]; }

    [[nodiscard]] const int* begin() const { return c_.data(); }
    [[nodiscard]] const int* end() const { return c_.data() + dim_; }

    IndexVector& operator+=(const IndexVector& o);
    IndexVector& operator-=(const IndexVector& o);

    friend IndexVector operator+(IndexVector a, const IndexVector& b) { return a += b; }
    friend IndexVector operator-(IndexVector a, const IndexVector& b) { return a -= b; }
    friend IndexVector operator-(IndexVector a);
    friend IndexVector operator*(int s, IndexVector a);

    friend auto operator<=>(const IndexVector&, const IndexVector&) = default;
    friend bool operator==(const IndexVector&, const IndexVector&) = default;

    [[nodiscard]] std::string to_string() const;

private:
    int dim_ = 0;
    std::array<int, 3> c_{0, 0, 0};
};

std::ostream& operator<<(std::ostream& os, const IndexVector& v);

inline void require_dim(int dim) {
    if (dim != 2 && dim != 3)
        throw std::invalid_argument("dimension must be 2 or 3, got " + std::to_string(dim));
}

}  // namespace latcub
