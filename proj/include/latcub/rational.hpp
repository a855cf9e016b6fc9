// SPDX-License-Identifier: MIT
#pragma once

#include <boost/rational.hpp>

#include <cstdint>
#include <string>

namespace latcub {

using Rational = boost::rational<std::int64_t>;

/// "p/q", or "p" when the denominator is one.
std::string to_string(const Rational& r);

/// Inverse of to_string; also accepts a bare integer.
Rational parse_rational(const std::string& s);

inline double to_double(const Rational& r) {
    return static_cast<double>(r.numerator()) / static_cast<double>(r.denominator());
}

}  // namespace latcub
