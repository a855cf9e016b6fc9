// SPDX-License-Identifier: MIT
#pragma once

#include <cmath>
#include <complex>

namespace latcub {

/// Neumaier (improved Kahan-Babuska) accumulator. Each addition is split
/// with the TwoSum error-free transformation and the rounding error is
/// carried separately, so the result is as if summed in roughly twice the
/// working precision.
class CompensatedSum {
public:
    CompensatedSum& operator+=(double v) {
        const double t = sum_ + v;
        if (std::abs(sum_) >= std::abs(v))
            err_ += (sum_ - t) + v;
        else
            err_ += (v - t) + sum_;
        sum_ = t;
        return *this;
    }

    [[nodiscard]] double value() const { return sum_ + err_; }

private:
    double sum_ = 0.0;
    double err_ = 0.0;
};

class CompensatedComplexSum {
public:
    CompensatedComplexSum& operator+=(std::complex<double> v) {
        re_ += v.real();
        im_ += v.imag();
        return *this;
    }

    [[nodiscard]] std::complex<double> value() const { return {re_.value(), im_.value()}; }

private:
    CompensatedSum re_;
    CompensatedSum im_;
};

}  // namespace latcub
