// SPDX-License-Identifier: MIT
// Acceptance battery: one PASS/FAIL line per criterion.
#include "latcub/cubature.hpp"
#include "latcub/interpolation.hpp"
#include "latcub/lattice.hpp"
#include "latcub/oracle.hpp"
#include "latcub/verify.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

using namespace latcub;

namespace {

struct Outcome {
    bool pass;
    std::string detail;
};

char buf[512];

template <class... A>
std::string fmt(const char* f, A... a) {
    std::snprintf(buf, sizeof buf, f, a...);
    return buf;
}

Outcome max_within(const std::string& what, double worst, double tol) {
    return {worst <= tol, fmt("%s max error %.3e (tol %.0e)", what.c_str(), worst, tol)};
}

Outcome c1() {
    double w = 0.0;
    for (int n = 2; n <= 16; ++n)
        w = std::max(w, w0_exactness_error(2, n));
    return max_within("2D W0 total degree 2n-1, n=2..16:", w, 1e-12);
}

Outcome c2() {
    double w = 0.0;
    for (int n = 3; n <= 16; ++n)
        w = std::max(w, w1_exactness_error(2, n));
    return max_within("2D W1 total degree 2n-5, n=3..16:", w, 1e-12);
}

Outcome c3() {
    double w = 0.0;
    for (int n = 2; n <= 10; ++n)
        w = std::max(w, w0_exactness_error(3, n));
    const double w2 = w0_witness_deviation(3, 2), w3 = w0_witness_deviation(3, 3);
    Outcome o = max_within("3D W0 pairwise sums <= 2n-1, n=2..10:", w, 1e-11);
    o.pass = o.pass && w2 > 1e-3 && w3 > 1e-3;
    o.detail += fmt("; witness T_n T_n deviation %.3g (n=2), %.3g (n=3), must exceed 1e-3", w2, w3);
    return o;
}

Outcome c4() {
    double w = 0.0;
    for (int n = 3; n <= 10; ++n)
        w = std::max(w, w1_exactness_error(3, n));
    return max_within("3D W1 pairwise sums <= 2n-5, n=3..10:", w, 1e-11);
}

Outcome c5() {
    double w = 0.0;
    for (bool sym : {true, false}) {
        for (int n = 2; n <= 8; ++n) {
            auto rng = make_rng(0, "acceptance5", 2, n);
            w = std::max(w, trig_exactness_error(2, n, sym, 0, rng));
        }
        for (int n = 2; n <= 6; ++n) {
            auto rng = make_rng(0, "acceptance5", 3, n);
            w = std::max(w, trig_exactness_error(3, n, sym, 500, rng));
        }
    }
    return max_within("trig rules, both variants, 2D exhaustive n<=8, 3D 500 samples n<=6:", w, 1e-12);
}

Outcome c6() {
    long bad = 0;
    const auto count = [](IndexSetKind k, int dim, int n) {
        return static_cast<long>(generate_index_set(k, dim, n).size());
    };
    for (int n = 1; n <= 64; ++n) {
        const long a = n / 2 + 1, b = (n - 1) / 2 + 1;
        const long xi = count(IndexSetKind::Xi, 2, n);
        bad += xi != a * a + b * b;
        bad += xi != static_cast<long>(n) * (n + 1) / 2 + n / 2 + 1;
        bad += count(IndexSetKind::Lambda, 2, n) != 2L * n * n;
        bad += count(IndexSetKind::XStar, 2, n) != 2L * n * n + 2L * n + 1;
    }
    for (int n = 1; n <= 32; ++n) {
        const long a = n / 2 + 1, b = (n - 1) / 2 + 1, m = n + 1;
        const long xi = count(IndexSetKind::Xi, 3, n);
        bad += xi != a * a * a + b * b * b;
        // 4|Xi| = (n+1)^3 + 3(n+1) for even n, (n+1)^3 for odd n
        bad += 4 * xi != m * m * m + (n % 2 == 0 ? 3 * m : 0);
        const long n3 = static_cast<long>(n) * n * n;
        bad += count(IndexSetKind::Lambda, 3, n) != 2 * n3;
        bad += count(IndexSetKind::LambdaDag, 3, n) != 2 * n3;
        bad += count(IndexSetKind::XStar, 3, n) != n3 + m * m * m;
    }
    return {bad == 0, fmt("node and index set counts, 2D n<=64, 3D n<=32: %ld mismatches", bad)};
}

Outcome c7() {
    double eq = 0.0, sing = 0.0;
    for (int dim : {2, 3})
        for (int n = 1; n <= (dim == 2 ? 12 : 8); ++n) {
            auto rng = make_rng(0, "acceptance7", dim, n);
            for (const auto& [name, e] : kernel_equivalence_errors(dim, n, 200, rng))
                eq = std::max(eq, e);
            for (const auto& [name, e] : kernel_singular_errors(dim, n, rng))
                sing = std::max(sing, e);
        }
    return {eq <= 1e-9 && sing <= 1e-10,
            fmt("compact kernels vs direct sums, 200 points per (kernel, n): max relative error %.3e (tol 1e-9); "
                "singular probes %.3e (tol 1e-10)",
                eq, sing)};
}

Outcome c8() {
    double delta = 0.0, unity = 0.0;
    for (int dim : {2, 3})
        for (int n = 2; n <= (dim == 2 ? 8 : 5); ++n) {
            delta = std::max(delta, delta_property_error(dim, n));
            auto rng = make_rng(0, "acceptance8", dim, n);
            unity = std::max(unity, partition_of_unity_error(dim, n, 100, rng));
        }
    return {delta <= 1e-9 && unity <= 1e-9,
            fmt("delta property 2D n=2..8, 3D n=2..5: %.3e; partition of unity: %.3e (tol 1e-9)", delta, unity)};
}

Outcome c9() {
    double w = 0.0;
    for (const auto& [dim, n] : std::vector<std::pair<int, int>>{{2, 4}, {2, 8}, {3, 3}, {3, 5}}) {
        auto rng = make_rng(0, "acceptance9", dim, n);
        w = std::max(w, reproduction_error(dim, n, 10, 100, rng));
    }
    return max_within("reproduction of 10 random space elements at 100 probes (relative):", w, 1e-8);
}

Outcome c10() {
    bool ok = true;
    std::string d;
    for (const auto& [dim, ns] : std::vector<std::pair<int, std::vector<int>>>{{2, {4, 8, 16, 32}}, {3, {4, 8, 16}}}) {
        double prev = 0.0, base = 0.0;
        d += fmt("%dD:", dim);
        for (int n : ns) {
            const double v = lebesgue_estimate(dim, n, 4 * n).value;
            const double l = std::log(static_cast<double>(n));
            const double ratio = v / (l * l * l);
            if (n == ns.front())
                base = ratio;
            ok = ok && v >= prev && ratio <= 4.0 * base;
            prev = v;
            d += fmt(" n=%d %.4f (ratio %.3f)", n, v, ratio);
        }
        d += "; ";
    }
    return {ok, "Lebesgue estimates nondecreasing, ratio within 4x of n=4: " + d};
}

Outcome c11() {
    double w = 0.0;
    for (const auto& [dim, n] : std::vector<std::pair<int, int>>{{2, 16}, {3, 12}}) {
        const Integrand f = [](std::span<const double> t) {
            double s = 0.0;
            for (double v : t)
                s += v;
            return std::exp(s);
        };
        const double ref = oracle::reference_quadrature(f, dim, 40);
        w = std::max(w, std::abs(latcub::apply(w0_rule(dim, n), f) - ref));
    }
    return max_within("W0 rule on exp(sum t) vs order-40 reference, 2D n=16, 3D n=12:", w, 1e-6);
}

}  // namespace

int main() {
    const std::vector<std::function<Outcome()>> criteria{c1, c2, c3, c4, c5, c6, c7, c8, c9, c10, c11};
    int failed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        const auto t0 = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = criteria[i]();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        std::printf("%s criterion %zu: %s [%.1f s]\n", o.pass ? "PASS" : "FAIL", i + 1, o.detail.c_str(), secs);
        std::fflush(stdout);
        failed += o.pass ? 0 : 1;
    }
    std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
    return failed == 0 ? 0 : 1;
}
