// SPDX-License-Identifier: MIT
#pragma once

#include "latcub/index_vector.hpp"

#include <cstdint>
#include <random>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace latcub {

enum class CheckStatus { pass, fail, expected_fail };

std::string_view to_string(CheckStatus s);

/// One line of a verification report.
struct CheckResult {
    std::string suite;
    std::string name;
    int dim = 0;
    int n = 0;
    double max_error = 0.0;
    double tolerance = 0.0;
    CheckStatus status = CheckStatus::pass;
    std::string detail;
};

/// Single-line JSON record.
std::string to_json_line(const CheckResult& r);

/// True if any record failed without being an expected failure.
bool has_unexpected_failure(std::span<const CheckResult> results);

struct VerifyOptions {
    std::uint64_t seed = 0;
    double tolerance_scale = 1.0;
};

/// Deterministic generator for one (check, dim, n) combination, so results do
/// not depend on the order checks run in.
std::mt19937_64 make_rng(std::uint64_t seed, std::string_view check, int dim, int n);

// ---------------------------------------------------------------------------
// Individual measurements (max absolute errors unless stated otherwise)

/// W0 rule against exact moments over its exactness class of T-products.
double w0_exactness_error(int dim, int n);
/// W1 rule against exact moments over its exactness class of U-products.
double w1_exactness_error(int dim, int n);
/// Trigonometric rule on e_j, j in the closed frequency set of degree 2n-1.
/// samples == 0 means exhaustive; otherwise that many uniform draws.
double trig_exactness_error(int dim, int n, bool symmetric, int samples, std::mt19937_64& rng);
/// max |sym - equal| over the same frequencies.
double trig_variant_disagreement(int dim, int n, int samples, std::mt19937_64& rng);
/// |W0 rule(T_n(t1) T_n(t2)) - exact moment|; the rule is not exact here.
double w0_witness_deviation(int dim, int n);
/// 2D explicit even/odd split evaluation against the assembled W0 rule on
/// random cosine-sum integrands.
double w0_split_form_error(int n, std::mt19937_64& rng);

/// Max over probes of |closed - direct| / max(1, |direct|) for each compact
/// kernel of the dimension; the pair is (kernel name, error).
std::vector<std::pair<std::string, double>> kernel_equivalence_errors(int dim, int n, int probes,
                                                                      std::mt19937_64& rng);
/// Same comparison at singular configurations, with both fallbacks.
std::vector<std::pair<std::string, double>> kernel_singular_errors(int dim, int n, std::mt19937_64& rng);

/// max |ell_k(j/2n) - delta_kj| over k, j in Xi_n.
double delta_property_error(int dim, int n);
/// max |sum_k ell_k(x) - 1| over random probes.
double partition_of_unity_error(int dim, int n, int probes, std::mt19937_64& rng);
/// max |ell_k(x) - ell_k(sigma x)| over random probes and all k, sigma.
double evenness_error(int dim, int n, int probes, std::mt19937_64& rng);
/// Trigonometric interpolants with random data, at all nodes: trig_I
/// reproduces samples; trig_Istar returns class sums at boundary nodes.
double trig_interpolation_error(int dim, int n, std::mt19937_64& rng);
double sym_interpolation_error(int dim, int n, std::mt19937_64& rng);
/// 2D closed-form fundamental polynomial against P o PhiStar at random t.
double closed_form_error(int n, int probes, std::mt19937_64& rng);

/// f = sum_m c_m prod T_{m_i}(t_i).
struct ChebyshevSeries {
    int dim = 2;
    std::vector<std::pair<IndexVector, double>> terms;

    [[nodiscard]] double operator()(std::span<const double> t) const;
};

/// Random element of the interpolation space: the even part of
/// sum_nu w_nu a_[nu] e_nu over the closed frequency set, with coefficients
/// a constant on congruence classes modulo the tiling lattice and w_nu the
/// reciprocal class size.
ChebyshevSeries random_space_element(int dim, int n, std::mt19937_64& rng);

/// Max over `functions` random space elements and `probes` random points of
/// |L_n f - f| / max |f|.
double reproduction_error(int dim, int n, int functions, int probes, std::mt19937_64& rng);
/// Max |L_n f - f| over random points for f = T_n(t1) T_n(t2); large values
/// are expected.
double nonreproduction_witness(int dim, int n, int probes, std::mt19937_64& rng);
/// Largest product-Chebyshev coefficient of L_n(random data) outside the
/// index set of Pi*_n (total degree <= n in 2D, pairwise sums <= n in 3D).
double space_membership_error(int dim, int n, std::mt19937_64& rng);

// ---------------------------------------------------------------------------
// Suites

std::vector<CheckResult> verify_exactness(int dim, int n, const VerifyOptions& opt);
std::vector<CheckResult> verify_kernels(int dim, int n, const VerifyOptions& opt);
std::vector<CheckResult> verify_interpolation(int dim, int n, const VerifyOptions& opt);

}  // namespace latcub
