// SPDX-License-Identifier: MIT
#pragma once

#include "latcub/cubature.hpp"

#include <string>
#include <vector>

namespace latcub {

inline constexpr const char* rule_schema_version = "1.0";

/// JSON document for a rule: schema_version, dim, n, weight_kind,
/// normalization ("p/q"), nodes (decimal coordinates), node_indices
/// (integer k), weights (rational strings; decimal strings for W1) and
/// exactness (ExactnessClass::describe()).
std::string emit_json(const CubatureRule& rule);

/// Inverse of emit_json. Throws std::invalid_argument on malformed input.
CubatureRule parse_json(const std::string& text);

/// Flat table with header k1,k2[,k3],x1,x2[,x3],weight; one node per row in
/// rule order. The weight column is the full weight normalization * w_i,
/// written as a rational string when exact and as a decimal otherwise.
std::string emit_csv(const CubatureRule& rule);

struct CsvRule {
    int dim = 2;
    std::vector<IndexVector> node_indices;
    std::vector<std::array<double, 3>> nodes;
    std::vector<std::string> weights;
};

/// Parses the table written by emit_csv. Throws std::invalid_argument.
CsvRule parse_csv(const std::string& text);

/// Full weight strings as written in the weight column of emit_csv.
std::vector<std::string> full_weight_strings(const CubatureRule& rule);

/// Shortest-exact decimal used for non-rational values ("%.17g").
std::string format_double(double v);

}  // namespace latcub
