// SPDX-License-Identifier: MIT
#include "latcub/rule_document.hpp"

#include <json.hpp>

#include <cstdio>
#include <sstream>
#include <stdexcept>

namespace latcub {

namespace {

using nlohmann::json;

IndexVector index_from(const std::vector<int>& c) {
    if (c.size() == 2)
        return IndexVector(c[0], c[1]);
    if (c.size() == 3)
        return IndexVector(c[0], c[1], c[2]);
    throw std::invalid_argument("node index must have 2 or 3 entries");
}

double parse_double(const std::string& s) {
    std::size_t used = 0;
    double v = 0.0;
    try {
        v = std::stod(s, &used);
    } catch (const std::logic_error&) {
        throw std::invalid_argument("not a number: '" + s + "'");
    }
    if (used != s.size())
        throw std::invalid_argument("not a number: '" + s + "'");
    return v;
}

std::vector<std::string> split(const std::string& line, char sep) {
    std::vector<std::string> out;
    std::string cell;
    std::istringstream in(line);
    while (std::getline(in, cell, sep))
        out.push_back(cell);
    if (!line.empty() && line.back() == sep)
        out.emplace_back();
    return out;
}

}  // namespace

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string emit_json(const CubatureRule& rule) {
    json doc;
    doc["schema_version"] = rule_schema_version;
    doc["dim"] = rule.dim;
    doc["n"] = rule.n;
    doc["weight_kind"] = std::string(to_string(rule.kind));
    doc["normalization"] = to_string(rule.normalization);
    json nodes = json::array(), indices = json::array(), weights = json::array();
    for (std::size_t i = 0; i < rule.size(); ++i) {
        const auto x = rule.node(i);
        nodes.push_back(std::vector<double>(x.begin(), x.end()));
        indices.push_back(std::vector<int>(rule.node_indices[i].begin(), rule.node_indices[i].end()));
        weights.push_back(rule.exact_weights.empty() ? format_double(rule.weights[i]) : to_string(rule.exact_weights[i]));
    }
    doc["nodes"] = std::move(nodes);
    doc["node_indices"] = std::move(indices);
    doc["weights"] = std::move(weights);
    doc["exactness"] = rule.exactness.describe();
    return doc.dump(1) + "\n";
}

CubatureRule parse_json(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::exception& e) {
        throw std::invalid_argument(std::string("rule document is not valid JSON: ") + e.what());
    }
    try {
        if (doc.at("schema_version").get<std::string>() != rule_schema_version)
            throw std::invalid_argument("unsupported schema_version " + doc.at("schema_version").get<std::string>());
        CubatureRule rule;
        rule.dim = doc.at("dim").get<int>();
        require_dim(rule.dim);
        rule.n = doc.at("n").get<int>();
        rule.kind = parse_weight_kind(doc.at("weight_kind").get<std::string>());
        rule.normalization = parse_rational(doc.at("normalization").get<std::string>());
        rule.exactness = ExactnessClass::parse(doc.at("exactness").get<std::string>());
        const auto& nodes = doc.at("nodes");
        const auto& indices = doc.at("node_indices");
        const auto& weights = doc.at("weights");
        if (nodes.size() != indices.size() || nodes.size() != weights.size())
            throw std::invalid_argument("nodes, node_indices and weights differ in length");
        const bool exact = rule.kind != WeightKind::W1;
        for (std::size_t i = 0; i < nodes.size(); ++i) {
            const auto x = nodes[i].get<std::vector<double>>();
            if (static_cast<int>(x.size()) != rule.dim)
                throw std::invalid_argument("node " + std::to_string(i) + " has the wrong dimension");
            std::array<double, 3> p{0.0, 0.0, 0.0};
            std::copy(x.begin(), x.end(), p.begin());
            rule.nodes.push_back(p);
            const IndexVector k = index_from(indices[i].get<std::vector<int>>());
            if (k.dim() != rule.dim)
                throw std::invalid_argument("node index " + std::to_string(i) + " has the wrong dimension");
            rule.node_indices.push_back(k);
            const auto w = weights[i].get<std::string>();
            if (exact) {
                rule.exact_weights.push_back(parse_rational(w));
                rule.weights.push_back(to_double(rule.exact_weights.back()));
            } else {
                rule.weights.push_back(parse_double(w));
            }
        }
        return rule;
    } catch (const json::exception& e) {
        throw std::invalid_argument(std::string("malformed rule document: ") + e.what());
    }
}

std::vector<std::string> full_weight_strings(const CubatureRule& rule) {
    std::vector<std::string> out;
    out.reserve(rule.size());
    for (std::size_t i = 0; i < rule.size(); ++i)
        out.push_back(rule.exact_weights.empty() ? format_double(to_double(rule.normalization) * rule.weights[i])
                                                 : to_string(rule.normalization * rule.exact_weights[i]));
    return out;
}

std::string emit_csv(const CubatureRule& rule) {
    std::ostringstream out;
    for (int i = 1; i <= rule.dim; ++i)
        out << 'k' << i << ',';
    for (int i = 1; i <= rule.dim; ++i)
        out << 'x' << i << ',';
    out << "weight\n";
    const auto w = full_weight_strings(rule);
    for (std::size_t q = 0; q < rule.size(); ++q) {
        for (int k : rule.node_indices[q])
            out << k << ',';
        for (double x : rule.node(q))
            out << format_double(x) << ',';
        out << w[q] << '\n';
    }
    return out.str();
}

CsvRule parse_csv(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    if (!std::getline(in, line))
        throw std::invalid_argument("empty CSV rule table");
    const auto header = split(line, ',');
    CsvRule rule;
    if (header.size() == 5)
        rule.dim = 2;
    else if (header.size() == 7)
        rule.dim = 3;
    else
        throw std::invalid_argument("unexpected CSV header: " + line);
    if (header.back() != "weight")
        throw std::invalid_argument("last CSV column must be weight");
    int row = 1;
    while (std::getline(in, line)) {
        ++row;
        if (line.empty())
            continue;
        const auto cells = split(line, ',');
        if (cells.size() != header.size())
            throw std::invalid_argument("CSV row " + std::to_string(row) + " has " + std::to_string(cells.size()) +
                                        " cells, expected " + std::to_string(header.size()));
        std::vector<int> k;
        std::array<double, 3> x{0.0, 0.0, 0.0};
        for (int i = 0; i < rule.dim; ++i) {
            const double v = parse_double(cells[static_cast<std::size_t>(i)]);
            if (v != static_cast<int>(v))
                throw std::invalid_argument("CSV row " + std::to_string(row) + ": index is not an integer");
            k.push_back(static_cast<int>(v));
            x[static_cast<std::size_t>(i)] = parse_double(cells[static_cast<std::size_t>(rule.dim + i)]);
        }
        rule.node_indices.push_back(index_from(k));
        rule.nodes.push_back(x);
        rule.weights.push_back(cells.back());
    }
    return rule;
}

}  // namespace latcub
