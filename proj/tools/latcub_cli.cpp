// SPDX-License-Identifier: MIT
#include "latcub/cubature.hpp"
#include "latcub/interpolation.hpp"
#include "latcub/lattice.hpp"
#include "latcub/rule_document.hpp"
#include "latcub/verify.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace {

using namespace latcub;

// Writes to the named file, or to stdout when the path is empty or "-".
void write_output(const std::string& path, const std::string& text) {
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path);
    if (!out)
        throw std::runtime_error("cannot open output file " + path);
    out << text;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw std::runtime_error("cannot open input file " + path);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

// Numeric CSV rows; a first line that does not parse as numbers is a header.
std::vector<std::vector<double>> read_numeric_csv(const std::string& path) {
    std::istringstream in(read_file(path));
    std::vector<std::vector<double>> rows;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r')
            line.pop_back();
        if (line.find_first_not_of(" \t") == std::string::npos)
            continue;
        std::vector<double> row;
        std::istringstream cells(line);
        std::string cell;
        bool numeric = true;
        while (std::getline(cells, cell, ',')) {
            try {
                std::size_t used = 0;
                row.push_back(std::stod(cell, &used));
                if (cell.find_first_not_of(" \t", used) != std::string::npos)
                    numeric = false;
            } catch (const std::logic_error&) {
                numeric = false;
            }
        }
        if (!numeric) {
            if (rows.empty() && lineno == 1)
                continue;
            throw std::runtime_error(path + ":" + std::to_string(lineno) + ": non-numeric cell");
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

std::pair<int, int> parse_range(const std::string& s) {
    const auto dots = s.find("..");
    try {
        if (dots == std::string::npos) {
            const int v = std::stoi(s);
            return {v, v};
        }
        return {std::stoi(s.substr(0, dots)), std::stoi(s.substr(dots + 2))};
    } catch (const std::logic_error&) {
        throw std::invalid_argument("bad n range '" + s + "', expected a or a..b");
    }
}

int cmd_nodes(int dim, int n, const std::string& rule_name, const std::string& format, const std::string& out) {
    const CubatureRule rule = make_rule(parse_weight_kind(rule_name), dim, n);
    write_output(out, format == "csv" ? emit_csv(rule) : emit_json(rule));
    return 0;
}

int cmd_verify(int dim, const std::string& range, const std::string& suite, const VerifyOptions& opt,
               const std::string& out) {
    require_dim(dim);
    const auto [lo, hi] = parse_range(range);
    if (lo > hi)
        throw std::invalid_argument("empty n range " + range);
    std::vector<CheckResult> results;
    for (int n = lo; n <= hi; ++n) {
        const auto add = [&](std::vector<CheckResult> r) { results.insert(results.end(), r.begin(), r.end()); };
        if (suite == "exactness" || suite == "all")
            add(verify_exactness(dim, n, opt));
        if (suite == "kernels" || suite == "all")
            add(verify_kernels(dim, n, opt));
        if (suite == "interpolation" || suite == "all")
            add(verify_interpolation(dim, n, opt));
    }
    std::string text;
    for (const auto& r : results)
        text += to_json_line(r) + "\n";
    write_output(out, text);
    const auto failed = std::count_if(results.begin(), results.end(),
                                      [](const CheckResult& r) { return r.status == CheckStatus::fail; });
    std::cerr << results.size() << " checks, " << failed << " unexpected failures\n";
    return has_unexpected_failure(results) ? 1 : 0;
}

int cmd_interp(int dim, int n, const std::string& samples_path, const std::string& probes_path,
               const std::string& out) {
    require_dim(dim);
    SampleMap samples;
    for (const auto& row : read_numeric_csv(samples_path)) {
        if (static_cast<int>(row.size()) != dim + 1)
            throw std::invalid_argument("sample rows need " + std::to_string(dim) + " index columns and a value");
        std::vector<int> k;
        for (int i = 0; i < dim; ++i) {
            if (row[static_cast<std::size_t>(i)] != std::round(row[static_cast<std::size_t>(i)]))
                throw std::invalid_argument("sample index is not an integer");
            k.push_back(static_cast<int>(row[static_cast<std::size_t>(i)]));
        }
        const IndexVector key = dim == 2 ? IndexVector(k[0], k[1]) : IndexVector(k[0], k[1], k[2]);
        if (!samples.emplace(key, row.back()).second)
            throw std::invalid_argument("duplicate sample key " + key.to_string());
    }
    const Interpolant in = algebraic_interpolant(dim, n, std::move(samples));
    std::string text;
    for (const auto& row : read_numeric_csv(probes_path)) {
        if (static_cast<int>(row.size()) != dim)
            throw std::invalid_argument("probe rows need " + std::to_string(dim) + " coordinates");
        const double v = in.evaluate(AlgebraicPoint(std::span<const double>(row)));
        for (double t : row)
            text += format_double(t) + ",";
        text += format_double(v) + "\n";
    }
    write_output(out, text);
    return 0;
}

int cmd_lebesgue(int dim, const std::vector<int>& ns, int grid, const std::string& out) {
    require_dim(dim);
    if (ns.empty())
        throw std::invalid_argument("no n values given");
    const int max_n = *std::max_element(ns.begin(), ns.end());
    if (grid == 0)
        grid = 4 * max_n;
    if (grid < 4 * max_n)
        throw std::invalid_argument("--grid must be at least 4 * max n = " + std::to_string(4 * max_n));
    std::string text = "n,nodes,estimate,estimate_over_log3\n";
    for (int n : ns) {
        const auto est = lebesgue_estimate(dim, n, grid);
        const auto nodes = generate_index_set(IndexSetKind::Xi, dim, n).size();
        const double l = std::log(static_cast<double>(n));
        text += std::to_string(n) + "," + std::to_string(nodes) + "," + format_double(est.value) + "," +
                (n > 1 ? format_double(est.value / (l * l * l)) : std::string("nan")) + "\n";
    }
    write_output(out, text);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Lattice cubature and interpolation for product Chebyshev weights"};
    app.require_subcommand(1);

    int dim = 2, n = 2, grid = 0;
    std::string rule = "w0", format = "json", out, range = "2..4", suite = "all", samples, probes;
    std::vector<int> n_list;
    VerifyOptions opt;

    const auto add_dim = [&](CLI::App* c) {
        c->add_option("--dim", dim, "dimension")->check(CLI::IsMember({2, 3}))->required();
    };

    auto* nodes = app.add_subcommand("nodes", "emit cubature nodes and weights");
    add_dim(nodes);
    nodes->add_option("--n", n, "rule parameter")->required();
    nodes->add_option("--rule", rule, "trig-sym, trig-equal, w0 or w1")
        ->check(CLI::IsMember({"trig-sym", "trig-equal", "w0", "w1"}));
    nodes->add_option("--format", format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
    nodes->add_option("--out", out, "output file (default stdout)");

    auto* verify = app.add_subcommand("verify", "run verification suites, one JSON record per check");
    add_dim(verify);
    verify->add_option("--n-range,--n", range, "a..b or a single n");
    verify->add_option("--suite", suite, "exactness, kernels, interpolation or all")
        ->check(CLI::IsMember({"exactness", "kernels", "interpolation", "all"}));
    verify->add_option("--seed", opt.seed, "random seed");
    verify->add_option("--tolerance-scale", opt.tolerance_scale, "multiplier for every tolerance")
        ->check(CLI::PositiveNumber);
    verify->add_option("--out", out, "output file (default stdout)");

    auto* interp = app.add_subcommand("interp", "evaluate the interpolation polynomial of sampled data");
    add_dim(interp);
    interp->add_option("--n", n, "interpolation parameter")->required();
    interp->add_option("--samples", samples, "CSV: index columns then value")->required();
    interp->add_option("--probes", probes, "CSV: t coordinates")->required();
    interp->add_option("--out", out, "output file (default stdout)");

    auto* leb = app.add_subcommand("lebesgue", "tabulate Lebesgue constant estimates");
    add_dim(leb);
    leb->add_option("--n", n_list, "comma-separated n values")->delimiter(',')->required();
    leb->add_option("--grid", grid, "points per axis (default 4 * max n)");
    leb->add_option("--out", out, "output file (default stdout)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*nodes)
            return cmd_nodes(dim, n, rule, format, out);
        if (*verify)
            return cmd_verify(dim, range, suite, opt, out);
        if (*interp)
            return cmd_interp(dim, n, samples, probes, out);
        return cmd_lebesgue(dim, n_list, grid, out);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
