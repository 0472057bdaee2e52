#pragma once

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "apollodom/apollodom.hpp"
#include "apollodom/checks.hpp"

namespace apollodom::cli {

using nlohmann::json;

inline json base_record(const std::string& command) {
    json rec;
    rec["schema_version"] = record_schema_version;
    rec["tool"] = std::string(tool_name);
    rec["tool_version"] = std::string(tool_version);
    rec["command"] = command;
    return rec;
}

inline std::vector<VertexId> parse_id_list(const std::string& csv) {
    std::vector<VertexId> ids;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        ids.push_back(static_cast<VertexId>(std::stoul(item)));
    }
    if (ids.empty()) throw CLI::ValidationError("--set", "expected a comma-separated id list");
    return ids;
}

class Timer {
public:
    Timer(std::ostream& err, std::string label) : err_(err), label_(std::move(label)) {}
    ~Timer() {
        const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                            std::chrono::steady_clock::now() - start_)
                            .count();
        err_ << label_ << ": " << ms << " ms\n";
    }

private:
    std::ostream& err_;
    std::string label_;
    std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

struct TableRow {
    int k = 0;
    std::uint64_t n = 0;
    std::uint64_t m = 0;
    int diam = 0;
    bool diam_verified = false;
    std::string status; // solved | budget_exceeded | size_limit
    int gamma = 0;
    BigInt gamma_lo, gamma_hi;
};

inline TableRow compute_table_row(int k, int threads, std::uint64_t budget) {
    TableRow row;
    row.k = k;
    const auto report = bounds_report(k);
    BuildLimits build_limits;
    MetricsLimits metrics_limits;
    SolveOptions solve_opts;
    solve_opts.threads = threads;
    solve_opts.budget = budget;

    if (k <= build_limits.max_level) {
        const auto net = ApollonianNetwork::build(k);
        row.n = net.vertex_count();
        row.m = net.edge_count();
        if (net.vertex_count() <= metrics_limits.dense_matrix_cap) {
            row.diam = bfs_diameter(net, threads);
            row.diam_verified = true;
        } else {
            row.diam = diameter_closed_form(k);
        }
        try {
            const auto solved = exact_gamma(net, Variant::porous, solve_opts);
            row.status = "solved";
            row.gamma = solved.gamma;
            return row;
        } catch (const BudgetExceededError& e) {
            row.status = "budget_exceeded";
            row.gamma_lo = std::max<BigInt>(e.bracket_lo, report.best_lower);
            row.gamma_hi = std::min<BigInt>(e.bracket_hi, report.best_upper);
            return row;
        } catch (const SizeLimitError&) {
            // falls through to the formula-only bracket
        }
    } else {
        row.n = ApollonianNetwork::vertex_count_closed_form(k);
        row.m = ApollonianNetwork::edge_count_closed_form(k);
        row.diam = diameter_closed_form(k);
    }
    row.status = "size_limit";
    row.gamma_lo = report.best_lower;
    row.gamma_hi = report.best_upper;
    return row;
}

inline int cmd_table(int k_max, int threads, std::uint64_t budget, const std::string& format,
                     std::ostream& payload, std::ostream& err) {
    Timer timer(err, "table");
    std::vector<TableRow> rows;
    rows.reserve(static_cast<std::size_t>(k_max));
    for (int k = 1; k <= k_max; ++k) rows.push_back(compute_table_row(k, threads, budget));
    if (format == "csv") {
        payload << "k,n,m,diam,gamma\n";
        for (const auto& row : rows) {
            payload << row.k << "," << row.n << "," << row.m << "," << row.diam << ",";
            if (row.status == "solved")
                payload << row.gamma;
            else
                payload << row.gamma_lo.str() << ".." << row.gamma_hi.str();
            payload << "\n";
        }
    } else {
        for (const auto& row : rows) {
            json rec = base_record("table");
            rec["k"] = row.k;
            rec["n"] = row.n;
            rec["m"] = row.m;
            rec["diam"] = row.diam;
            rec["diam_verified"] = row.diam_verified;
            rec["variant"] = "porous";
            rec["gamma_status"] = row.status;
            if (row.status == "solved") {
                rec["gamma"] = row.gamma;
            } else {
                rec["gamma_lo"] = row.gamma_lo.str();
                rec["gamma_hi"] = row.gamma_hi.str();
            }
            payload << rec.dump() << "\n";
        }
    }
    return 0;
}

inline int cmd_verify(const std::string& suite, int k_min, int k_max, int threads,
                      std::uint64_t budget, const std::string& format, std::ostream& payload,
                      std::ostream& err) {
    Timer timer(err, "verify " + suite);
    std::vector<CheckResult> results;
    if (suite == "lemmas")
        results = run_lemma_checks(k_min, k_max, threads);
    else if (suite == "bounds")
        results = run_bounds_checks(k_min, k_max, threads);
    else
        results = run_table_checks(k_min, k_max, threads, budget);
    std::size_t failures = 0;
    for (const auto& r : results)
        if (!r.pass) ++failures;
    if (format == "records") {
        for (const auto& r : results) {
            json rec = base_record("verify");
            rec["suite"] = r.suite;
            rec["check"] = r.name;
            rec["k"] = r.k;
            rec["pass"] = r.pass;
            if (!r.detail.empty()) rec["detail"] = r.detail;
            payload << rec.dump() << "\n";
        }
        json summary = base_record("verify");
        summary["suite"] = suite;
        summary["checks"] = results.size();
        summary["failures"] = failures;
        payload << summary.dump() << "\n";
    } else {
        for (const auto& r : results) {
            payload << (r.pass ? "PASS" : "FAIL") << " " << r.suite << "/" << r.name
                    << " k=" << r.k;
            if (!r.pass && !r.detail.empty()) payload << " (" << r.detail << ")";
            payload << "\n";
        }
        payload << "passed " << (results.size() - failures) << "/" << results.size() << "\n";
    }
    return failures == 0 ? 0 : 1;
}

inline int cmd_build(int k, const std::string& format, std::ostream& payload, std::ostream& err) {
    Timer timer(err, "build");
    const auto net = ApollonianNetwork::build(k);
    if (format == "dot")
        write_dot(payload, net);
    else
        write_edge_list(payload, net);
    return 0;
}

inline int cmd_diameter(int k, int threads, std::ostream& payload, std::ostream& err) {
    Timer timer(err, "diameter");
    json rec = base_record("diameter");
    rec["k"] = k;
    rec["closed_form"] = diameter_closed_form(k);
    BuildLimits build_limits;
    MetricsLimits metrics_limits;
    if (k <= build_limits.max_level) {
        const auto net = ApollonianNetwork::build(k);
        if (net.vertex_count() <= metrics_limits.dense_matrix_cap) {
            rec["diam"] = bfs_diameter(net, threads);
            rec["verified"] = true;
            if (net.vertex_count() <= 10000) {
                const auto pair = diametral_pair(net, all_pairs(net, metrics_limits, threads));
                rec["pair"] = {pair.first, pair.second};
            }
        } else {
            rec["diam"] = diameter_closed_form(k);
            rec["verified"] = false;
        }
    } else {
        rec["diam"] = diameter_closed_form(k);
        rec["verified"] = false;
    }
    payload << rec.dump() << "\n";
    return 0;
}

inline int cmd_weights(int k, const std::string& set_csv, const std::string& variant_name,
                       int threads, const std::string& format, std::ostream& payload,
                       std::ostream& err) {
    Timer timer(err, "weights");
    const auto net = ApollonianNetwork::build(k);
    const auto variant = parse_variant(variant_name);
    const auto candidate = CandidateSet::of(net, parse_id_list(set_csv), variant);
    const auto wv = weight_vector(net, candidate, threads);
    if (format == "csv") {
        write_weights_csv(payload, net, wv);
        return 0;
    }
    const DyadicWeight* min_w = &wv.weights[0];
    for (const auto& w : wv.weights)
        if (w < *min_w) min_w = &w;
    json rec = base_record("weights");
    rec["k"] = k;
    rec["variant"] = std::string(to_string(variant));
    rec["set"] = candidate.members;
    rec["dominating"] = wv.all_at_least_one;
    rec["min_weight_numerator"] = min_w->numerator().str();
    rec["min_weight_exponent"] = min_w->exponent();
    rec["min_weight_decimal"] = min_w->to_decimal_string();
    payload << rec.dump() << "\n";
    return 0;
}

inline int cmd_solve(int k, const std::string& variant_name, int threads, std::uint64_t budget,
                     std::ostream& payload, std::ostream& err) {
    Timer timer(err, "solve");
    const auto net = ApollonianNetwork::build(k);
    const auto variant = parse_variant(variant_name);
    SolveOptions opts;
    opts.threads = threads;
    opts.budget = budget;
    json rec = base_record("solve");
    rec["k"] = k;
    rec["variant"] = std::string(to_string(variant));
    rec["threads"] = threads;
    rec["budget"] = budget;
    try {
        const auto result = exact_gamma(net, variant, opts);
        rec["status"] = "solved";
        rec["gamma"] = result.gamma;
        rec["witness"] = result.witness;
        rec["candidates_examined"] = result.candidates_examined;
        rec["pruned"] = result.pruned;
        rec["lower_bound_used"] = result.lower_bound_used;
        rec["upper_bound_used"] = result.upper_bound_used;
        payload << rec.dump() << "\n";
        return 0;
    } catch (const BudgetExceededError& e) {
        rec["status"] = "budget_exceeded";
        rec["gamma_lo"] = e.bracket_lo;
        rec["gamma_hi"] = e.bracket_hi;
        rec["candidates_examined"] = e.candidates_examined;
        rec["pruned"] = e.pruned;
        payload << rec.dump() << "\n";
        return 3;
    }
}

inline int cmd_bounds(int k, std::ostream& payload, std::ostream& err) {
    Timer timer(err, "bounds");
    const auto report = bounds_report(k);
    json rec = base_record("bounds");
    rec["k"] = report.k;
    rec["n"] = report.n.str();
    rec["diam"] = report.diameter;
    rec["lower_diam"] = report.lower_diam;
    rec["lower_closed_form"] = report.lower_closed_form;
    if (report.upper_generation) rec["upper_generation"] = report.upper_generation->str();
    if (report.upper_subnetwork) rec["upper_subnetwork"] = report.upper_subnetwork->str();
    if (report.upper_recursion) rec["upper_recursion"] = report.upper_recursion->str();
    rec["upper_order_floor"] = report.upper_order_floor.str();
    rec["upper_order_numerator"] = report.upper_order_numerator.str();
    rec["upper_order_denominator"] = 5;
    rec["best_lower"] = report.best_lower.str();
    rec["best_upper"] = report.best_upper.str();
    payload << rec.dump() << "\n";
    return 0;
}

/// Entry point shared by the binary and the tests. Returns the process exit
/// code: 0 success / all checks passed, 1 verification failure, 2 usage
/// error, 3 budget exceeded.
inline int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Apollonian networks: construction, exponential domination, exact solving"};
    app.require_subcommand(1);

    int k = 1, k_max = 7, k_min = -1;
    int threads = 1;
    std::uint64_t budget = 1'000'000'000;
    std::string format, out_path, variant = "porous", set_csv, suite;

    auto add_common = [&](CLI::App* cmd, const std::vector<std::string>& formats) {
        cmd->add_option("--threads", threads, "worker threads; never changes results")
            ->check(CLI::PositiveNumber);
        cmd->add_option("--budget", budget, "candidate expansion budget");
        cmd->add_option("--format", format, "output format")->check(CLI::IsMember(formats));
        cmd->add_option("--out", out_path, "write payload to this file instead of stdout");
    };

    auto* table = app.add_subcommand("table", "order, size, diameter, and gamma per level");
    table->add_option("--k-max", k_max, "largest level")->check(CLI::Range(1, 39));
    add_common(table, {"csv", "records"});

    auto* verify = app.add_subcommand("verify", "run a verification suite");
    verify->add_option("--suite", suite, "lemmas | bounds | table")
        ->required()
        ->check(CLI::IsMember({"lemmas", "bounds", "table"}));
    verify->add_option("--k-min", k_min, "first level");
    verify->add_option("--k-max", k_max, "last level")->check(CLI::Range(1, 14));
    add_common(verify, {"text", "records"});

    auto* build = app.add_subcommand("build", "construct a network and export it");
    build->add_option("--k", k, "level")->required()->check(CLI::Range(1, 14));
    add_common(build, {"dot", "edgelist"});

    auto* diameter = app.add_subcommand("diameter", "diameter of a level");
    diameter->add_option("--k", k, "level")->required()->check(CLI::PositiveNumber);
    add_common(diameter, {"records"});

    auto* weights = app.add_subcommand("weights", "weight vector for a candidate set");
    weights->add_option("--k", k, "level")->required()->check(CLI::Range(1, 14));
    weights->add_option("--set", set_csv, "comma-separated vertex ids")->required();
    weights->add_option("--variant", variant, "porous | nonporous")
        ->check(CLI::IsMember({"porous", "nonporous"}));
    add_common(weights, {"csv", "records"});

    auto* solve = app.add_subcommand("solve", "exact domination number");
    solve->add_option("--k", k, "level")->required()->check(CLI::Range(1, 14));
    solve->add_option("--variant", variant, "porous | nonporous")
        ->check(CLI::IsMember({"porous", "nonporous"}));
    add_common(solve, {"records"});

    auto* bounds_cmd = app.add_subcommand("bounds", "closed-form bound report");
    bounds_cmd->add_option("--k", k, "level")->required()->check(CLI::PositiveNumber);
    add_common(bounds_cmd, {"records"});

    std::reverse(args.begin(), args.end());
    try {
        app.parse(args);
    } catch (const CLI::ParseError& e) {
        std::stringstream message;
        const int code = app.exit(e, message, message);
        (code == 0 ? out : err) << message.str();
        return code == 0 ? 0 : 2;
    }

    std::ofstream file;
    std::ostream* payload = &out;
    if (!out_path.empty()) {
        file.open(out_path);
        if (!file) {
            err << "error: cannot open " << out_path << "\n";
            return 2;
        }
        payload = &file;
    }

    auto fmt = [&](const char* command_default) {
        return format.empty() ? std::string(command_default) : format;
    };

    try {
        if (table->parsed()) return cmd_table(k_max, threads, budget, fmt("csv"), *payload, err);
        if (verify->parsed()) {
            if (k_min < 0) k_min = suite == "lemmas" ? 2 : (suite == "bounds" ? 5 : 1);
            if (!verify->count("--k-max")) k_max = suite == "lemmas" ? 8 : (suite == "bounds" ? 10 : 7);
            return cmd_verify(suite, k_min, k_max, threads, budget, fmt("text"), *payload, err);
        }
        if (build->parsed()) return cmd_build(k, fmt("dot"), *payload, err);
        if (diameter->parsed()) return cmd_diameter(k, threads, *payload, err);
        if (weights->parsed())
            return cmd_weights(k, set_csv, variant, threads, fmt("csv"), *payload, err);
        if (solve->parsed()) return cmd_solve(k, variant, threads, budget, *payload, err);
        if (bounds_cmd->parsed()) return cmd_bounds(k, *payload, err);
    } catch (const BudgetExceededError& e) {
        err << "error: " << e.what() << "\n";
        return 3;
    } catch (const SizeLimitError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::out_of_range& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}

} // namespace apollodom::cli
