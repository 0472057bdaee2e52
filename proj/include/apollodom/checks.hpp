#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "apollodom/bounds.hpp"
#include "apollodom/domination.hpp"
#include "apollodom/metrics.hpp"
#include "apollodom/network.hpp"
#include "apollodom/solver.hpp"

namespace apollodom {

/// One verdict from a verification suite. Names describe the structural
/// fact checked; `detail` carries the counterexample when pass is false.
struct CheckResult {
    std::string suite;
    std::string name;
    int k = 0;
    bool pass = true;
    std::string detail;
};

/// Published reference values for small levels; the table suite recomputes
/// every cell and compares.
struct KnownLevelRow {
    int k;
    std::uint64_t n;
    std::uint64_t m;
    int diam;
    int gamma;
};

inline constexpr KnownLevelRow known_level_rows[] = {
    {1, 3, 3, 1, 1},    {2, 4, 6, 1, 1},     {3, 7, 15, 2, 1},   {4, 16, 42, 3, 2},
    {5, 43, 123, 3, 2}, {6, 124, 366, 4, 3}, {7, 367, 1095, 5, 3},
};

namespace detail {

inline void record_check(std::vector<CheckResult>& out, std::string suite, std::string name, int k,
                         bool pass, std::string detail = {}) {
    out.push_back({std::move(suite), std::move(name), k, pass, std::move(detail)});
}

inline std::size_t common_neighbor_count(const Graph& g, VertexId a, VertexId b) {
    auto na = g.neighbors(a);
    auto nb = g.neighbors(b);
    std::size_t i = 0, j = 0, count = 0;
    while (i < na.size() && j < nb.size()) {
        if (na[i] < nb[j])
            ++i;
        else if (nb[j] < na[i])
            ++j;
        else {
            ++count;
            ++i;
            ++j;
        }
    }
    return count;
}

} // namespace detail

/// Structural facts about every built level in [k_min, k_max]: generation
/// independence and attachment shape, closed-form sizes, degrees and p-set
/// sizes, and the diameter formula.
inline std::vector<CheckResult> run_lemma_checks(int k_min, int k_max, int threads = 1) {
    std::vector<CheckResult> out;
    for (int k = std::max(1, k_min); k <= k_max; ++k) {
        const auto net = ApollonianNetwork::build(k);
        const auto& g = net.graph();
        const std::size_t n = net.vertex_count();

        bool pass = net.vertex_count() == ApollonianNetwork::vertex_count_closed_form(k) &&
                    net.edge_count() == ApollonianNetwork::edge_count_closed_form(k);
        for (int j = 1; j <= k; ++j)
            pass = pass && net.generation_size(j) == ApollonianNetwork::generation_size_closed_form(j);
        detail::record_check(out, "lemmas", "counts-match-closed-forms", k, pass);

        std::string bad;
        pass = true;
        for (VertexId v = 0; v < n && pass; ++v) {
            const int r = net.generation_of(v);
            if (r < 2) continue;
            if (!net.neighbors_in_generation(v, r).empty()) {
                pass = false;
                bad = "vertex " + std::to_string(v);
            }
        }
        detail::record_check(out, "lemmas", "same-generation-nonadjacent", k, pass, bad);

        pass = true;
        bad.clear();
        for (VertexId v = 0; v < n && pass; ++v) {
            const int r = net.generation_of(v);
            if (r < 2) continue;
            if (net.neighbors_in_generation(v, r - 1).empty()) {
                pass = false;
                bad = "vertex " + std::to_string(v);
            }
        }
        detail::record_check(out, "lemmas", "has-previous-generation-neighbor", k, pass, bad);

        pass = true;
        bad.clear();
        for (VertexId v = 0; v < n && pass; ++v) {
            const int r = net.generation_of(v);
            if (r < 2) continue;
            std::vector<VertexId> older;
            for (VertexId u : g.neighbors(v))
                if (net.generation_of(u) < r) older.push_back(u);
            bool ok = older.size() == 3;
            if (ok)
                ok = g.has_edge(older[0], older[1]) && g.has_edge(older[0], older[2]) &&
                     g.has_edge(older[1], older[2]);
            if (!ok) {
                pass = false;
                bad = "vertex " + std::to_string(v);
            }
        }
        detail::record_check(out, "lemmas", "three-older-neighbors-form-triangle", k, pass, bad);

        pass = true;
        bad.clear();
        if (k >= 2) {
            for (VertexId v : net.generation_members(k)) {
                for (VertexId u : g.neighbors(v)) {
                    if (net.generation_of(u) >= k) continue;
                    if (detail::common_neighbor_count(g, u, v) != 2) {
                        pass = false;
                        bad = "pair " + std::to_string(u) + "," + std::to_string(v);
                        break;
                    }
                }
                if (!pass) break;
            }
        }
        detail::record_check(out, "lemmas", "newest-edge-common-neighborhood-is-two", k, pass, bad);

        pass = true;
        bad.clear();
        for (VertexId v = 0; v < n && pass; ++v) {
            const int r = net.generation_of(v);
            if (r < 2) continue;
            for (int j = 2; j < r; ++j) {
                if (net.neighbors_in_generation(v, j).size() > 1) {
                    pass = false;
                    bad = "vertex " + std::to_string(v) + " generation " + std::to_string(j);
                    break;
                }
            }
        }
        detail::record_check(out, "lemmas", "repeated-generation-neighbors-only-in-seed", k, pass, bad);

        pass = true;
        bad.clear();
        for (VertexId v = 0; v < n && pass; ++v) {
            const int r = net.generation_of(v);
            if (r < 4) continue;
            bool found = false;
            for (VertexId u : g.neighbors(v))
                if (net.generation_of(u) <= r - 3) {
                    found = true;
                    break;
                }
            if (!found) {
                pass = false;
                bad = "vertex " + std::to_string(v);
            }
        }
        detail::record_check(out, "lemmas", "neighbor-within-three-levels-back", k, pass, bad);

        pass = true;
        bad.clear();
        if (k >= 2) {
            const std::size_t older_end = net.generation_begin(k);
            for (VertexId v = 0; v < older_end; ++v) {
                if (net.neighbors_in_generation(v, k).empty()) {
                    pass = false;
                    bad = "vertex " + std::to_string(v);
                    break;
                }
            }
        }
        detail::record_check(out, "lemmas", "every-older-vertex-touches-newest-generation", k, pass, bad);

        bool p_pass = true, d_pass = true, pd_pass = true;
        std::string p_bad, d_bad, pd_bad;
        for (VertexId v = 0; v < n; ++v) {
            const int r = net.generation_of(v);
            const std::uint64_t p = net.p_set(v).size();
            const std::uint64_t p_expected =
                r > 1 ? 3ull << (k - r) : 1ull << (k - 1);
            const std::uint64_t d_expected =
                r > 1 ? 3ull << (k - r) : (1ull << (k - 1)) + 1;
            if (p_pass && p != p_expected) {
                p_pass = false;
                p_bad = "vertex " + std::to_string(v);
            }
            if (d_pass && net.degree(v) != d_expected) {
                d_pass = false;
                d_bad = "vertex " + std::to_string(v);
            }
            if (pd_pass && net.degree(v) != p + (r == 1 ? 1 : 0)) {
                pd_pass = false;
                pd_bad = "vertex " + std::to_string(v);
            }
        }
        detail::record_check(out, "lemmas", "p-set-size-closed-form", k, p_pass, p_bad);
        detail::record_check(out, "lemmas", "degree-closed-form", k, d_pass, d_bad);
        detail::record_check(out, "lemmas", "degree-equals-p-set-plus-seed-edge", k, pd_pass, pd_bad);

        const int diam = bfs_diameter(net, threads);
        detail::record_check(out, "lemmas", "diameter-matches-closed-form", k,
                             diam == diameter_closed_form(k),
                             "bfs=" + std::to_string(diam));
    }
    return out;
}

/// Bound machinery at every level in [k_min, k_max]: report consistency,
/// the two constructive dominating sets (existence, size, verified
/// domination), and the two-hop backup coverage behind the generation set.
inline std::vector<CheckResult> run_bounds_checks(int k_min, int k_max, int threads = 1) {
    std::vector<CheckResult> out;
    for (int k = std::max(1, k_min); k <= k_max; ++k) {
        const auto report = bounds_report(k);
        detail::record_check(out, "bounds", "lower-bounds-ordered", k,
                             report.lower_closed_form <= report.lower_diam);
        detail::record_check(out, "bounds", "bracket-consistent", k,
                             report.best_lower <= report.best_upper);
        if (report.upper_generation && report.upper_subnetwork)
            detail::record_check(out, "bounds", "subnetwork-bound-below-generation-bound", k,
                                 *report.upper_subnetwork < *report.upper_generation);

        if (k < 6) continue;
        const auto net = ApollonianNetwork::build(k);

        const auto gen_set = generation_dominating_set(net);
        detail::record_check(out, "bounds", "generation-set-size", k,
                             BigInt(gen_set.size()) == *report.upper_generation,
                             std::to_string(gen_set.size()));
        detail::record_check(out, "bounds", "generation-set-dominates", k,
                             is_dominating(net, gen_set, threads));

        if (k <= 9) {
            // vertices of the last two generations with no neighbor in the
            // set must see at least two set members within two hops
            bool pass = true;
            std::string bad;
            const std::size_t set_lo = net.generation_begin(k - 3);
            const std::size_t set_hi = net.generation_begin(k - 2);
            auto in_set = [&](VertexId u) { return u >= set_lo && u < set_hi; };
            for (std::size_t v = net.generation_begin(k - 1); v < net.vertex_count() && pass; ++v) {
                bool direct = false;
                for (VertexId u : net.graph().neighbors(static_cast<VertexId>(v)))
                    if (in_set(u)) {
                        direct = true;
                        break;
                    }
                if (direct) continue;
                std::vector<VertexId> within2;
                for (VertexId u : net.graph().neighbors(static_cast<VertexId>(v)))
                    for (VertexId w : net.graph().neighbors(u))
                        if (in_set(w)) within2.push_back(w);
                std::sort(within2.begin(), within2.end());
                within2.erase(std::unique(within2.begin(), within2.end()), within2.end());
                if (within2.size() < 2) {
                    pass = false;
                    bad = "vertex " + std::to_string(v);
                }
            }
            detail::record_check(out, "bounds", "two-hop-backup-coverage", k, pass, bad);
        }

        if (k >= 10) {
            const auto sub_set = subnetwork_dominating_set(net);
            detail::record_check(out, "bounds", "subnetwork-set-size", k,
                                 BigInt(sub_set.size()) == *report.upper_subnetwork,
                                 std::to_string(sub_set.size()));
            detail::record_check(out, "bounds", "subnetwork-set-dominates", k,
                                 is_dominating(net, sub_set, threads));
        }
    }
    return out;
}

/// Recomputes order, size, diameter, and porous gamma per level and compares
/// with the known reference rows (defined through level 7).
inline std::vector<CheckResult> run_table_checks(int k_min, int k_max, int threads = 1,
                                                 std::uint64_t budget = 1'000'000'000) {
    std::vector<CheckResult> out;
    for (int k = std::max(1, k_min); k <= std::min(k_max, 7); ++k) {
        const KnownLevelRow& row = known_level_rows[k - 1];
        const auto net = ApollonianNetwork::build(k);
        SolveOptions opts;
        opts.threads = threads;
        opts.budget = budget;
        const auto solved = exact_gamma(net, Variant::porous, opts);
        const bool pass = net.vertex_count() == row.n && net.edge_count() == row.m &&
                          bfs_diameter(net, threads) == row.diam && solved.gamma == row.gamma;
        detail::record_check(out, "table", "row-matches-known-values", k, pass,
                             "n=" + std::to_string(net.vertex_count()) +
                                 " m=" + std::to_string(net.edge_count()) +
                                 " gamma=" + std::to_string(solved.gamma));
    }
    return out;
}

} // namespace apollodom
