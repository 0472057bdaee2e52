#pragma once

#include <algorithm>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "apollodom/detail/parallel.hpp"
#include "apollodom/dyadic.hpp"
#include "apollodom/graph.hpp"
#include "apollodom/network.hpp"

namespace apollodom {

enum class Variant { porous, nonporous };

inline std::string_view to_string(Variant v) {
    return v == Variant::porous ? "porous" : "nonporous";
}

inline Variant parse_variant(std::string_view s) {
    if (s == "porous") return Variant::porous;
    if (s == "nonporous") return Variant::nonporous;
    throw std::invalid_argument("unknown variant '" + std::string(s) + "'");
}

/// A vertex subset under evaluation for one of the two domination variants.
/// Members are sorted and duplicate-free.
struct CandidateSet {
    std::vector<VertexId> members;
    Variant variant = Variant::porous;

    static CandidateSet of(const Graph& g, std::vector<VertexId> members, Variant variant) {
        for (VertexId v : members) g.check_vertex(v);
        std::sort(members.begin(), members.end());
        members.erase(std::unique(members.begin(), members.end()), members.end());
        return {std::move(members), variant};
    }

    static CandidateSet of(const ApollonianNetwork& net, std::vector<VertexId> members,
                           Variant variant) {
        return of(net.graph(), std::move(members), variant);
    }

    bool contains(VertexId v) const {
        return std::binary_search(members.begin(), members.end(), v);
    }

    std::size_t size() const { return members.size(); }
};

/// Per-vertex weights received from a candidate set.
struct WeightVector {
    std::vector<DyadicWeight> weights;
    CandidateSet candidate;
    bool all_at_least_one = false;
};

namespace detail {

/// Distance rows used by the weight sums: one BFS per member. Porous rows
/// run in the full graph; nonporous rows for member u run with the rest of
/// the set removed, so weight may not pass through other members.
inline std::vector<std::vector<std::uint32_t>> member_rows(const Graph& g, const CandidateSet& s,
                                                           int threads) {
    std::vector<std::vector<std::uint32_t>> rows(s.members.size());
    if (s.variant == Variant::porous) {
        parallel_for(0, s.members.size(), threads,
                     [&](std::size_t i) { rows[i] = bfs_distances(g, s.members[i]); });
    } else {
        std::vector<char> blocked(g.vertex_count(), 0);
        for (VertexId u : s.members) blocked[u] = 1;
        parallel_for(0, s.members.size(), threads, [&](std::size_t i) {
            std::vector<char> mask = blocked;
            mask[s.members[i]] = 0;
            rows[i] = bfs_distances_avoiding(g, s.members[i], mask);
        });
    }
    return rows;
}

} // namespace detail

/// Sum over members u of 1/2^(d(u,v)-1); the member itself receives 2.
/// Unreachable members contribute nothing.
inline DyadicWeight porous_weight_at(const Graph& g, const CandidateSet& s, VertexId v) {
    if (s.variant != Variant::porous)
        throw std::invalid_argument("porous_weight_at: candidate set is tagged nonporous");
    g.check_vertex(v);
    auto from_v = bfs_distances(g, v);
    DyadicWeight w;
    for (VertexId u : s.members)
        if (from_v[u] != no_path) w += DyadicWeight::distance_term(from_v[u]);
    return w;
}

/// Members receive exactly 2. Any other vertex receives, per member u, a
/// term 1/2^(f-1) where f is the hop distance once every other member is
/// deleted from the graph; unreachable means no term.
inline DyadicWeight nonporous_weight_at(const Graph& g, const CandidateSet& s, VertexId v) {
    if (s.variant != Variant::nonporous)
        throw std::invalid_argument("nonporous_weight_at: candidate set is tagged porous");
    g.check_vertex(v);
    if (s.contains(v)) return {2, 0};
    std::vector<char> blocked(g.vertex_count(), 0);
    for (VertexId u : s.members) blocked[u] = 1;
    DyadicWeight w;
    for (VertexId u : s.members) {
        std::vector<char> mask = blocked;
        mask[u] = 0;
        auto row = bfs_distances_avoiding(g, u, mask);
        if (row[v] != no_path) w += DyadicWeight::distance_term(row[v]);
    }
    return w;
}

inline WeightVector weight_vector(const Graph& g, const CandidateSet& s, int threads = 1) {
    const std::size_t n = g.vertex_count();
    auto rows = detail::member_rows(g, s, threads);
    WeightVector out;
    out.candidate = s;
    out.weights.assign(n, DyadicWeight::zero());
    for (std::size_t v = 0; v < n; ++v) {
        if (s.variant == Variant::nonporous && s.contains(static_cast<VertexId>(v))) {
            out.weights[v] = DyadicWeight(2, 0);
            continue;
        }
        DyadicWeight w;
        for (const auto& row : rows)
            if (row[v] != no_path) w += DyadicWeight::distance_term(row[v]);
        out.weights[v] = std::move(w);
    }
    out.all_at_least_one = std::all_of(out.weights.begin(), out.weights.end(),
                                       [](const DyadicWeight& w) { return w.at_least_one(); });
    return out;
}

inline bool is_dominating(const Graph& g, const CandidateSet& s, int threads = 1) {
    return weight_vector(g, s, threads).all_at_least_one;
}

inline DyadicWeight porous_weight_at(const ApollonianNetwork& net, const CandidateSet& s,
                                     VertexId v) {
    return porous_weight_at(net.graph(), s, v);
}

inline DyadicWeight nonporous_weight_at(const ApollonianNetwork& net, const CandidateSet& s,
                                        VertexId v) {
    return nonporous_weight_at(net.graph(), s, v);
}

inline WeightVector weight_vector(const ApollonianNetwork& net, const CandidateSet& s,
                                  int threads = 1) {
    return weight_vector(net.graph(), s, threads);
}

inline bool is_dominating(const ApollonianNetwork& net, const CandidateSet& s, int threads = 1) {
    return is_dominating(net.graph(), s, threads);
}

} // namespace apollodom
