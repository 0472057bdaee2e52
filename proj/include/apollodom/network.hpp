#pragma once

#include <cassert>
#include <cstdint>
#include <numeric>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "apollodom/errors.hpp"
#include "apollodom/graph.hpp"

namespace apollodom {

/// The triangle a new vertex was attached to: the apex is its parent in the
/// previous generation, the pair are the two adjacent apex neighbors it was
/// joined with. Empty for the three seed vertices and the level-2 center.
struct TriangleAnchor {
    VertexId apex;
    std::pair<VertexId, VertexId> pair; // min id first
};

struct BuildLimits {
    /// Default cap keeps the largest build near 800k vertices / 2.4M edges.
    int max_level = 14;
};

/// A level-k Apollonian network. Level 1 is a triangle; level 2 adds one
/// vertex adjacent to all of it; each further level attaches, for every
/// vertex v of the newest generation, one new vertex per adjacent pair of
/// v's neighbors.
///
/// Vertex ids are assigned generation-major, in creation order: within a
/// level, parents are processed in id order and each parent's three anchor
/// pairs in (min,max) lexicographic order. Builds are therefore
/// deterministic, and the first |V(level j)| ids of any deeper build form
/// exactly the level-j network.
class ApollonianNetwork {
public:
    static ApollonianNetwork build(int level, BuildLimits limits = {}) {
        if (level < 1)
            throw std::invalid_argument("ApollonianNetwork: level must be >= 1, got " +
                                        std::to_string(level));
        if (level > limits.max_level)
            throw SizeLimitError("ApollonianNetwork: level " + std::to_string(level) +
                                 " exceeds the configured cap of " +
                                 std::to_string(limits.max_level) +
                                 " (raise BuildLimits::max_level to override)");

        ApollonianNetwork net;
        net.level_ = level;
        std::vector<std::vector<VertexId>> adj;

        adj.assign(3, {});
        adj[0] = {1, 2};
        adj[1] = {0, 2};
        adj[2] = {0, 1};
        net.anchors_.assign(3, std::nullopt);
        net.offsets_ = {0, 3};

        if (level >= 2) {
            adj.push_back({0, 1, 2});
            for (VertexId u : {0u, 1u, 2u}) adj[u].push_back(3);
            net.anchors_.push_back(std::nullopt);
            net.offsets_.push_back(4);
        }

        for (int j = 3; j <= level; ++j) {
            const std::size_t parents_begin = net.offsets_[j - 2];
            const std::size_t parents_end = net.offsets_[j - 1];
            adj.reserve(parents_end + 3 * (parents_end - parents_begin));
            for (std::size_t u = parents_begin; u < parents_end; ++u) {
                // A previous-generation vertex still has exactly its three
                // birth neighbors, which are pairwise adjacent.
                assert(adj[u].size() == 3);
                const VertexId n1 = adj[u][0], n2 = adj[u][1], n3 = adj[u][2];
                const std::pair<VertexId, VertexId> pairs[3] = {{n1, n2}, {n1, n3}, {n2, n3}};
                for (const auto& [x, y] : pairs) {
                    const VertexId v = static_cast<VertexId>(adj.size());
                    adj.push_back({static_cast<VertexId>(u), x, y});
                    std::sort(adj[v].begin(), adj[v].end());
                    adj[u].push_back(v);
                    adj[x].push_back(v);
                    adj[y].push_back(v);
                    net.anchors_.push_back(TriangleAnchor{static_cast<VertexId>(u), {x, y}});
                }
            }
            net.offsets_.push_back(adj.size());
        }

        const std::size_t n = adj.size();
        const std::size_t m = 3 + 3 * (n - 3);
        net.graph_ = Graph::from_adjacency(std::move(adj), m);
        net.ids_.resize(n);
        std::iota(net.ids_.begin(), net.ids_.end(), 0);
        return net;
    }

    int level() const { return level_; }
    const Graph& graph() const { return graph_; }
    std::size_t vertex_count() const { return graph_.vertex_count(); }
    std::size_t edge_count() const { return graph_.edge_count(); }

    /// 1-based generation of v.
    int generation_of(VertexId v) const {
        graph_.check_vertex(v);
        int j = 1;
        while (offsets_[j] <= v) ++j;
        return j;
    }

    /// Members of generation j, in id order.
    std::span<const VertexId> generation_members(int j) const {
        check_generation(j);
        return {ids_.data() + offsets_[j - 1], ids_.data() + offsets_[j]};
    }

    std::size_t generation_size(int j) const { return generation_members(j).size(); }

    /// First id of generation j; ids below it form the level j-1 network.
    std::size_t generation_begin(int j) const {
        check_generation(j);
        return offsets_[j - 1];
    }

    std::size_t degree(VertexId v) const { return graph_.degree(v); }

    const std::optional<TriangleAnchor>& anchor(VertexId v) const {
        graph_.check_vertex(v);
        return anchors_[v];
    }

    /// Adjacent pairs {x,y} such that the triangle v,x,y contains a vertex of
    /// the newest generation. Pairs are (min,max)-normalized and sorted.
    /// There are 3*2^(level-r) of them for v in generation r > 1 and
    /// 2^(level-1) for the seed vertices.
    std::vector<std::pair<VertexId, VertexId>> p_set(VertexId v) const {
        graph_.check_vertex(v);
        auto nv = graph_.neighbors(v);
        std::vector<std::pair<VertexId, VertexId>> out;
        if (generation_of(v) == level_) {
            for (std::size_t i = 0; i < nv.size(); ++i)
                for (std::size_t j = i + 1; j < nv.size(); ++j)
                    if (graph_.has_edge(nv[i], nv[j])) out.emplace_back(nv[i], nv[j]);
        } else {
            for (VertexId x : nv) {
                if (generation_of(x) != level_) continue;
                for (VertexId y : nv)
                    if (y != x && graph_.has_edge(x, y))
                        out.emplace_back(std::min(x, y), std::max(x, y));
            }
        }
        std::sort(out.begin(), out.end());
        out.erase(std::unique(out.begin(), out.end()), out.end());
        return out;
    }

    /// Neighbors of v that lie in generation j, in id order.
    std::vector<VertexId> neighbors_in_generation(VertexId v, int j) const {
        graph_.check_vertex(v);
        check_generation(j);
        const std::size_t lo = offsets_[j - 1], hi = offsets_[j];
        std::vector<VertexId> out;
        for (VertexId w : graph_.neighbors(v))
            if (w >= lo && w < hi) out.push_back(w);
        return out;
    }

    /// The vertex permutation induced by rotating the seed triangle
    /// 0 -> 1 -> 2 -> 0. An adjacency-preserving automorphism of order 3.
    std::vector<VertexId> rotation_automorphism() const {
        const std::size_t n = vertex_count();
        std::vector<VertexId> sigma(n);
        sigma[0] = 1;
        if (n > 1) sigma[1] = 2;
        if (n > 2) sigma[2] = 0;
        if (level_ >= 2) sigma[3] = 3;
        for (int j = 3; j <= level_; ++j) {
            const std::size_t parents_begin = offsets_[j - 2];
            for (std::size_t v = offsets_[j - 1]; v < offsets_[j]; ++v) {
                const TriangleAnchor& a = *anchors_[v];
                const VertexId p = sigma[a.apex];
                const VertexId x = sigma[a.pair.first];
                const VertexId y = sigma[a.pair.second];
                // Recover the image parent's three birth neighbors and locate
                // the image pair among its (min,max)-ordered anchor pairs.
                auto np = graph_.neighbors(p);
                const VertexId b1 = np[0], b2 = np[1], b3 = np[2];
                const std::pair<VertexId, VertexId> want{std::min(x, y), std::max(x, y)};
                int idx;
                if (want == std::pair{b1, b2})
                    idx = 0;
                else if (want == std::pair{b1, b3})
                    idx = 1;
                else {
                    assert((want == std::pair{b2, b3}));
                    idx = 2;
                }
                sigma[v] = static_cast<VertexId>(offsets_[j - 1] + 3 * (p - parents_begin) + idx);
            }
        }
        return sigma;
    }

    /// |V| = (3^(k-1)+5)/2 for buildable k.
    static std::uint64_t vertex_count_closed_form(int k) {
        if (k < 1) throw std::invalid_argument("vertex_count_closed_form: level must be >= 1");
        return (pow3u(k - 1) + 5) / 2;
    }

    /// |E| = (3^k+3)/2 for buildable k.
    static std::uint64_t edge_count_closed_form(int k) {
        if (k < 1) throw std::invalid_argument("edge_count_closed_form: level must be >= 1");
        return (pow3u(k) + 3) / 2;
    }

    /// |U_1| = 3, |U_j| = 3^(j-2) for j > 1.
    static std::uint64_t generation_size_closed_form(int j) {
        if (j < 1) throw std::invalid_argument("generation_size_closed_form: generation must be >= 1");
        return j == 1 ? 3 : pow3u(j - 2);
    }

private:
    ApollonianNetwork() = default;

    void check_generation(int j) const {
        if (j < 1 || j > level_)
            throw std::out_of_range("ApollonianNetwork: generation " + std::to_string(j) +
                                    " out of range for level " + std::to_string(level_));
    }

    static std::uint64_t pow3u(int e) {
        assert(e >= 0 && e <= 39);
        std::uint64_t r = 1;
        for (int i = 0; i < e; ++i) r *= 3;
        return r;
    }

    int level_ = 0;
    Graph graph_;
    std::vector<std::size_t> offsets_; // offsets_[j] = #vertices in generations <= j
    std::vector<VertexId> ids_;
    std::vector<std::optional<TriangleAnchor>> anchors_;
};

} // namespace apollodom
