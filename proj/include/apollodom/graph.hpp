#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace apollodom {

using VertexId = std::uint32_t;

/// Sentinel for "no path" in BFS distance rows.
inline constexpr std::uint32_t no_path = 0xffffffffu;

/// Simple undirected graph over vertices 0..n-1 with sorted adjacency lists.
/// No loops, no parallel edges. Immutable once populated; all queries are
/// safe to run concurrently.
class Graph {
public:
    Graph() = default;
    explicit Graph(std::size_t n) : adj_(n) {}

    /// Wraps adjacency lists produced elsewhere. Lists must be sorted,
    /// loop-free, duplicate-free, and symmetric; the network builder
    /// guarantees this by construction.
    static Graph from_adjacency(std::vector<std::vector<VertexId>> adj, std::size_t edge_count) {
        Graph g;
        g.adj_ = std::move(adj);
        g.edges_ = edge_count;
        return g;
    }

    std::size_t vertex_count() const { return adj_.size(); }
    std::size_t edge_count() const { return edges_; }

    void add_edge(VertexId u, VertexId v) {
        check_vertex(u);
        check_vertex(v);
        if (u == v) throw std::invalid_argument("Graph: loop edge at vertex " + std::to_string(u));
        auto& au = adj_[u];
        auto it = std::lower_bound(au.begin(), au.end(), v);
        if (it != au.end() && *it == v)
            throw std::invalid_argument("Graph: parallel edge " + std::to_string(u) + "-" + std::to_string(v));
        au.insert(it, v);
        auto& av = adj_[v];
        av.insert(std::lower_bound(av.begin(), av.end(), u), u);
        ++edges_;
    }

    bool has_edge(VertexId u, VertexId v) const {
        check_vertex(u);
        check_vertex(v);
        return std::binary_search(adj_[u].begin(), adj_[u].end(), v);
    }

    std::span<const VertexId> neighbors(VertexId v) const {
        check_vertex(v);
        return adj_[v];
    }

    std::size_t degree(VertexId v) const { return neighbors(v).size(); }

    bool is_connected() const {
        if (adj_.empty()) return true;
        std::vector<char> seen(adj_.size(), 0);
        std::vector<VertexId> queue{0};
        seen[0] = 1;
        std::size_t reached = 1;
        for (std::size_t head = 0; head < queue.size(); ++head) {
            for (VertexId w : adj_[queue[head]]) {
                if (!seen[w]) {
                    seen[w] = 1;
                    ++reached;
                    queue.push_back(w);
                }
            }
        }
        return reached == adj_.size();
    }

    void check_vertex(VertexId v) const {
        if (v >= adj_.size())
            throw std::out_of_range("Graph: unknown vertex " + std::to_string(v));
    }

private:
    std::vector<std::vector<VertexId>> adj_;
    std::size_t edges_ = 0;
};

/// Hop distances from src to every vertex; `no_path` where unreachable.
inline std::vector<std::uint32_t> bfs_distances(const Graph& g, VertexId src) {
    g.check_vertex(src);
    std::vector<std::uint32_t> dist(g.vertex_count(), no_path);
    std::vector<VertexId> queue{src};
    dist[src] = 0;
    for (std::size_t head = 0; head < queue.size(); ++head) {
        VertexId u = queue[head];
        std::uint32_t du = dist[u];
        for (VertexId w : g.neighbors(u)) {
            if (dist[w] == no_path) {
                dist[w] = du + 1;
                queue.push_back(w);
            }
        }
    }
    return dist;
}

/// BFS in the subgraph induced by the non-blocked vertices. src must not be
/// blocked. Blocked vertices keep `no_path`.
inline std::vector<std::uint32_t> bfs_distances_avoiding(const Graph& g, VertexId src,
                                                         const std::vector<char>& blocked) {
    g.check_vertex(src);
    if (blocked.size() != g.vertex_count())
        throw std::invalid_argument("bfs_distances_avoiding: blocked mask size mismatch");
    if (blocked[src])
        throw std::invalid_argument("bfs_distances_avoiding: source is blocked");
    std::vector<std::uint32_t> dist(g.vertex_count(), no_path);
    std::vector<VertexId> queue{src};
    dist[src] = 0;
    for (std::size_t head = 0; head < queue.size(); ++head) {
        VertexId u = queue[head];
        std::uint32_t du = dist[u];
        for (VertexId w : g.neighbors(u)) {
            if (dist[w] == no_path && !blocked[w]) {
                dist[w] = du + 1;
                queue.push_back(w);
            }
        }
    }
    return dist;
}

} // namespace apollodom
