#pragma once

#include <algorithm>
#include <cassert>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "apollodom/detail/parallel.hpp"
#include "apollodom/errors.hpp"
#include "apollodom/graph.hpp"
#include "apollodom/network.hpp"

namespace apollodom {

struct MetricsLimits {
    /// Dense all-pairs storage is n*n bytes; the default admits every level
    /// whose full matrix is worth materializing. Larger graphs should use
    /// bfs_from per source.
    std::size_t dense_matrix_cap = 30000;
};

/// Dense all-pairs hop distances. Entries are one byte; network diameters
/// stay in single digits at any buildable level, and construction checks
/// the fit anyway.
class DistanceMatrix {
public:
    DistanceMatrix(std::size_t n, std::vector<std::uint8_t> data, int diameter)
        : n_(n), data_(std::move(data)), diameter_(diameter) {}

    std::size_t size() const { return n_; }
    int diameter() const { return diameter_; }

    std::uint8_t at(VertexId u, VertexId v) const { return data_[static_cast<std::size_t>(u) * n_ + v]; }

    std::span<const std::uint8_t> row(VertexId u) const {
        return {data_.data() + static_cast<std::size_t>(u) * n_, n_};
    }

private:
    std::size_t n_;
    std::vector<std::uint8_t> data_;
    int diameter_;
};

/// One BFS row from s. Every entry is finite: the network is connected.
inline std::vector<std::uint32_t> bfs_from(const ApollonianNetwork& net, VertexId s) {
    return bfs_distances(net.graph(), s);
}

inline DistanceMatrix all_pairs(const ApollonianNetwork& net, MetricsLimits limits = {},
                                int threads = 1) {
    const std::size_t n = net.vertex_count();
    if (n > limits.dense_matrix_cap)
        throw SizeLimitError("all_pairs: " + std::to_string(n) +
                             " vertices exceed the dense-matrix cap of " +
                             std::to_string(limits.dense_matrix_cap) +
                             "; run bfs_from per source instead");
    std::vector<std::uint8_t> data(n * n);
    std::vector<int> row_max(n, 0);
    detail::parallel_for(0, n, threads, [&](std::size_t s) {
        auto row = bfs_distances(net.graph(), static_cast<VertexId>(s));
        int mx = 0;
        for (std::size_t v = 0; v < n; ++v) {
            const std::uint32_t d = row[v];
            // structurally impossible under the level cap
            assert(d < 255);
            data[s * n + v] = static_cast<std::uint8_t>(d);
            if (static_cast<int>(d) > mx) mx = static_cast<int>(d);
        }
        row_max[s] = mx;
    });
    int diameter = 0;
    for (int mx : row_max) diameter = std::max(diameter, mx);
    return DistanceMatrix(n, std::move(data), diameter);
}

/// Diameter by BFS sweep, no matrix materialized; memory stays O(n) per
/// worker.
inline int bfs_diameter(const ApollonianNetwork& net, int threads = 1) {
    const std::size_t n = net.vertex_count();
    std::vector<int> ecc(n, 0);
    detail::parallel_for(0, n, threads, [&](std::size_t s) {
        auto row = bfs_distances(net.graph(), static_cast<VertexId>(s));
        std::uint32_t mx = 0;
        for (std::uint32_t d : row) mx = std::max(mx, d);
        ecc[s] = static_cast<int>(mx);
    });
    int diameter = 0;
    for (int e : ecc) diameter = std::max(diameter, e);
    return diameter;
}

/// diam = ceil((2k-1)/3), evaluated in integers.
inline int diameter_closed_form(int k) {
    if (k < 1) throw std::invalid_argument("diameter_closed_form: level must be >= 1");
    return (2 * k + 1) / 3;
}

/// A pair at maximum distance. Prefers endpoints in the newest generation
/// (one always exists for the levels we densify); ties break toward the
/// smallest (min,max) id pair.
inline std::pair<VertexId, VertexId> diametral_pair(const ApollonianNetwork& net,
                                                    const DistanceMatrix& dm) {
    const int diam = dm.diameter();
    const std::size_t last_begin = net.generation_begin(net.level());
    const std::size_t n = dm.size();
    for (std::size_t u = last_begin; u < n; ++u)
        for (std::size_t v = u + 1; v < n; ++v)
            if (dm.at(static_cast<VertexId>(u), static_cast<VertexId>(v)) == diam)
                return {static_cast<VertexId>(u), static_cast<VertexId>(v)};
    for (std::size_t u = 0; u < n; ++u)
        for (std::size_t v = u + 1; v < n; ++v)
            if (dm.at(static_cast<VertexId>(u), static_cast<VertexId>(v)) == diam)
                return {static_cast<VertexId>(u), static_cast<VertexId>(v)};
    // diameter 0 only for a single vertex, which no network has
    throw std::logic_error("diametral_pair: no pair found");
}

inline std::pair<VertexId, VertexId> diametral_pair(const ApollonianNetwork& net,
                                                    MetricsLimits limits = {}, int threads = 1) {
    return diametral_pair(net, all_pairs(net, limits, threads));
}

} // namespace apollodom
