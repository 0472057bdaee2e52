#pragma once

#include <ostream>

#include "apollodom/domination.hpp"
#include "apollodom/network.hpp"

namespace apollodom {

/// DOT text with the generation recorded on every vertex.
inline void write_dot(std::ostream& os, const ApollonianNetwork& net) {
    os << "graph apollonian {\n";
    os << "  graph [k=" << net.level() << ", n=" << net.vertex_count() << ", m="
       << net.edge_count() << "];\n";
    for (std::size_t v = 0; v < net.vertex_count(); ++v)
        os << "  " << v << " [generation=" << net.generation_of(static_cast<VertexId>(v)) << "];\n";
    for (std::size_t u = 0; u < net.vertex_count(); ++u)
        for (VertexId v : net.graph().neighbors(static_cast<VertexId>(u)))
            if (v > u) os << "  " << u << " -- " << v << ";\n";
    os << "}\n";
}

/// Line-oriented edge list: "apollonian k=<k> n=<n> m=<m>" then "u v" per edge.
inline void write_edge_list(std::ostream& os, const ApollonianNetwork& net) {
    os << "apollonian k=" << net.level() << " n=" << net.vertex_count() << " m="
       << net.edge_count() << "\n";
    for (std::size_t u = 0; u < net.vertex_count(); ++u)
        for (VertexId v : net.graph().neighbors(static_cast<VertexId>(u)))
            if (v > u) os << u << " " << v << "\n";
}

/// CSV weight dump: one row per vertex, exact numerator/exponent plus the
/// terminating decimal rendering.
inline void write_weights_csv(std::ostream& os, const ApollonianNetwork& net,
                              const WeightVector& wv) {
    os << "vertex,generation,numerator,exponent,decimal\n";
    for (std::size_t v = 0; v < wv.weights.size(); ++v) {
        const DyadicWeight& w = wv.weights[v];
        os << v << "," << net.generation_of(static_cast<VertexId>(v)) << "," << w.numerator()
           << "," << w.exponent() << "," << w.to_decimal_string() << "\n";
    }
}

} // namespace apollodom
