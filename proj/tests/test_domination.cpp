#include <catch2/catch_amalgamated.hpp>

#include <sstream>

#include "apollodom/bounds.hpp"
#include "apollodom/domination.hpp"
#include "apollodom/io.hpp"
#include "support/naive_oracle.hpp"
#include "support/small_graphs.hpp"

using namespace apollodom;

namespace {

Graph path_graph(std::size_t n) {
    Graph g(n);
    for (VertexId v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
    return g;
}

} // namespace

TEST_CASE("porous weights on a three-vertex path") {
    const auto g = path_graph(3);
    const auto s = CandidateSet::of(g, {0, 1}, Variant::porous);
    // hand sum: 1/2^(2-1) + 1/2^(1-1) = 3/2, confirmed by the naive oracle
    const auto w = porous_weight_at(g, s, 2);
    REQUIRE(w == DyadicWeight(3, 1));
    const auto oracle = testsupport::naive_porous_weights(g, s.members);
    REQUIRE(testsupport::scaled_equals(w, oracle.w[2], oracle.scale));
}

TEST_CASE("nonporous weights on a three-vertex path") {
    const auto g = path_graph(3);
    const auto s = CandidateSet::of(g, {0, 1}, Variant::nonporous);
    // removing vertex 1 disconnects 0 from 2, so only the middle member pays
    REQUIRE(nonporous_weight_at(g, s, 2) == DyadicWeight::one());
    const auto oracle = testsupport::naive_nonporous_weights(g, s.members);
    REQUIRE(testsupport::scaled_equals(nonporous_weight_at(g, s, 2), oracle.w[2], oracle.scale));
}

TEST_CASE("self weight is exactly two") {
    const auto net = ApollonianNetwork::build(1);
    const auto s = CandidateSet::of(net, {0}, Variant::porous);
    REQUIRE(porous_weight_at(net, s, 0) == DyadicWeight(2, 0));
    REQUIRE(porous_weight_at(net, s, 1) == DyadicWeight::one());

    const auto ns = CandidateSet::of(net, {0, 2}, Variant::nonporous);
    REQUIRE(nonporous_weight_at(net, ns, 0) == DyadicWeight(2, 0));

    const auto k4 = ApollonianNetwork::build(2);
    const auto hub = CandidateSet::of(k4, {3}, Variant::nonporous);
    for (VertexId v = 0; v < 3; ++v)
        REQUIRE(nonporous_weight_at(k4, hub, v) == DyadicWeight::one());
}

TEST_CASE("singleton nonporous equals porous everywhere") {
    const auto net = ApollonianNetwork::build(4);
    for (VertexId u = 0; u < net.vertex_count(); u += 5) {
        const auto p = weight_vector(net, CandidateSet::of(net, {u}, Variant::porous));
        const auto q = weight_vector(net, CandidateSet::of(net, {u}, Variant::nonporous));
        for (VertexId v = 0; v < net.vertex_count(); ++v) REQUIRE(p.weights[v] == q.weights[v]);
    }
}

TEST_CASE("singleton weight halves per hop") {
    const auto net = ApollonianNetwork::build(4);
    const VertexId u = 7;
    const auto row = bfs_distances(net.graph(), u);
    const auto wv = weight_vector(net, CandidateSet::of(net, {u}, Variant::porous));
    for (VertexId v = 0; v < net.vertex_count(); ++v)
        REQUIRE(wv.weights[v] == DyadicWeight(2, row[v]));
}

TEST_CASE("variant tags are enforced") {
    const auto net = ApollonianNetwork::build(2);
    const auto porous_set = CandidateSet::of(net, {0}, Variant::porous);
    const auto nonporous_set = CandidateSet::of(net, {0}, Variant::nonporous);
    REQUIRE_THROWS_AS(porous_weight_at(net, nonporous_set, 1), std::invalid_argument);
    REQUIRE_THROWS_AS(nonporous_weight_at(net, porous_set, 1), std::invalid_argument);
    REQUIRE_THROWS_AS(porous_weight_at(net, porous_set, 99), std::out_of_range);
    REQUIRE_THROWS_AS(CandidateSet::of(net, {17}, Variant::porous), std::out_of_range);
}

TEST_CASE("candidate sets deduplicate and sort") {
    const auto net = ApollonianNetwork::build(3);
    const auto s = CandidateSet::of(net, {4, 1, 4, 0}, Variant::porous);
    REQUIRE(s.members == std::vector<VertexId>{0, 1, 4});
    REQUIRE(s.contains(4));
    REQUIRE_FALSE(s.contains(2));
}

TEST_CASE("the level-3 hub alone dominates") {
    const auto net = ApollonianNetwork::build(3);
    const VertexId hub = net.generation_members(2)[0];
    const auto wv = weight_vector(net, CandidateSet::of(net, {hub}, Variant::porous));
    REQUIRE(wv.all_at_least_one);
}

TEST_CASE("no singleton dominates level 4") {
    const auto net = ApollonianNetwork::build(4);
    for (VertexId u = 0; u < net.vertex_count(); ++u) {
        const auto wv = weight_vector(net, CandidateSet::of(net, {u}, Variant::porous));
        CAPTURE(u);
        REQUIRE_FALSE(wv.all_at_least_one);
    }
}

TEST_CASE("any two level-2 vertices dominate level 5") {
    const auto net = ApollonianNetwork::build(5);
    for (VertexId a = 0; a < 4; ++a)
        for (VertexId b = a + 1; b < 4; ++b)
            REQUIRE(is_dominating(net, CandidateSet::of(net, {a, b}, Variant::porous)));
}

TEST_CASE("an empty set dominates nothing") {
    const auto net = ApollonianNetwork::build(2);
    REQUIRE_FALSE(is_dominating(net, CandidateSet::of(net, {}, Variant::porous)));
    REQUIRE_FALSE(is_dominating(net, CandidateSet::of(net, {}, Variant::nonporous)));
}

TEST_CASE("generation three dominates level 6") {
    const auto net = ApollonianNetwork::build(6);
    auto u3 = net.generation_members(3);
    REQUIRE(is_dominating(net, CandidateSet::of(net, {u3.begin(), u3.end()}, Variant::porous)));
}

TEST_CASE("porous weight is monotone in the set") {
    const auto& graphs = testsupport::connected_graphs(6);
    const auto g = graphs[37].to_graph();
    const auto base = CandidateSet::of(g, {0, 3}, Variant::porous);
    const auto wider = CandidateSet::of(g, {0, 3, 5}, Variant::porous);
    const auto wb = weight_vector(g, base);
    const auto ww = weight_vector(g, wider);
    for (VertexId v = 0; v < g.vertex_count(); ++v) REQUIRE(wb.weights[v] <= ww.weights[v]);
}

TEST_CASE("nonporous never exceeds porous off the set") {
    for (const auto& sg : testsupport::connected_graphs(5)) {
        const auto g = sg.to_graph();
        for (unsigned mask = 1; mask < 32; mask += 3) {
            std::vector<VertexId> members;
            for (int v = 0; v < 5; ++v)
                if (mask & (1u << v)) members.push_back(static_cast<VertexId>(v));
            const auto p = weight_vector(g, CandidateSet{members, Variant::porous});
            const auto q = weight_vector(g, CandidateSet{members, Variant::nonporous});
            for (VertexId v = 0; v < 5; ++v) {
                if (std::binary_search(members.begin(), members.end(), v)) continue;
                REQUIRE(q.weights[v] <= p.weights[v]);
            }
            if (q.all_at_least_one) REQUIRE(p.all_at_least_one);
        }
    }
}

TEST_CASE("weight vectors match the naive oracle on all small graphs") {
    for (int n = 1; n <= 5; ++n) {
        for (const auto& sg : testsupport::connected_graphs(n)) {
            const auto g = sg.to_graph();
            for (unsigned mask = 0; mask < (1u << n); ++mask) {
                std::vector<VertexId> members;
                for (int v = 0; v < n; ++v)
                    if (mask & (1u << v)) members.push_back(static_cast<VertexId>(v));
                const auto porous = weight_vector(g, CandidateSet{members, Variant::porous});
                const auto porous_oracle = testsupport::naive_porous_weights(g, members);
                const auto nonporous = weight_vector(g, CandidateSet{members, Variant::nonporous});
                const auto nonporous_oracle = testsupport::naive_nonporous_weights(g, members);
                for (VertexId v = 0; v < g.vertex_count(); ++v) {
                    REQUIRE(testsupport::scaled_equals(porous.weights[v], porous_oracle.w[v],
                                                       porous_oracle.scale));
                    REQUIRE(testsupport::scaled_equals(nonporous.weights[v], nonporous_oracle.w[v],
                                                       nonporous_oracle.scale));
                }
            }
        }
    }
}

TEST_CASE("weight vector is thread-count independent") {
    const auto net = ApollonianNetwork::build(6);
    const auto s = generation_dominating_set(net);
    const auto a = weight_vector(net, s, 1);
    const auto b = weight_vector(net, s, 4);
    for (VertexId v = 0; v < net.vertex_count(); ++v) REQUIRE(a.weights[v] == b.weights[v]);
}

TEST_CASE("weights export as csv") {
    const auto net = ApollonianNetwork::build(1);
    const auto wv = weight_vector(net, CandidateSet::of(net, {0}, Variant::porous));
    std::ostringstream os;
    write_weights_csv(os, net, wv);
    REQUIRE(os.str() ==
            "vertex,generation,numerator,exponent,decimal\n"
            "0,1,2,0,2\n"
            "1,1,1,0,1\n"
            "2,1,1,0,1\n");
}
