#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <set>

#include "apollodom/checks.hpp"
#include "apollodom/network.hpp"

using namespace apollodom;

namespace {

// Brute-force triangle scan: all pairs {x,y} adjacent to each other and to v,
// with the triangle v,x,y containing a newest-generation vertex.
std::set<std::pair<VertexId, VertexId>> p_set_oracle(const ApollonianNetwork& net, VertexId v) {
    const auto& g = net.graph();
    std::set<std::pair<VertexId, VertexId>> out;
    const int k = net.level();
    for (VertexId x = 0; x < net.vertex_count(); ++x) {
        if (x == v || !g.has_edge(v, x)) continue;
        for (VertexId y = x + 1; y < net.vertex_count(); ++y) {
            if (y == v || !g.has_edge(v, y) || !g.has_edge(x, y)) continue;
            if (net.generation_of(v) == k || net.generation_of(x) == k || net.generation_of(y) == k)
                out.insert({x, y});
        }
    }
    return out;
}

// Degree counted through the other endpoints' adjacency lists.
std::size_t degree_oracle(const ApollonianNetwork& net, VertexId v) {
    std::size_t count = 0;
    for (VertexId u = 0; u < net.vertex_count(); ++u) {
        if (u == v) continue;
        auto nb = net.graph().neighbors(u);
        count += std::binary_search(nb.begin(), nb.end(), v) ? 1 : 0;
    }
    return count;
}

} // namespace

TEST_CASE("level 1 is a triangle") {
    const auto net = ApollonianNetwork::build(1);
    REQUIRE(net.vertex_count() == 3);
    REQUIRE(net.edge_count() == 3);
    REQUIRE(net.graph().has_edge(0, 1));
    REQUIRE(net.graph().has_edge(0, 2));
    REQUIRE(net.graph().has_edge(1, 2));
    REQUIRE(net.generation_of(0) == 1);
}

TEST_CASE("level 2 is complete on four vertices") {
    const auto net = ApollonianNetwork::build(2);
    REQUIRE(net.vertex_count() == 4);
    REQUIRE(net.edge_count() == 6);
    for (VertexId u = 0; u < 4; ++u)
        for (VertexId v = u + 1; v < 4; ++v) REQUIRE(net.graph().has_edge(u, v));
    REQUIRE(net.generation_of(3) == 2);
}

TEST_CASE("level 7 order and size") {
    const auto net = ApollonianNetwork::build(7);
    REQUIRE(net.vertex_count() == 367);
    REQUIRE(net.edge_count() == 1095);
}

TEST_CASE("counts match closed forms") {
    for (int k = 1; k <= 9; ++k) {
        const auto net = ApollonianNetwork::build(k);
        CAPTURE(k);
        REQUIRE(net.vertex_count() == ApollonianNetwork::vertex_count_closed_form(k));
        REQUIRE(net.edge_count() == ApollonianNetwork::edge_count_closed_form(k));
        for (int j = 1; j <= k; ++j)
            REQUIRE(net.generation_size(j) == ApollonianNetwork::generation_size_closed_form(j));
    }
}

TEST_CASE("build rejects bad levels") {
    REQUIRE_THROWS_AS(ApollonianNetwork::build(0), std::invalid_argument);
    REQUIRE_THROWS_AS(ApollonianNetwork::build(-2), std::invalid_argument);
    REQUIRE_THROWS_AS(ApollonianNetwork::build(15), SizeLimitError);
    REQUIRE_THROWS_AS(ApollonianNetwork::build(3, BuildLimits{2}), SizeLimitError);
    REQUIRE_NOTHROW(ApollonianNetwork::build(3, BuildLimits{3}));
}

TEST_CASE("generation members") {
    const auto net5 = ApollonianNetwork::build(5);
    REQUIRE(net5.generation_members(5).size() == 27);
    REQUIRE_THROWS_AS(net5.generation_members(0), std::out_of_range);
    REQUIRE_THROWS_AS(net5.generation_members(6), std::out_of_range);

    const auto net1 = ApollonianNetwork::build(1);
    auto seeds = net1.generation_members(1);
    REQUIRE(std::vector<VertexId>(seeds.begin(), seeds.end()) == std::vector<VertexId>{0, 1, 2});

    const auto net6 = ApollonianNetwork::build(6);
    auto u4 = net6.generation_members(4);
    REQUIRE(u4.size() == 9);
    for (VertexId v : u4)
        for (VertexId w : net6.generation_members(5)) REQUIRE(v < w);
}

TEST_CASE("generation ids are contiguous and ordered") {
    const auto net = ApollonianNetwork::build(6);
    std::size_t expect = 0;
    for (int j = 1; j <= 6; ++j) {
        for (VertexId v : net.generation_members(j)) {
            REQUIRE(v == expect);
            REQUIRE(net.generation_of(v) == j);
            ++expect;
        }
    }
    REQUIRE(expect == net.vertex_count());
}

TEST_CASE("deeper builds extend shallower ones verbatim") {
    const auto big = ApollonianNetwork::build(5);
    const auto small = ApollonianNetwork::build(3);
    const std::size_t n3 = small.vertex_count();
    REQUIRE(big.generation_begin(4) == n3);
    for (VertexId v = 0; v < n3; ++v) {
        std::vector<VertexId> restricted;
        for (VertexId w : big.graph().neighbors(v))
            if (w < n3) restricted.push_back(w);
        auto expect = small.graph().neighbors(v);
        REQUIRE(restricted == std::vector<VertexId>(expect.begin(), expect.end()));
    }
}

TEST_CASE("construction is deterministic") {
    const auto a = ApollonianNetwork::build(6);
    const auto b = ApollonianNetwork::build(6);
    REQUIRE(a.vertex_count() == b.vertex_count());
    for (VertexId v = 0; v < a.vertex_count(); ++v) {
        auto na = a.graph().neighbors(v);
        auto nb = b.graph().neighbors(v);
        REQUIRE(std::vector<VertexId>(na.begin(), na.end()) ==
                std::vector<VertexId>(nb.begin(), nb.end()));
    }
}

TEST_CASE("p-set on the triangle and the K4 center") {
    const auto net1 = ApollonianNetwork::build(1);
    auto p = net1.p_set(0);
    REQUIRE(p == std::vector<std::pair<VertexId, VertexId>>{{1, 2}});

    const auto net2 = ApollonianNetwork::build(2);
    REQUIRE(net2.p_set(3).size() == 3);
}

TEST_CASE("p-set matches the brute-force triangle scan") {
    const auto net = ApollonianNetwork::build(4);
    const VertexId u2 = net.generation_members(2)[0];
    const auto oracle = p_set_oracle(net, u2);
    REQUIRE(oracle.size() == 12);
    const auto got = net.p_set(u2);
    REQUIRE(std::set<std::pair<VertexId, VertexId>>(got.begin(), got.end()) == oracle);

    for (VertexId v = 0; v < net.vertex_count(); v += 3) {
        const auto expect = p_set_oracle(net, v);
        const auto actual = net.p_set(v);
        REQUIRE(std::set<std::pair<VertexId, VertexId>>(actual.begin(), actual.end()) == expect);
    }
    REQUIRE_THROWS_AS(net.p_set(net.vertex_count()), std::out_of_range);
}

TEST_CASE("p-set sizes double when the network grows one level") {
    for (int k = 1; k <= 5; ++k) {
        const auto net = ApollonianNetwork::build(k);
        const auto deeper = ApollonianNetwork::build(k + 1);
        for (VertexId v = 0; v < net.vertex_count(); ++v) {
            CAPTURE(k, v);
            REQUIRE(deeper.p_set(v).size() == 2 * net.p_set(v).size());
        }
    }
}

TEST_CASE("degrees match the closed forms and an independent count") {
    const auto net2 = ApollonianNetwork::build(2);
    REQUIRE(net2.degree(3) == 3);

    const auto net3 = ApollonianNetwork::build(3);
    REQUIRE(degree_oracle(net3, 0) == 5);
    REQUIRE(net3.degree(0) == 5);

    const auto net5 = ApollonianNetwork::build(5);
    const VertexId u3 = net5.generation_members(3)[1];
    REQUIRE(degree_oracle(net5, u3) == 12);
    REQUIRE(net5.degree(u3) == 12);
}

TEST_CASE("neighbors by generation") {
    const auto net4 = ApollonianNetwork::build(4);
    const VertexId v = net4.generation_members(4)[5];
    REQUIRE(net4.neighbors_in_generation(v, 4).empty());
    REQUIRE_FALSE(net4.neighbors_in_generation(v, 3).empty());
    REQUIRE_THROWS_AS(net4.neighbors_in_generation(v, 5), std::out_of_range);
    REQUIRE_THROWS_AS(net4.neighbors_in_generation(v, 0), std::out_of_range);

    const auto net2 = ApollonianNetwork::build(2);
    REQUIRE(net2.neighbors_in_generation(3, 1) == std::vector<VertexId>{0, 1, 2});
}

TEST_CASE("anchors record the attachment triangle") {
    const auto net = ApollonianNetwork::build(4);
    for (VertexId v = 0; v < net.vertex_count(); ++v) {
        const auto& a = net.anchor(v);
        if (net.generation_of(v) <= 2) {
            REQUIRE_FALSE(a.has_value());
            continue;
        }
        REQUIRE(a.has_value());
        REQUIRE(net.generation_of(a->apex) == net.generation_of(v) - 1);
        REQUIRE(a->pair.first < a->pair.second);
        REQUIRE(net.graph().has_edge(a->apex, a->pair.first));
        REQUIRE(net.graph().has_edge(a->apex, a->pair.second));
        REQUIRE(net.graph().has_edge(a->pair.first, a->pair.second));
        REQUIRE(net.graph().has_edge(v, a->apex));
        REQUIRE(net.graph().has_edge(v, a->pair.first));
        REQUIRE(net.graph().has_edge(v, a->pair.second));
    }
}

TEST_CASE("networks are simple and connected") {
    for (int k = 1; k <= 7; ++k) {
        const auto net = ApollonianNetwork::build(k);
        CAPTURE(k);
        REQUIRE(net.graph().is_connected());
        std::size_t listed = 0;
        for (VertexId v = 0; v < net.vertex_count(); ++v) {
            auto nb = net.graph().neighbors(v);
            REQUIRE(std::is_sorted(nb.begin(), nb.end()));
            REQUIRE(std::adjacent_find(nb.begin(), nb.end()) == nb.end());
            REQUIRE(std::find(nb.begin(), nb.end(), v) == nb.end());
            listed += nb.size();
        }
        REQUIRE(listed == 2 * net.edge_count());
    }
}

TEST_CASE("structural lemma suite passes through level 7") {
    for (const auto& check : run_lemma_checks(2, 7)) {
        CAPTURE(check.name, check.k, check.detail);
        REQUIRE(check.pass);
    }
}

TEST_CASE("seed rotation is an order-3 automorphism") {
    for (int k : {1, 2, 4, 6}) {
        const auto net = ApollonianNetwork::build(k);
        const auto sigma = net.rotation_automorphism();
        const std::size_t n = net.vertex_count();
        CAPTURE(k);

        std::vector<char> hit(n, 0);
        for (VertexId v = 0; v < n; ++v) {
            REQUIRE(sigma[v] < n);
            REQUIRE(!hit[sigma[v]]);
            hit[sigma[v]] = 1;
            REQUIRE(net.generation_of(sigma[v]) == net.generation_of(v));
        }
        for (VertexId v = 0; v < n; ++v) {
            const VertexId s3 = sigma[sigma[sigma[v]]];
            REQUIRE(s3 == v);
        }
        for (VertexId u = 0; u < n; ++u)
            for (VertexId v : net.graph().neighbors(u))
                REQUIRE(net.graph().has_edge(sigma[u], sigma[v]));
        REQUIRE(sigma[0] == 1);
        REQUIRE(sigma[1] == 2);
        REQUIRE(sigma[2] == 0);
    }
}
