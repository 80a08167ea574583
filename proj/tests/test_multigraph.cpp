#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "scc/generators.hpp"
#include "scc/multigraph.hpp"
#include "support/brute.hpp"

using namespace scc;

namespace {

MultiGraph complete_graph(std::uint32_t n) {
    std::vector<EdgeRecord> edges;
    for (VertexId u = 0; u < n; ++u)
        for (VertexId v = u + 1; v < n; ++v)
            edges.push_back({u, v});
    return MultiGraph(n, std::move(edges));
}

MultiGraph cycle_graph(std::uint32_t n) {
    std::vector<EdgeRecord> edges;
    for (VertexId v = 0; v < n; ++v)
        edges.push_back({v, (v + 1) % n});
    return MultiGraph(n, std::move(edges));
}

} // namespace

TEST_CASE("construction rejects loops and bad endpoints") {
    CHECK_THROWS_AS(MultiGraph(3, {{1, 1}}), std::invalid_argument);
    CHECK_THROWS_AS(MultiGraph(2, {{0, 2}}), std::invalid_argument);
    const MultiGraph g(3, {{0, 1}, {0, 1}});
    CHECK(g.edge_count() == 2);
    CHECK(g.degree(0) == 2);
    CHECK(g.degree(2) == 0);
}

TEST_CASE("degeneracy of standard graphs") {
    CHECK(degeneracy_order(complete_graph(5)).d == 4);
    CHECK(degeneracy_order(cycle_graph(6)).d == 2);
    // trees
    CHECK(degeneracy_order(MultiGraph(2, {{0, 1}})).d == 1);
    CHECK(degeneracy_order(MultiGraph(5, {{0, 1}, {1, 2}, {1, 3}, {3, 4}})).d == 1);
    CHECK(degeneracy_order(MultiGraph(4, {})).d == 0);
}

TEST_CASE("smallest-last order places each vertex after its back-neighbors") {
    Rng rng(11);
    for (int trial = 0; trial < 50; ++trial) {
        const auto g = testsupport::random_multigraph(2 + rng.below(8), 14, rng);
        const auto ord = degeneracy_order(g);
        std::vector<std::uint32_t> pos(g.vertex_count());
        for (std::uint32_t i = 0; i < ord.order.size(); ++i)
            pos[ord.order[i]] = i;
        std::vector<std::uint32_t> back(g.vertex_count(), 0);
        for (const auto& e : g.edges())
            ++back[pos[e.u] > pos[e.v] ? e.u : e.v];
        for (VertexId v = 0; v < g.vertex_count(); ++v)
            CHECK(back[v] <= ord.d);
    }
}

TEST_CASE("orient follows the ordering rule") {
    const MultiGraph edge(2, {{0, 1}});
    const auto o = orient(edge, {{0, 1}, 1});
    CHECK(o.arcs[0] == Arc{1, 0});

    const auto o3 = orient(complete_graph(3), {{0, 1, 2}, 2});
    CHECK(o3.arcs[0] == Arc{1, 0});
    CHECK(o3.arcs[1] == Arc{2, 0});
    CHECK(o3.arcs[2] == Arc{2, 1});

    CHECK_THROWS_AS(orient(edge, {{0, 0}, 1}), std::invalid_argument);
    CHECK_THROWS_AS(orient(edge, {{0}, 1}), std::invalid_argument);
}

TEST_CASE("orientation from the degeneracy order realizes d") {
    Rng rng(23);
    for (int trial = 0; trial < 60; ++trial) {
        const auto g = testsupport::random_multigraph(2 + rng.below(9), 16, rng);
        const auto ord = degeneracy_order(g);
        CHECK(max_out_degree(g, orient(g, ord)) == ord.d);
    }
    const auto g = gen_degenerate(100, 4, 5);
    const auto ord = degeneracy_order(g);
    CHECK(ord.d <= 4);
    CHECK(max_out_degree(g, orient(g, ord)) <= 4);
}

TEST_CASE("max degree and multiplicity") {
    const MultiGraph parallel(2, {{0, 1}, {0, 1}, {0, 1}});
    CHECK(max_degree(parallel) == 3);
    CHECK(multiplicity(parallel) == 3);
    CHECK(max_degree(complete_graph(4)) == 3);
    CHECK(multiplicity(complete_graph(4)) == 1);
    const MultiGraph empty(5, {});
    CHECK(max_degree(empty) == 0);
    CHECK(multiplicity(empty) == 0);
}

TEST_CASE("smallest-last matches the exhaustive degeneracy on small graphs") {
    Rng rng(37);
    for (int trial = 0; trial < 60; ++trial) {
        const auto g = testsupport::random_multigraph(1 + rng.below(7), 12, rng);
        CHECK(degeneracy_order(g).d == testsupport::exhaustive_degeneracy(g));
    }
    CHECK(degeneracy_order(complete_graph(5)).d ==
          testsupport::exhaustive_degeneracy(complete_graph(5)));
}

TEST_CASE("vertex deletion never raises the degeneracy") {
    Rng rng(41);
    for (int trial = 0; trial < 40; ++trial) {
        const std::uint32_t n = 2 + rng.below(8);
        const auto g = testsupport::random_multigraph(n, 16, rng);
        const auto d = degeneracy_order(g).d;
        std::vector<std::int64_t> remap(n, -1);
        std::uint32_t kept = 0;
        for (VertexId v = 0; v < n; ++v)
            if (rng.bernoulli(0.6))
                remap[v] = kept++;
        std::vector<EdgeRecord> edges;
        for (const auto& e : g.edges())
            if (remap[e.u] >= 0 && remap[e.v] >= 0)
                edges.push_back({static_cast<VertexId>(remap[e.u]),
                                 static_cast<VertexId>(remap[e.v])});
        const MultiGraph sub(kept, std::move(edges));
        CHECK(degeneracy_order(sub).d <= d);
    }
}
