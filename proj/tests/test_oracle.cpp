#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "scc/generators.hpp"
#include "scc/oracle.hpp"
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

MultiGraph petersen() {
    std::vector<EdgeRecord> edges;
    for (VertexId i = 0; i < 5; ++i) {
        edges.push_back({i, (i + 1) % 5});
        edges.push_back({i, i + 5});
        edges.push_back({5 + i, 5 + (i + 2) % 5});
    }
    return MultiGraph(10, std::move(edges));
}

MultiGraph bundle(std::uint32_t copies) {
    std::vector<EdgeRecord> edges(copies, EdgeRecord{0, 1});
    return MultiGraph(2, std::move(edges));
}

} // namespace

TEST_CASE("backtracking search on pinned instances") {
    const auto one_color = make_normalized_instance(2, 1, {{0, 1, 0, 0}});
    CHECK_FALSE(backtracking_solve(one_color).has_value());

    const auto two_colors = make_normalized_instance(2, 2, {{0, 1, 0, 0}});
    const auto col = backtracking_solve(two_colors);
    REQUIRE(col.has_value());
    CHECK(verify(two_colors, *col).empty());

    // empty graph and empty palette corners
    CHECK(backtracking_solve(make_normalized_instance(0, 3, {})).has_value());
    CHECK(backtracking_solve(make_normalized_instance(3, 1, {})).has_value());
}

TEST_CASE("backtracking agrees with the exhaustive scan") {
    Rng rng(211);
    for (int trial = 0; trial < 200; ++trial) {
        const std::uint32_t n = 1 + rng.below(4);
        const std::uint32_t k = 1 + rng.below(3);
        const auto inst = testsupport::random_instance(n, 5, k, rng);
        const auto fast = backtracking_solve(inst);
        const auto slow = testsupport::exhaustive_solve(inst);
        CHECK(fast.has_value() == slow.has_value());
        if (fast)
            CHECK(verify(inst, *fast).empty());
    }
}

TEST_CASE("chromatic numbers of standard graphs") {
    CHECK(chromatic_number(complete_graph(4)) == 4);
    CHECK(chromatic_number(cycle_graph(5)) == 3);
    CHECK(chromatic_number(petersen()) == 3);
    CHECK(chromatic_number(MultiGraph(4, {})) == 1);
    CHECK(chromatic_number(MultiGraph(0, {})) == 0);
    // parallel edges do not change chromatic numbers
    CHECK(chromatic_number(bundle(5)) == 2);
}

TEST_CASE("adversarial chromatic number on tiny graphs") {
    CHECK(adversarial_chi_con(bundle(1), 4) == 2);
    CHECK(adversarial_chi_con(MultiGraph(3, {}), 4) == 1);

    // two vertices, m parallel edges: smallest k with k*k > m
    for (std::uint32_t m = 1; m <= 5; ++m) {
        std::uint32_t expect = 1;
        while (expect * expect < m + 1)
            ++expect;
        CHECK(adversarial_chi_con(bundle(m), 4) == expect);
    }

    // k_max too small
    CHECK_FALSE(adversarial_chi_con(bundle(1), 1).has_value());

    // subgraph monotonicity at toy scale
    const MultiGraph path2(3, {{0, 1}, {1, 2}});
    const auto chi_path = adversarial_chi_con(path2, 4);
    REQUIRE(chi_path.has_value());
    CHECK(*chi_path == 2);
    CHECK(*adversarial_chi_con(complete_graph(3), 4) >= *chi_path);

    // enumeration budget
    CHECK_THROWS_AS(adversarial_chi_con(bundle(30), 3), ResourceError);
}
