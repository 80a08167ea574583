#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "scc/conflict.hpp"
#include "scc/generators.hpp"
#include "support/brute.hpp"

#include <set>
#include <tuple>

using namespace scc;

namespace {

// Instance with explicit arcs, bypassing re-orientation (for tests that pin
// the orientation down).
ConflictInstance raw_instance(std::uint32_t n, std::uint32_t k,
                              std::vector<std::tuple<VertexId, VertexId, Color, Color>> arcs) {
    std::vector<EdgeRecord> edges;
    Orientation o;
    std::vector<ConflictPair> conflicts;
    for (const auto& [t, h, ct, ch] : arcs) {
        edges.push_back({t, h});
        o.arcs.push_back({t, h});
        conflicts.push_back({ct, ch});
    }
    return ConflictInstance(MultiGraph(n, std::move(edges)), std::move(o), {k},
                            std::move(conflicts));
}

std::set<std::tuple<VertexId, VertexId, Color, Color>> constraint_set(const ConflictInstance& inst,
                                                                      const std::vector<EdgeId>& ids) {
    std::set<std::tuple<VertexId, VertexId, Color, Color>> out;
    for (const EdgeId e : ids) {
        const Arc a = inst.arc(e);
        const ConflictPair c = inst.conflict(e);
        if (a.tail < a.head)
            out.insert({a.tail, a.head, c.at_tail, c.at_head});
        else
            out.insert({a.head, a.tail, c.at_head, c.at_tail});
    }
    return out;
}

} // namespace

TEST_CASE("conflict color reads the entry at the vertex position") {
    const auto inst = raw_instance(3, 3, {{0, 1, 1, 2}});
    CHECK(conflict_color(inst, 0, 0) == 1);
    CHECK(conflict_color(inst, 1, 0) == 2);
    CHECK_THROWS_AS(conflict_color(inst, 2, 0), std::invalid_argument);
}

TEST_CASE("the reversal rule preserves the written constraint") {
    // same constraint written from either side
    const auto a = make_normalized_instance(2, 3, {{0, 1, 1, 2}});
    const auto b = make_normalized_instance(2, 3, {{1, 0, 2, 1}});
    REQUIRE(a.arc_count() == 1);
    REQUIRE(b.arc_count() == 1);
    CHECK(a.arc(0) == b.arc(0));
    CHECK(a.conflict(0) == b.conflict(0));
    CHECK(testsupport::exhaustive_solutions(a) == testsupport::exhaustive_solutions(b));
}

TEST_CASE("normalize collapses repeated constraints") {
    const auto identical = normalize(raw_instance(2, 3, {{0, 1, 1, 1}, {0, 1, 1, 1}}));
    CHECK(identical.arc_count() == 1);

    const auto distinct = normalize(raw_instance(2, 3, {{0, 1, 1, 1}, {0, 1, 1, 2}}));
    CHECK(distinct.arc_count() == 2);

    // opposite directions, same ordered constraint
    const auto reversed = raw_instance(2, 3, {{0, 1, 1, 2}, {1, 0, 2, 1}});
    const auto collapsed = normalize(reversed);
    CHECK(collapsed.arc_count() == 1);
    CHECK(testsupport::exhaustive_solutions(reversed) == testsupport::exhaustive_solutions(collapsed));
}

TEST_CASE("verify is exact and order sensitive") {
    const auto inst = raw_instance(2, 3, {{0, 1, 1, 2}});
    CHECK(verify(inst, {1, 2}) == std::vector<EdgeId>{0});
    CHECK(verify(inst, {2, 1}).empty());

    // adapted-style dodge on a triangle
    const auto triangle = raw_instance(3, 2, {{0, 1, 0, 0}, {1, 2, 0, 0}, {2, 0, 0, 0}});
    CHECK(verify(triangle, {1, 1, 1}).empty());

    CHECK_THROWS_AS(verify(inst, {1}), std::invalid_argument);
    CHECK_THROWS_AS(verify(inst, {1, 3}), std::invalid_argument);
}

TEST_CASE("verify grows monotonically with added arcs") {
    Rng rng(71);
    for (int trial = 0; trial < 60; ++trial) {
        const std::uint32_t n = 2 + rng.below(5);
        const std::uint32_t k = 1 + rng.below(4);
        std::vector<std::tuple<VertexId, VertexId, Color, Color>> arcs;
        const std::uint32_t m = 1 + rng.below(8);
        for (std::uint32_t i = 0; i < m; ++i) {
            const auto u = static_cast<VertexId>(rng.below(n));
            auto v = static_cast<VertexId>(rng.below(n - 1));
            if (v >= u)
                ++v;
            arcs.push_back({u, v, static_cast<Color>(rng.below(k)),
                            static_cast<Color>(rng.below(k))});
        }
        Coloring col(n);
        for (auto& c : col)
            c = static_cast<Color>(rng.below(k));

        auto fewer_arcs = arcs;
        fewer_arcs.resize(1 + rng.below(m));
        const auto small = raw_instance(n, k, fewer_arcs);
        const auto large = raw_instance(n, k, arcs);
        const auto violations_small = constraint_set(small, verify(small, col));
        const auto violations_large = constraint_set(large, verify(large, col));
        for (const auto& row : violations_small)
            CHECK(violations_large.count(row) == 1);
    }
}

TEST_CASE("unique restrictiveness witnesses parallel in-arcs") {
    // simple graphs are always uniquely restrictive
    Rng rng(5);
    for (int trial = 0; trial < 20; ++trial) {
        const auto g = gen_degenerate(2 + rng.below(8), 3, rng.next_u64());
        const auto inst = gen_conflicts(g, 4, 0, rng.next_u64());
        CHECK(is_uniquely_restrictive(inst).uniquely_restrictive);
    }

    const auto bad = raw_instance(2, 7, {{0, 1, 1, 5}, {0, 1, 2, 5}});
    const auto report = is_uniquely_restrictive(bad);
    CHECK_FALSE(report.uniquely_restrictive);
    REQUIRE(report.witnesses.size() == 1);
    CHECK(std::get<0>(report.witnesses[0]) == 1);

    const auto ok = raw_instance(2, 7, {{0, 1, 1, 5}, {0, 1, 1, 6}});
    CHECK(is_uniquely_restrictive(ok).uniquely_restrictive);
}

TEST_CASE("restrictiveness counts shared head colors") {
    const auto inst = raw_instance(2, 7, {{0, 1, 1, 5}, {0, 1, 2, 5}, {0, 1, 3, 6}});
    const auto rep = restrictiveness(inst);
    CHECK(rep.per_vertex[0] == 2);
    CHECK(rep.per_vertex[1] == 0);
    CHECK(rep.r == 2);

    // arcless: per-vertex zero, global reported as 1
    const auto arcless = raw_instance(3, 2, {});
    CHECK(restrictiveness(arcless).r == 1);
}

TEST_CASE("r equals 1 exactly on uniquely restrictive normalized instances") {
    Rng rng(97);
    for (int trial = 0; trial < 1000; ++trial) {
        const std::uint32_t n = 2 + rng.below(5);
        const std::uint32_t k = 1 + rng.below(5);
        const auto g = gen_degenerate(n, 1 + rng.below(3), rng.next_u64());
        const auto inst = gen_conflicts(g, k, 1 + rng.below(4), rng.next_u64());
        const bool unique = is_uniquely_restrictive(inst).uniquely_restrictive;
        CHECK(unique == (restrictiveness(inst).r == 1));
        CHECK(restrictiveness(inst).r <= std::max<std::uint32_t>(1, multiplicity(inst.graph())));
    }
}
