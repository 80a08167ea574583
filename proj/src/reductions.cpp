#include "scc/reductions.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <string>

namespace scc {

namespace {

std::vector<std::pair<VertexId, VertexId>> simple_edges(const MultiGraph& g) {
    std::set<std::pair<VertexId, VertexId>> dedup;
    for (const auto& e : g.edges()) {
        auto mm = std::minmax(e.u, e.v);
        dedup.insert({mm.first, mm.second});
    }
    return {dedup.begin(), dedup.end()};
}

} // namespace

ConflictInstance proper_to_scc(const MultiGraph& g, std::uint32_t k) {
    if (k == 0)
        throw std::invalid_argument("proper_to_scc needs at least one color");
    std::vector<ArcSpec> arcs;
    for (const auto& [u, v] : simple_edges(g))
        for (Color c = 0; c < k; ++c)
            arcs.push_back({u, v, c, c});
    return make_normalized_instance(g.vertex_count(), k, arcs);
}

ConflictInstance adapted_to_scc(const EdgeColoredGraph& ecg) {
    if (ecg.edge_color.size() != ecg.graph.edge_count())
        throw std::invalid_argument("edge coloring is not total");
    std::vector<ArcSpec> arcs;
    arcs.reserve(ecg.graph.edge_count());
    for (EdgeId e = 0; e < ecg.graph.edge_count(); ++e) {
        const Color c = ecg.edge_color[e];
        // An edge colored outside the vertex palette can never see its color
        // on both endpoints; it contributes no arc.
        if (c >= ecg.colors.k)
            continue;
        const auto rec = ecg.graph.edge(e);
        arcs.push_back({rec.u, rec.v, c, c});
    }
    return make_normalized_instance(ecg.graph.vertex_count(), ecg.colors.k, arcs);
}

ConflictInstance dp_to_scc(const MultiGraph& g, std::uint32_t k,
                           const std::map<std::pair<VertexId, VertexId>,
                                          std::vector<ConflictPair>>& matchings) {
    std::vector<ArcSpec> arcs;
    const auto edges = simple_edges(g);
    const std::set<std::pair<VertexId, VertexId>> edge_set(edges.begin(), edges.end());
    // Canonicalize keys to (min, max), reorienting the pairs alongside.
    std::map<std::pair<VertexId, VertexId>, std::vector<ConflictPair>> canonical;
    for (const auto& [edge, pairs] : matchings) {
        const auto name = "(" + std::to_string(edge.first) + "," + std::to_string(edge.second) + ")";
        auto mm = std::minmax(edge.first, edge.second);
        if (!edge_set.count({mm.first, mm.second}))
            throw std::invalid_argument("matching supplied for a non-edge " + name);
        auto [it, fresh] = canonical.try_emplace({mm.first, mm.second});
        if (!fresh)
            throw std::invalid_argument("edge " + name + " has two matching entries");
        for (const auto& p : pairs)
            it->second.push_back(edge.first <= edge.second ? p
                                                           : ConflictPair{p.at_head, p.at_tail});
    }
    for (const auto& [edge, pairs] : canonical) {
        const auto [u, v] = edge;
        std::set<Color> firsts, seconds;
        for (const auto& p : pairs) {
            if (p.at_tail >= k || p.at_head >= k)
                throw std::invalid_argument("pair uses a color >= k on edge (" +
                                            std::to_string(u) + "," + std::to_string(v) + ")");
            if (!firsts.insert(p.at_tail).second || !seconds.insert(p.at_head).second)
                throw std::invalid_argument("pairs on edge (" + std::to_string(u) + "," +
                                            std::to_string(v) + ") do not form a matching");
            arcs.push_back({u, v, p.at_tail, p.at_head});
        }
    }
    return make_normalized_instance(g.vertex_count(), k, arcs);
}

EdgeColoredGraph coop_to_adapted(const GraphFamily& fam) {
    if (fam.members.empty())
        throw std::invalid_argument("family has no members");
    std::vector<EdgeRecord> edges;
    std::vector<Color> edge_color;
    for (std::uint32_t i = 0; i < fam.members.size(); ++i) {
        const auto& member = fam.members[i];
        if (member.vertex_count() != fam.vertex_count)
            throw std::invalid_argument("member " + std::to_string(i) +
                                        " is not on the shared vertex set");
        for (const auto& e : member.edges()) {
            edges.push_back(e);
            edge_color.push_back(i);
        }
    }
    return {MultiGraph(fam.vertex_count, std::move(edges)),
            {static_cast<std::uint32_t>(fam.members.size())}, std::move(edge_color)};
}

std::vector<std::vector<VertexId>> extract_cooperative(const GraphFamily& fam, const Coloring& col) {
    const ConflictInstance inst = adapted_to_scc(coop_to_adapted(fam));
    if (!verify(inst, col).empty())
        throw std::invalid_argument("coloring is not a valid adapted coloring of the union");
    std::vector<std::vector<VertexId>> sets(fam.members.size());
    for (VertexId v = 0; v < fam.vertex_count; ++v)
        sets[col[v]].push_back(v);
    // Independence per member follows from adapted validity; asserted anyway.
    for (std::uint32_t i = 0; i < fam.members.size(); ++i)
        for (const auto& e : fam.members[i].edges())
            if (col[e.u] == i && col[e.v] == i)
                throw std::logic_error("extracted set is not independent in its member");
    return sets;
}

} // namespace scc
