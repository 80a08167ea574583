#include "scc/conflict.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <string>

namespace scc {

ConflictInstance::ConflictInstance(MultiGraph graph, Orientation orientation, ColorSet colors,
                                   std::vector<ConflictPair> conflicts)
    : graph_(std::move(graph)), orientation_(std::move(orientation)), colors_(colors),
      conflicts_(std::move(conflicts)) {
    const std::uint32_t n = graph_.vertex_count();
    const std::uint32_t m = graph_.edge_count();
    if (orientation_.arcs.size() != m)
        throw std::invalid_argument("orientation does not cover every edge");
    if (conflicts_.size() != m)
        throw std::invalid_argument("conflict map does not cover every edge");
    for (EdgeId e = 0; e < m; ++e) {
        const auto rec = graph_.edge(e);
        const auto a = orientation_.arcs[e];
        const bool matches = (a.tail == rec.u && a.head == rec.v) || (a.tail == rec.v && a.head == rec.u);
        if (!matches)
            throw std::invalid_argument("arc " + std::to_string(e) + " disagrees with its edge endpoints");
        if (conflicts_[e].at_tail >= colors_.k || conflicts_[e].at_head >= colors_.k)
            throw std::invalid_argument("conflict on arc " + std::to_string(e) + " uses a color >= k");
    }
    out_start_.assign(n + 1, 0);
    for (const auto& a : orientation_.arcs)
        ++out_start_[a.tail + 1];
    for (std::uint32_t v = 0; v < n; ++v)
        out_start_[v + 1] += out_start_[v];
    out_arcs_.resize(m);
    std::vector<std::uint32_t> fill(out_start_.begin(), out_start_.end() - 1);
    for (EdgeId e = 0; e < m; ++e)
        out_arcs_[fill[orientation_.arcs[e].tail]++] = e;
    for (std::uint32_t v = 0; v < n; ++v)
        max_out_degree_ = std::max(max_out_degree_, out_degree(v));
}

std::span<const EdgeId> ConflictInstance::out_arcs(VertexId v) const {
    return {out_arcs_.data() + out_start_[v], out_arcs_.data() + out_start_[v + 1]};
}

std::uint32_t ConflictInstance::out_degree(VertexId v) const {
    return out_start_[v + 1] - out_start_[v];
}

ConflictInstance make_normalized_instance(std::uint32_t vertex_count, std::uint32_t k,
                                          const std::vector<ArcSpec>& arcs) {
    std::vector<EdgeRecord> edges;
    edges.reserve(arcs.size());
    for (const auto& a : arcs)
        edges.push_back({a.u, a.v});
    MultiGraph g(vertex_count, std::move(edges));
    Orientation o = orient(g, degeneracy_order(g));
    std::vector<ConflictPair> conflicts;
    conflicts.reserve(arcs.size());
    for (EdgeId e = 0; e < arcs.size(); ++e) {
        if (o.arcs[e].tail == arcs[e].u)
            conflicts.push_back({arcs[e].cu, arcs[e].cv});
        else
            conflicts.push_back({arcs[e].cv, arcs[e].cu});
    }
    return normalize(ConflictInstance(std::move(g), std::move(o), {k}, std::move(conflicts)));
}

Color conflict_color(const ConflictInstance& inst, VertexId v, EdgeId e) {
    const Arc a = inst.arc(e);
    if (v == a.tail)
        return inst.conflict(e).at_tail;
    if (v == a.head)
        return inst.conflict(e).at_head;
    throw std::invalid_argument("vertex " + std::to_string(v) + " is not an endpoint of arc " +
                                std::to_string(e));
}

namespace {

// Direction-free form of one arc's constraint: endpoints ordered by id, each
// paired with its forbidden color. Two arcs state the same constraint iff
// their keys are equal.
using ConstraintKey = std::tuple<VertexId, Color, VertexId, Color>;

ConstraintKey constraint_key(const Arc& a, const ConflictPair& c) {
    if (a.tail < a.head)
        return {a.tail, c.at_tail, a.head, c.at_head};
    return {a.head, c.at_head, a.tail, c.at_tail};
}

} // namespace

ConflictInstance normalize(const ConflictInstance& inst) {
    std::set<ConstraintKey> seen;
    std::vector<EdgeRecord> edges;
    Orientation o;
    std::vector<ConflictPair> conflicts;
    for (EdgeId e = 0; e < inst.arc_count(); ++e) {
        const Arc a = inst.arc(e);
        const ConflictPair c = inst.conflict(e);
        if (!seen.insert(constraint_key(a, c)).second)
            continue;
        edges.push_back({a.tail, a.head});
        o.arcs.push_back(a);
        conflicts.push_back(c);
    }
    return ConflictInstance(MultiGraph(inst.vertex_count(), std::move(edges)), std::move(o),
                            {inst.k()}, std::move(conflicts));
}

std::vector<EdgeId> verify(const ConflictInstance& inst, const Coloring& col) {
    if (col.size() != inst.vertex_count())
        throw std::invalid_argument("coloring is not total");
    for (const Color c : col)
        if (c >= inst.k())
            throw std::invalid_argument("coloring uses a color >= k");
    std::vector<EdgeId> violated;
    for (EdgeId e = 0; e < inst.arc_count(); ++e) {
        const Arc a = inst.arc(e);
        const ConflictPair c = inst.conflict(e);
        if (col[a.tail] == c.at_tail && col[a.head] == c.at_head)
            violated.push_back(e);
    }
    return violated;
}

UniqueRestrictiveness is_uniquely_restrictive(const ConflictInstance& inst) {
    UniqueRestrictiveness result;
    // Group in-arcs of each head by (tail vertex, head-side color); every arc
    // in a group must agree on the tail-side color.
    std::map<std::tuple<VertexId, VertexId, Color>, EdgeId> groups;
    std::set<std::tuple<VertexId, VertexId, Color>> reported;
    for (EdgeId e = 0; e < inst.arc_count(); ++e) {
        const Arc a = inst.arc(e);
        const ConflictPair c = inst.conflict(e);
        const auto key = std::make_tuple(a.head, a.tail, c.at_head);
        auto [it, fresh] = groups.try_emplace(key, e);
        if (fresh)
            continue;
        if (inst.conflict(it->second).at_tail != c.at_tail && reported.insert(key).second) {
            result.uniquely_restrictive = false;
            result.witnesses.emplace_back(a.head, it->second, e);
        }
    }
    return result;
}

Restrictiveness restrictiveness(const ConflictInstance& inst) {
    Restrictiveness result;
    result.per_vertex.assign(inst.vertex_count(), 0);
    // Distinct tail colors per (out-neighbor, head color) group.
    std::map<std::tuple<VertexId, VertexId, Color>, std::set<Color>> tails;
    for (EdgeId e = 0; e < inst.arc_count(); ++e) {
        const Arc a = inst.arc(e);
        const ConflictPair c = inst.conflict(e);
        tails[{a.tail, a.head, c.at_head}].insert(c.at_tail);
    }
    for (const auto& [key, colors] : tails) {
        auto& rv = result.per_vertex[std::get<0>(key)];
        rv = std::max(rv, static_cast<std::uint32_t>(colors.size()));
    }
    result.r = 1;
    for (const auto rv : result.per_vertex)
        result.r = std::max(result.r, rv);
    return result;
}

} // namespace scc
