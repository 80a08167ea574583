#include "scc/multigraph.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <string>

namespace scc {

MultiGraph::MultiGraph(std::uint32_t vertex_count, std::vector<EdgeRecord> edges)
    : vertex_count_(vertex_count), edges_(std::move(edges)) {
    degrees_.assign(vertex_count_, 0);
    for (std::size_t i = 0; i < edges_.size(); ++i) {
        const auto& e = edges_[i];
        if (e.u >= vertex_count_ || e.v >= vertex_count_)
            throw std::invalid_argument("edge " + std::to_string(i) + " has endpoint out of range");
        if (e.u == e.v)
            throw std::invalid_argument("edge " + std::to_string(i) + " is a loop");
        ++degrees_[e.u];
        ++degrees_[e.v];
    }
    incidence_start_.assign(vertex_count_ + 1, 0);
    for (const auto& e : edges_) {
        ++incidence_start_[e.u + 1];
        ++incidence_start_[e.v + 1];
    }
    for (std::uint32_t v = 0; v < vertex_count_; ++v)
        incidence_start_[v + 1] += incidence_start_[v];
    incidence_.resize(2 * edges_.size());
    std::vector<std::uint32_t> fill(incidence_start_.begin(), incidence_start_.end() - 1);
    for (EdgeId e = 0; e < edges_.size(); ++e) {
        incidence_[fill[edges_[e].u]++] = {edges_[e].v, e};
        incidence_[fill[edges_[e].v]++] = {edges_[e].u, e};
    }
}

std::span<const std::pair<VertexId, EdgeId>> MultiGraph::incident(VertexId v) const {
    return {incidence_.data() + incidence_start_[v], incidence_.data() + incidence_start_[v + 1]};
}

DegeneracyOrder degeneracy_order(const MultiGraph& g) {
    const std::uint32_t n = g.vertex_count();
    DegeneracyOrder result;
    result.order.resize(n);

    std::vector<std::uint32_t> deg(n);
    std::set<std::pair<std::uint32_t, VertexId>> queue; // (degree, id), min first
    for (VertexId v = 0; v < n; ++v) {
        deg[v] = g.degree(v);
        queue.insert({deg[v], v});
    }
    std::vector<bool> removed(n, false);
    for (std::uint32_t step = 0; step < n; ++step) {
        auto [d, v] = *queue.begin();
        queue.erase(queue.begin());
        removed[v] = true;
        result.d = std::max(result.d, d);
        // reverse removal order: first removed goes last
        result.order[n - 1 - step] = v;
        for (auto [w, e] : g.incident(v)) {
            if (removed[w])
                continue;
            queue.erase({deg[w], w});
            --deg[w];
            queue.insert({deg[w], w});
        }
    }
    return result;
}

Orientation orient(const MultiGraph& g, const DegeneracyOrder& ord) {
    const std::uint32_t n = g.vertex_count();
    if (ord.order.size() != n)
        throw std::invalid_argument("ordering size does not match vertex count");
    std::vector<std::uint32_t> pos(n, n);
    for (std::uint32_t i = 0; i < n; ++i) {
        const VertexId v = ord.order[i];
        if (v >= n || pos[v] != n)
            throw std::invalid_argument("ordering is not a permutation of the vertices");
        pos[v] = i;
    }
    Orientation o;
    o.arcs.reserve(g.edge_count());
    for (const auto& e : g.edges()) {
        if (pos[e.u] < pos[e.v])
            o.arcs.push_back({e.v, e.u});
        else
            o.arcs.push_back({e.u, e.v});
    }
    return o;
}

std::uint32_t max_degree(const MultiGraph& g) {
    std::uint32_t best = 0;
    for (VertexId v = 0; v < g.vertex_count(); ++v)
        best = std::max(best, g.degree(v));
    return best;
}

std::uint32_t multiplicity(const MultiGraph& g) {
    std::map<std::pair<VertexId, VertexId>, std::uint32_t> count;
    std::uint32_t best = 0;
    for (const auto& e : g.edges()) {
        auto key = std::minmax(e.u, e.v);
        best = std::max(best, ++count[{key.first, key.second}]);
    }
    return best;
}

std::uint32_t max_out_degree(const MultiGraph& g, const Orientation& o) {
    std::vector<std::uint32_t> out(g.vertex_count(), 0);
    std::uint32_t best = 0;
    for (const auto& a : o.arcs)
        best = std::max(best, ++out[a.tail]);
    return best;
}

} // namespace scc
