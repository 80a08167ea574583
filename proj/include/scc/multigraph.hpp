#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace scc {

using VertexId = std::uint32_t;
using EdgeId = std::uint32_t;

struct EdgeRecord {
    VertexId u;
    VertexId v;
    bool operator==(const EdgeRecord&) const = default;
};

// Loop-free undirected multigraph. Vertices are dense ids 0..n-1, edge ids are
// the dense indices 0..m-1 of the edge list. Parallel edges are distinct
// records. Immutable after construction.
class MultiGraph {
public:
    MultiGraph() = default;
    MultiGraph(std::uint32_t vertex_count, std::vector<EdgeRecord> edges);

    std::uint32_t vertex_count() const { return vertex_count_; }
    std::uint32_t edge_count() const { return static_cast<std::uint32_t>(edges_.size()); }
    const std::vector<EdgeRecord>& edges() const { return edges_; }
    EdgeRecord edge(EdgeId e) const { return edges_[e]; }

    // Degree counting parallel edges with multiplicity.
    std::uint32_t degree(VertexId v) const { return degrees_[v]; }

    // Incident (neighbor, edge id) pairs of v; each parallel edge appears once.
    std::span<const std::pair<VertexId, EdgeId>> incident(VertexId v) const;

private:
    std::uint32_t vertex_count_ = 0;
    std::vector<EdgeRecord> edges_;
    std::vector<std::uint32_t> degrees_;
    // CSR incidence: both endpoints of every edge.
    std::vector<std::uint32_t> incidence_start_;
    std::vector<std::pair<VertexId, EdgeId>> incidence_;
};

struct DegeneracyOrder {
    std::vector<VertexId> order; // v_1..v_n; each vertex has <= d earlier neighbors
    std::uint32_t d = 0;
};

struct Arc {
    VertexId tail;
    VertexId head;
    bool operator==(const Arc&) const = default;
};

// Direction of every edge; arc(e) is {tail, head} with {tail, head} == {u, v}.
struct Orientation {
    std::vector<Arc> arcs;
};

// Smallest-last ordering: repeatedly remove a minimum-degree vertex (smallest
// id on ties, degrees with multiplicity); removed vertices listed in reverse
// removal order. d is the maximum degree seen at any removal step, which is
// the graph's degeneracy.
DegeneracyOrder degeneracy_order(const MultiGraph& g);

// Directs every edge from the later endpoint of `ord` to the earlier one.
// Throws std::invalid_argument if ord.order is not a permutation of 0..n-1.
Orientation orient(const MultiGraph& g, const DegeneracyOrder& ord);

std::uint32_t max_degree(const MultiGraph& g);

// Largest number of parallel edges on any vertex pair; 0 for edgeless graphs.
std::uint32_t multiplicity(const MultiGraph& g);

std::uint32_t max_out_degree(const MultiGraph& g, const Orientation& o);

} // namespace scc
