#pragma once

#include "scc/conflict.hpp"

#include <map>
#include <vector>

namespace scc {

// Graph with a (not necessarily proper) edge coloring.
struct EdgeColoredGraph {
    MultiGraph graph;
    ColorSet colors;
    std::vector<Color> edge_color; // indexed by edge id, values < colors.k
};

// Graphs on a common vertex set 0..n-1.
struct GraphFamily {
    std::uint32_t vertex_count = 0;
    std::vector<MultiGraph> members;
};

// Proper k-coloring as a single-conflict instance: every edge of the
// underlying simple graph becomes k parallel arcs carrying the k
// monochromatic conflicts. Solvable iff the graph is k-colorable.
ConflictInstance proper_to_scc(const MultiGraph& g, std::uint32_t k);

// Adapted coloring as a single-conflict instance: edge e gets the
// monochromatic conflict on its edge color. Edges colored outside the vertex
// palette impose no constraint and produce no arc.
ConflictInstance adapted_to_scc(const EdgeColoredGraph& ecg);

// Correspondence (DP) coloring: for each simple edge, the supplied pairs must
// form a matching on the color grid (no first entry repeated, no second entry
// repeated). Pair (a, b) on edge {u, v} with u < v forbids a at u with b at v.
// Edges absent from the map carry no constraint. Throws std::invalid_argument
// naming the edge on a non-matching pair set.
ConflictInstance dp_to_scc(const MultiGraph& g, std::uint32_t k,
                           const std::map<std::pair<VertexId, VertexId>,
                                          std::vector<ConflictPair>>& matchings);

// Union of the family with each member's edges colored by its index;
// colors.k is the member count.
EdgeColoredGraph coop_to_adapted(const GraphFamily& fam);

// Splits a valid adapted coloring of coop_to_adapted(fam) into the cooperative
// system R_1..R_k: R_i = vertices colored i, independent in member i, and the
// sets partition the vertex set. Throws std::invalid_argument on an invalid
// input coloring.
std::vector<std::vector<VertexId>> extract_cooperative(const GraphFamily& fam, const Coloring& col);

} // namespace scc
