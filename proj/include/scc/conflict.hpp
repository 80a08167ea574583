#pragma once

#include "scc/multigraph.hpp"

#include <cstdint>
#include <optional>
#include <tuple>
#include <vector>

namespace scc {

using Color = std::uint32_t;

struct ColorSet {
    std::uint32_t k = 0; // colors are 0..k-1
};

// Forbidden ordered pair on an arc: tail entry first, head entry second.
struct ConflictPair {
    Color at_tail;
    Color at_head;
    bool operator==(const ConflictPair&) const = default;
    auto operator<=>(const ConflictPair&) const = default;
};

// Arc as written by a builder or a file, before anchoring to an orientation:
// cu is the forbidden color at u, cv at v.
struct ArcSpec {
    VertexId u;
    VertexId v;
    Color cu;
    Color cv;
};

// Total assignment of one color per vertex, indexed by vertex id.
using Coloring = std::vector<Color>;

// A multigraph with one forbidden ordered color pair per arc, anchored to an
// orientation. conflicts()[e] is read in arc(e)'s tail/head order; the same
// constraint viewed from the head is the reversed pair.
class ConflictInstance {
public:
    ConflictInstance(MultiGraph graph, Orientation orientation, ColorSet colors,
                     std::vector<ConflictPair> conflicts);

    const MultiGraph& graph() const { return graph_; }
    const Orientation& orientation() const { return orientation_; }
    std::uint32_t k() const { return colors_.k; }
    std::uint32_t vertex_count() const { return graph_.vertex_count(); }
    std::uint32_t arc_count() const { return graph_.edge_count(); }
    Arc arc(EdgeId e) const { return orientation_.arcs[e]; }
    ConflictPair conflict(EdgeId e) const { return conflicts_[e]; }
    const std::vector<ConflictPair>& conflicts() const { return conflicts_; }

    // Outgoing arcs of v, counted with multiplicity.
    std::span<const EdgeId> out_arcs(VertexId v) const;
    std::uint32_t out_degree(VertexId v) const;
    std::uint32_t max_out_degree() const { return max_out_degree_; }

private:
    MultiGraph graph_;
    Orientation orientation_;
    ColorSet colors_;
    std::vector<ConflictPair> conflicts_;
    std::vector<std::uint32_t> out_start_;
    std::vector<EdgeId> out_arcs_;
    std::uint32_t max_out_degree_ = 0;
};

// Builds the canonical instance for a batch of arcs-as-written: anchors to the
// degeneracy orientation of the underlying multigraph (rewriting each flipped
// conflict as its reversal) and normalizes.
ConflictInstance make_normalized_instance(std::uint32_t vertex_count, std::uint32_t k,
                                          const std::vector<ArcSpec>& arcs);

// The entry of arc e's conflict at v's position. Throws std::invalid_argument
// if v is not an endpoint of e.
Color conflict_color(const ConflictInstance& inst, VertexId v, EdgeId e);

// Collapses arcs that state the same ordered constraint (parallel arcs with
// equal conflicts, up to the reversal rule) and re-densifies edge ids.
// The solution set is unchanged.
ConflictInstance normalize(const ConflictInstance& inst);

// Exactly the arcs whose forbidden pair is used by `col`. Empty result means
// `col` is a valid single-conflict coloring. Throws std::invalid_argument if
// col is not a total assignment with all values < k.
std::vector<EdgeId> verify(const ConflictInstance& inst, const Coloring& col);

struct UniqueRestrictiveness {
    bool uniquely_restrictive = true;
    // (w, e1, e2): parallel in-arcs of w sharing their w-side color but not
    // their other-side color. One witness per offending group.
    std::vector<std::tuple<VertexId, EdgeId, EdgeId>> witnesses;
};

UniqueRestrictiveness is_uniquely_restrictive(const ConflictInstance& inst);

struct Restrictiveness {
    std::uint32_t r = 1; // max(1, max over vertices) so probability formulas stay valid
    std::vector<std::uint32_t> per_vertex;
};

// Restrictiveness at v: the largest number of distinct tail colors among
// parallel out-arcs of v sharing one head color.
Restrictiveness restrictiveness(const ConflictInstance& inst);

} // namespace scc
