#include "scc/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>

namespace scc {

namespace {

// Constraint of an arc between the vertex being colored and an earlier one:
// if the earlier vertex wears `at_other`, `at_self` is excluded here.
struct BackConstraint {
    VertexId other;
    Color at_self;
    Color at_other;
};

struct SearchContext {
    std::uint32_t n = 0;
    std::uint32_t k = 0;
    std::vector<VertexId> order;
    std::vector<std::vector<BackConstraint>> back; // by position in `order`
};

SearchContext build_context(const MultiGraph& g, const std::vector<Arc>& arcs, std::uint32_t k,
                            std::span<const ConflictPair> conflicts) {
    SearchContext ctx;
    ctx.n = g.vertex_count();
    ctx.k = k;
    ctx.order = degeneracy_order(g).order;
    std::vector<std::uint32_t> pos(ctx.n);
    for (std::uint32_t i = 0; i < ctx.n; ++i)
        pos[ctx.order[i]] = i;
    ctx.back.resize(ctx.n);
    for (EdgeId e = 0; e < arcs.size(); ++e) {
        const Arc a = arcs[e];
        const ConflictPair c = conflicts[e];
        if (pos[a.tail] > pos[a.head])
            ctx.back[pos[a.tail]].push_back({a.head, c.at_tail, c.at_head});
        else
            ctx.back[pos[a.head]].push_back({a.tail, c.at_head, c.at_tail});
    }
    return ctx;
}

bool search(const SearchContext& ctx, std::uint32_t position, Coloring& col) {
    if (position == ctx.n)
        return true;
    const VertexId v = ctx.order[position];
    std::uint64_t excluded = 0; // k <= 64 callers only; guarded below
    for (const auto& bc : ctx.back[position])
        if (col[bc.other] == bc.at_other)
            excluded |= std::uint64_t{1} << bc.at_self;
    for (Color c = 0; c < ctx.k; ++c) {
        if ((excluded >> c) & 1)
            continue;
        col[v] = c;
        if (search(ctx, position + 1, col))
            return true;
    }
    return false;
}

// Fallback without the 64-color cap.
bool search_wide(const SearchContext& ctx, std::uint32_t position, Coloring& col,
                 std::vector<ColorMask>& excluded_stack) {
    if (position == ctx.n)
        return true;
    const VertexId v = ctx.order[position];
    ColorMask& excluded = excluded_stack[position];
    excluded.clear();
    for (const auto& bc : ctx.back[position])
        if (col[bc.other] == bc.at_other)
            excluded.set(bc.at_self);
    for (Color c = 0; c < ctx.k; ++c) {
        if (excluded.test(c))
            continue;
        col[v] = c;
        if (search_wide(ctx, position + 1, col, excluded_stack))
            return true;
    }
    return false;
}

std::optional<Coloring> run_search(const SearchContext& ctx) {
    Coloring col(ctx.n, 0);
    if (ctx.n == 0)
        return col;
    if (ctx.k == 0)
        return std::nullopt;
    if (ctx.k <= 64) {
        if (search(ctx, 0, col))
            return col;
        return std::nullopt;
    }
    std::vector<ColorMask> stack(ctx.n, ColorMask(ctx.k));
    if (search_wide(ctx, 0, col, stack))
        return col;
    return std::nullopt;
}

} // namespace

std::optional<Coloring> backtracking_solve(const ConflictInstance& inst) {
    const auto ctx = build_context(inst.graph(), inst.orientation().arcs, inst.k(),
                                   inst.conflicts());
    return run_search(ctx);
}

namespace {

bool properly_colorable(const std::vector<std::uint32_t>& adjacency,
                        const std::vector<VertexId>& order, std::uint32_t position,
                        std::uint32_t k, std::vector<Color>& col, Color used) {
    if (position == order.size())
        return true;
    const VertexId v = order[position];
    // colors beyond used+1 are interchangeable with used+1
    const Color limit = std::min<Color>(k - 1, used + 1);
    for (Color c = 0; c <= limit; ++c) {
        bool clash = false;
        for (std::uint32_t i = 0; i < position && !clash; ++i)
            if ((adjacency[v] >> order[i]) & 1 && col[order[i]] == c)
                clash = true;
        if (clash)
            continue;
        col[v] = c;
        if (properly_colorable(adjacency, order, position + 1, k, col,
                               std::max<Color>(used, c)))
            return true;
    }
    return false;
}

} // namespace

std::uint32_t chromatic_number(const MultiGraph& g) {
    const std::uint32_t n = g.vertex_count();
    if (n == 0)
        return 0;
    if (n > 32)
        throw std::invalid_argument("chromatic_number is limited to 32 vertices");
    std::vector<std::uint32_t> adjacency(n, 0);
    bool any_edge = false;
    for (const auto& e : g.edges()) {
        adjacency[e.u] |= std::uint32_t{1} << e.v;
        adjacency[e.v] |= std::uint32_t{1} << e.u;
        any_edge = true;
    }
    if (!any_edge)
        return 1;
    const auto order = degeneracy_order(g).order;
    for (std::uint32_t k = 2;; ++k) {
        std::vector<Color> col(n, 0);
        if (properly_colorable(adjacency, order, 0, k, col, 0))
            return k;
    }
}

std::optional<std::uint32_t> adversarial_chi_con(const MultiGraph& g, std::uint32_t k_max) {
    const std::uint32_t m = g.edge_count();
    if (m == 0)
        return k_max >= 1 ? std::optional<std::uint32_t>{1} : std::nullopt;

    std::vector<Arc> arcs;
    arcs.reserve(m);
    for (const auto& e : g.edges())
        arcs.push_back({e.u, e.v});

    for (std::uint32_t k = 1; k <= k_max; ++k) {
        // Every conflict function is a global recoloring of one whose first
        // arc carries (0,0) or (0,1), so two representatives cover all orbits.
        std::vector<ConflictPair> first;
        first.push_back({0, 0});
        if (k >= 2)
            first.push_back({0, 1});
        const double pairs = static_cast<double>(k) * k;
        const double assignments = first.size() * std::pow(pairs, m - 1);
        if (assignments > 1e7)
            throw ResourceError("conflict-function enumeration exceeds the assignment budget");

        std::vector<ConflictPair> conflicts(m, {0, 0});
        SearchContext ctx = build_context(g, arcs, k, conflicts);
        std::vector<std::uint32_t> pos(g.vertex_count());
        for (std::uint32_t i = 0; i < g.vertex_count(); ++i)
            pos[ctx.order[i]] = i;

        bool all_solvable = true;
        for (const ConflictPair f0 : first) {
            conflicts.assign(m, {0, 0});
            conflicts[0] = f0;
            bool carry = false;
            while (!carry) {
                for (auto& row : ctx.back)
                    row.clear();
                for (EdgeId e = 0; e < m; ++e) {
                    const Arc a = arcs[e];
                    const ConflictPair c = conflicts[e];
                    if (pos[a.tail] > pos[a.head])
                        ctx.back[pos[a.tail]].push_back({a.head, c.at_tail, c.at_head});
                    else
                        ctx.back[pos[a.head]].push_back({a.tail, c.at_head, c.at_tail});
                }
                if (!run_search(ctx)) {
                    all_solvable = false;
                    break;
                }
                // odometer over arcs 1..m-1, last arc fastest
                carry = true;
                for (EdgeId e = m; carry && e-- > 1;) {
                    auto& c = conflicts[e];
                    if (c.at_head + 1 < k) {
                        ++c.at_head;
                        carry = false;
                    } else if (c.at_tail + 1 < k) {
                        c.at_head = 0;
                        ++c.at_tail;
                        carry = false;
                    } else {
                        c = {0, 0};
                    }
                }
            }
            if (!all_solvable)
                break;
        }
        if (all_solvable)
            return k;
    }
    return std::nullopt;
}

} // namespace scc
