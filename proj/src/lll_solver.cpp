#include "scc/lll_solver.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <set>
#include <stdexcept>

namespace scc {

bool ColorMask::empty() const {
    for (const auto w : words_)
        if (w)
            return false;
    return true;
}

std::uint32_t ColorMask::count() const {
    std::uint32_t total = 0;
    for (const auto w : words_)
        total += static_cast<std::uint32_t>(std::popcount(w));
    return total;
}

std::optional<Color> ColorMask::lowest() const {
    for (std::size_t i = 0; i < words_.size(); ++i)
        if (words_[i])
            return static_cast<Color>(i * 64 + std::countr_zero(words_[i]));
    return std::nullopt;
}

bool ColorMask::subset_of(const ColorMask& other) const {
    for (std::size_t i = 0; i < words_.size(); ++i)
        if (words_[i] & ~other.words_[i])
            return false;
    return true;
}

const char* to_string(Outcome o) {
    switch (o) {
    case Outcome::solved: return "solved";
    case Outcome::exhausted_rounds: return "exhausted-rounds";
    case Outcome::infeasible_detected: return "infeasible-detected";
    }
    return "?";
}

const char* to_string(Variant v) {
    switch (v) {
    case Variant::automatic: return "auto";
    case Variant::greedy: return "greedy";
    case Variant::unique: return "unique";
    case Variant::general: return "general";
    }
    return "?";
}

double choose_probability(const ConflictInstance& inst, Variant variant) {
    const double d = inst.max_out_degree();
    if (d < 1)
        throw std::invalid_argument("choose_probability needs at least one arc");
    const double k = inst.k();
    switch (variant) {
    case Variant::unique:
        return std::min(1.0, k / (2.0 * d));
    case Variant::general: {
        const double r = restrictiveness(inst).r;
        return std::min(0.25, k / (std::exp2(r + 3) * r * d));
    }
    default:
        throw std::invalid_argument("no inclusion probability for this variant");
    }
}

namespace {

void draw_inventory(ColorMask& mask, std::uint32_t k, double p, Rng& rng) {
    mask.clear();
    for (Color c = 0; c < k; ++c)
        if (rng.bernoulli(p))
            mask.set(c);
}

} // namespace

InventoryState sample_inventories(const ConflictInstance& inst, double p, Rng& rng) {
    if (!(p > 0.0) || p > 1.0)
        throw std::invalid_argument("inclusion probability must lie in (0, 1]");
    const std::uint32_t n = inst.vertex_count();
    InventoryState state;
    state.inventory.assign(n, ColorMask(inst.k()));
    for (VertexId v = 0; v < n; ++v)
        draw_inventory(state.inventory[v], inst.k(), p, rng);
    state.pruned = state.inventory;
    return state;
}

InventoryState prune(const ConflictInstance& inst, InventoryState state) {
    state.pruned = state.inventory;
    for (VertexId v = 0; v < inst.vertex_count(); ++v) {
        for (const EdgeId e : inst.out_arcs(v)) {
            const ConflictPair c = inst.conflict(e);
            if (state.inventory[v].test(c.at_tail) &&
                state.inventory[inst.arc(e).head].test(c.at_head))
                state.pruned[v].reset(c.at_tail);
        }
    }
    return state;
}

std::vector<VertexId> bad_vertices(const InventoryState& state) {
    std::vector<VertexId> bad;
    for (VertexId v = 0; v < state.pruned.size(); ++v)
        if (state.pruned[v].empty())
            bad.push_back(v);
    return bad;
}

Coloring greedy_solve(const ConflictInstance& inst) {
    const std::uint32_t n = inst.vertex_count();

    // Color heads before tails: Kahn over the arc digraph, smallest id first.
    std::vector<std::vector<EdgeId>> in_arcs(n);
    std::vector<std::uint32_t> waiting(n, 0); // uncolored out-arc endpoints, with multiplicity
    for (EdgeId e = 0; e < inst.arc_count(); ++e) {
        in_arcs[inst.arc(e).head].push_back(e);
        ++waiting[inst.arc(e).tail];
    }
    std::set<VertexId> ready;
    for (VertexId v = 0; v < n; ++v)
        if (waiting[v] == 0)
            ready.insert(v);

    Coloring col(n, 0);
    ColorMask excluded(inst.k());
    std::uint32_t colored = 0;
    while (!ready.empty()) {
        const VertexId v = *ready.begin();
        ready.erase(ready.begin());
        excluded.clear();
        for (const EdgeId e : inst.out_arcs(v)) {
            const ConflictPair c = inst.conflict(e);
            if (col[inst.arc(e).head] == c.at_head)
                excluded.set(c.at_tail);
        }
        Color pick = 0;
        while (pick < inst.k() && excluded.test(pick))
            ++pick;
        if (pick == inst.k())
            throw std::invalid_argument("greedy pass ran out of colors at vertex " +
                                        std::to_string(v));
        col[v] = pick;
        ++colored;
        for (const EdgeId e : in_arcs[v])
            if (--waiting[inst.arc(e).tail] == 0)
                ready.insert(inst.arc(e).tail);
    }
    if (colored != n)
        throw std::invalid_argument("orientation has a directed cycle; greedy pass needs an acyclic one");
    if (!verify(inst, col).empty())
        throw std::logic_error("greedy pass produced an invalid coloring");
    return col;
}

namespace {

SolverReport greedy_report(const ConflictInstance& inst) {
    SolverReport report;
    report.outcome = Outcome::solved;
    report.coloring = greedy_solve(inst);
    report.variant_used = Variant::greedy;
    return report;
}

bool orientation_is_acyclic(const ConflictInstance& inst) {
    const std::uint32_t n = inst.vertex_count();
    std::vector<std::uint32_t> waiting(n, 0);
    std::vector<std::vector<VertexId>> dependents(n);
    for (EdgeId e = 0; e < inst.arc_count(); ++e) {
        ++waiting[inst.arc(e).tail];
        dependents[inst.arc(e).head].push_back(inst.arc(e).tail);
    }
    std::vector<VertexId> stack;
    for (VertexId v = 0; v < n; ++v)
        if (waiting[v] == 0)
            stack.push_back(v);
    std::uint32_t seen = 0;
    while (!stack.empty()) {
        const VertexId v = stack.back();
        stack.pop_back();
        ++seen;
        for (const VertexId t : dependents[v])
            if (--waiting[t] == 0)
                stack.push_back(t);
    }
    return seen == n;
}

} // namespace

SolverReport moser_tardos_solve(const ConflictInstance& inst, const SolverConfig& config) {
    if (config.probability_override &&
        (!(*config.probability_override > 0.0) || *config.probability_override > 1.0))
        throw std::invalid_argument("probability override must lie in (0, 1]");
    if (config.max_rounds && *config.max_rounds == 0)
        throw std::invalid_argument("max_rounds must be positive");

    const std::uint32_t n = inst.vertex_count();
    if (n == 0) {
        SolverReport report;
        report.outcome = Outcome::solved;
        report.coloring = Coloring{};
        return report;
    }
    if (inst.k() == 0) {
        SolverReport report;
        report.outcome = Outcome::infeasible_detected;
        return report;
    }

    const std::uint32_t back_degree = inst.max_out_degree();
    if (back_degree == 0)
        return greedy_report(inst); // arcless

    Variant variant = config.variant;
    if (variant == Variant::automatic) {
        if (inst.k() >= back_degree + 1 && orientation_is_acyclic(inst))
            return greedy_report(inst);
        variant = is_uniquely_restrictive(inst).uniquely_restrictive ? Variant::unique
                                                                     : Variant::general;
    } else if (variant == Variant::greedy) {
        return greedy_report(inst);
    }

    SolverReport report;
    report.variant_used = variant;
    report.p_used = config.probability_override ? *config.probability_override
                                                : choose_probability(inst, variant);
    const std::uint64_t max_rounds = config.max_rounds ? *config.max_rounds
                                                       : std::uint64_t{1000} * n;

    Rng rng(config.seed);
    InventoryState state = sample_inventories(inst, report.p_used, rng);
    std::vector<VertexId> redraw;
    for (std::uint64_t round = 1; round <= max_rounds; ++round) {
        state = prune(inst, state);
        const auto bad = bad_vertices(state);
        report.rounds = round;
        report.bad_history.push_back(static_cast<std::uint32_t>(bad.size()));
        if (bad.empty()) {
            Coloring col(n);
            for (VertexId v = 0; v < n; ++v)
                col[v] = *state.pruned[v].lowest();
            if (!verify(inst, col).empty())
                throw std::logic_error("pruned inventories admitted an invalid coloring");
            report.outcome = Outcome::solved;
            report.coloring = std::move(col);
            return report;
        }
        // Redraw the smallest bad vertex and its out-neighbors: exactly the
        // inventories its bad event reads.
        const VertexId v = bad.front();
        redraw.clear();
        redraw.push_back(v);
        for (const EdgeId e : inst.out_arcs(v))
            redraw.push_back(inst.arc(e).head);
        std::sort(redraw.begin(), redraw.end());
        redraw.erase(std::unique(redraw.begin(), redraw.end()), redraw.end());
        for (const VertexId u : redraw)
            draw_inventory(state.inventory[u], inst.k(), report.p_used, rng);
        report.resampled_vertices += redraw.size();
    }
    report.outcome = Outcome::exhausted_rounds;
    return report;
}

} // namespace scc
