#include "scc/generators.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

namespace scc {

namespace {

// min(j, want) distinct values below j, in draw order.
std::vector<VertexId> sample_earlier(std::uint32_t j, std::uint32_t want, Rng& rng) {
    const std::uint32_t take = std::min(j, want);
    std::vector<VertexId> picked;
    picked.reserve(take);
    if (take == j) {
        for (VertexId v = 0; v < j; ++v)
            picked.push_back(v);
        return picked;
    }
    std::set<VertexId> seen;
    while (picked.size() < take) {
        const auto v = static_cast<VertexId>(rng.below(j));
        if (seen.insert(v).second)
            picked.push_back(v);
    }
    return picked;
}

} // namespace

MultiGraph gen_degenerate(std::uint32_t n, std::uint32_t d, std::uint64_t seed) {
    if (n < 1)
        throw std::invalid_argument("gen_degenerate needs at least one vertex");
    Rng rng(seed);
    std::vector<EdgeRecord> edges;
    for (std::uint32_t j = 1; j < n; ++j)
        for (const VertexId i : sample_earlier(j, d, rng))
            edges.push_back({i, j});
    return MultiGraph(n, std::move(edges));
}

ConflictInstance gen_conflicts(const MultiGraph& g, std::uint32_t k, std::uint32_t mu,
                               std::uint64_t seed) {
    if (k == 0)
        throw std::invalid_argument("gen_conflicts needs at least one color");
    Rng rng(seed);
    const std::uint64_t pairs = std::uint64_t{k} * k;
    std::vector<ArcSpec> arcs;
    auto draw_pair = [&] {
        const std::uint64_t raw = rng.below(pairs);
        return ConflictPair{static_cast<Color>(raw / k), static_cast<Color>(raw % k)};
    };
    for (const auto& e : g.edges()) {
        if (mu <= 1) {
            const auto c = draw_pair();
            arcs.push_back({e.u, e.v, c.at_tail, c.at_head});
            continue;
        }
        const auto copies = static_cast<std::uint32_t>(
            1 + rng.below(std::min<std::uint64_t>(mu, pairs)));
        std::set<ConflictPair> chosen;
        while (chosen.size() < copies)
            chosen.insert(draw_pair());
        for (const auto& c : chosen)
            arcs.push_back({e.u, e.v, c.at_tail, c.at_head});
    }
    return make_normalized_instance(g.vertex_count(), k, arcs);
}

GraphFamily gen_forest_family(std::uint32_t count, std::uint32_t n, std::uint32_t max_degree,
                              std::uint64_t seed) {
    if (count < 1 || n < 1)
        throw std::invalid_argument("gen_forest_family needs a member and a vertex");
    Rng rng(seed);
    GraphFamily fam;
    fam.vertex_count = n;
    for (std::uint32_t member = 0; member < count; ++member) {
        std::vector<VertexId> order(n);
        std::iota(order.begin(), order.end(), 0);
        for (std::uint32_t i = n; i-- > 1;)
            std::swap(order[i], order[rng.below(i + 1)]);
        std::vector<std::uint32_t> deg(n, 0);
        std::vector<EdgeRecord> edges;
        for (std::uint32_t i = 1; i < n && max_degree > 0; ++i) {
            std::vector<VertexId> capped;
            for (std::uint32_t j = 0; j < i; ++j)
                if (deg[order[j]] < max_degree)
                    capped.push_back(order[j]);
            if (capped.empty())
                continue;
            const VertexId parent = capped[rng.below(capped.size())];
            edges.push_back({parent, order[i]});
            ++deg[parent];
            ++deg[order[i]];
        }
        fam.members.emplace_back(n, std::move(edges));
    }
    return fam;
}

} // namespace scc
