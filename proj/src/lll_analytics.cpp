#include "scc/lll_solver.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <stdexcept>

namespace scc {

std::uint64_t min_colors_bound(BoundMode mode, std::uint32_t d, std::uint32_t delta,
                               std::uint32_t mu, std::uint32_t r) {
    if (d < 1 || delta < 1)
        throw std::invalid_argument("bound formulas need d >= 1 and delta >= 1");
    const double dd = d;
    const double dl = delta;
    double value = 0.0;
    switch (mode) {
    case BoundMode::max_degree:
        value = std::sqrt(std::numbers::e * (2.0 * dl - 1.0));
        break;
    case BoundMode::degenerate:
        value = 2.0 * std::sqrt(dd * (1.0 + std::log((dd + 1.0) * dl)));
        break;
    case BoundMode::multiplicity:
        if (mu < 1)
            throw std::invalid_argument("multiplicity mode needs mu >= 1");
        value = std::sqrt(dd) * std::exp2(mu / 2.0 + 2.0) * std::sqrt(double(mu)) *
                std::sqrt(1.0 + std::log((dd + 1.0) * dl));
        break;
    case BoundMode::restrictiveness:
        if (r < 1)
            throw std::invalid_argument("restrictiveness mode needs r >= 1");
        value = std::sqrt(dd) * std::exp2(r / 2.0 + 2.0) * std::sqrt(double(r)) *
                std::sqrt(1.0 + std::log((dd + 1.0) * dl));
        break;
    case BoundMode::cooperative:
        value = 13.0 * (1.0 + dd * std::log(dd * dl));
        break;
    }
    return static_cast<std::uint64_t>(std::ceil(value));
}

std::optional<BoundMode> bound_mode_from_string(std::string_view name) {
    if (name == "max-degree")
        return BoundMode::max_degree;
    if (name == "degenerate" || name == "simple-degenerate")
        return BoundMode::degenerate;
    if (name == "multiplicity")
        return BoundMode::multiplicity;
    if (name == "restrictiveness")
        return BoundMode::restrictiveness;
    if (name == "cooperative")
        return BoundMode::cooperative;
    return std::nullopt;
}

BCounts b_counts(const ConflictInstance& inst, VertexId v) {
    BCounts result;
    result.per_color.assign(inst.k(), 0);
    // Tail-color multiset per (out-neighbor, head color) group.
    std::map<std::pair<VertexId, Color>, std::map<Color, std::uint64_t>> groups;
    for (const EdgeId e : inst.out_arcs(v)) {
        const ConflictPair c = inst.conflict(e);
        ++result.per_color[c.at_tail];
        ++groups[{inst.arc(e).head, c.at_head}][c.at_tail];
    }
    // Every subset of a group's distinct tail colors is realized by one arc
    // choice per color; multiplicities multiply on unnormalized input.
    for (const auto& [key, tails] : groups) {
        std::vector<std::pair<Color, std::uint64_t>> items(tails.begin(), tails.end());
        const std::size_t size = items.size();
        for (std::uint64_t pick = 1; pick < (std::uint64_t{1} << size); ++pick) {
            std::vector<Color> subset;
            std::uint64_t ways = 1;
            for (std::size_t i = 0; i < size; ++i) {
                if ((pick >> i) & 1) {
                    subset.push_back(items[i].first);
                    ways *= items[i].second;
                }
            }
            result.per_set[subset] += ways;
        }
    }
    return result;
}

ClaimCheck claim_check(const ConflictInstance& inst, VertexId v,
                       std::span<const std::uint32_t> partition) {
    const std::uint32_t k = inst.k();
    const std::uint32_t r = restrictiveness(inst).r;
    std::uint32_t total = 0;
    for (const auto q : partition) {
        if (q < 1 || q > r)
            throw std::invalid_argument("part sizes must lie in 1..r");
        total += q;
    }
    if (partition.empty() || total > k)
        throw std::invalid_argument("part sizes must be nonempty and sum to at most k");
    const std::size_t z = partition.size();

    const BCounts counts = b_counts(inst, v);

    // Support of b restricted to each part size.
    std::vector<std::vector<std::pair<std::vector<Color>, std::uint64_t>>> by_size(z);
    double tuple_estimate = 1.0;
    for (std::size_t i = 0; i < z; ++i) {
        for (const auto& [set, count] : counts.per_set)
            if (set.size() == partition[i])
                by_size[i].push_back({set, count});
        tuple_estimate *= std::max<std::size_t>(1, by_size[i].size());
    }
    if (tuple_estimate > 1e7)
        throw ResourceError("claim enumeration exceeds the tuple budget");
    if (z * static_cast<std::uint64_t>(r) >= 63)
        throw ResourceError("claim bound 2^{zr} exceeds 64-bit range");

    ClaimCheck result;

    // lhs: disjoint tuples ordered by their minima (lexicographic order of
    // disjoint increasing sequences is decided by the first entries).
    ColorMask used(k);
    Color last_min = 0;
    bool have_last = false;
    std::uint64_t lhs = 0;
    auto recurse = [&](auto&& self, std::size_t i, std::uint64_t product) -> void {
        if (i == z) {
            lhs += product;
            return;
        }
        for (const auto& [set, count] : by_size[i]) {
            if (have_last && set.front() <= last_min)
                continue;
            bool disjoint = true;
            for (const Color c : set)
                if (used.test(c)) {
                    disjoint = false;
                    break;
                }
            if (!disjoint)
                continue;
            for (const Color c : set)
                used.set(c);
            const Color saved_min = last_min;
            const bool saved_have = have_last;
            last_min = set.front();
            have_last = true;
            self(self, i + 1, product * count);
            for (const Color c : set)
                used.reset(c);
            last_min = saved_min;
            have_last = saved_have;
        }
    };
    recurse(recurse, 0, 1);
    result.lhs = lhs;

    // rhs: elementary symmetric polynomial of the singleton counts.
    std::vector<std::uint64_t> sym(z + 1, 0);
    sym[0] = 1;
    for (Color c = 0; c < k; ++c) {
        const std::uint64_t b = counts.per_color[c];
        if (b == 0)
            continue;
        for (std::size_t j = std::min(z, static_cast<std::size_t>(c) + 1); j >= 1; --j)
            sym[j] += sym[j - 1] * b;
    }
    result.rhs = (std::uint64_t{1} << (z * r)) * sym[z];
    result.holds = result.lhs <= result.rhs;
    return result;
}

BadProbabilityEstimate estimate_bad_probability(const ConflictInstance& inst, VertexId v, double p,
                                                std::uint64_t samples, std::uint64_t seed) {
    if (samples < 1)
        throw std::invalid_argument("need at least one sample");
    if (p < 0.0 || p > 1.0)
        throw std::invalid_argument("inclusion probability must lie in [0, 1]");

    std::vector<VertexId> involved{v};
    for (const EdgeId e : inst.out_arcs(v))
        involved.push_back(inst.arc(e).head);
    std::sort(involved.begin(), involved.end());
    involved.erase(std::unique(involved.begin(), involved.end()), involved.end());

    std::map<VertexId, ColorMask> masks;
    for (const VertexId u : involved)
        masks.emplace(u, ColorMask(inst.k()));

    Rng rng(seed);
    std::uint64_t hits = 0;
    ColorMask pruned_v(inst.k());
    for (std::uint64_t s = 0; s < samples; ++s) {
        for (const VertexId u : involved) {
            ColorMask& mask = masks.at(u);
            mask.clear();
            for (Color c = 0; c < inst.k(); ++c)
                if (rng.bernoulli(p))
                    mask.set(c);
        }
        pruned_v = masks.at(v);
        for (const EdgeId e : inst.out_arcs(v)) {
            const ConflictPair c = inst.conflict(e);
            if (masks.at(v).test(c.at_tail) && masks.at(inst.arc(e).head).test(c.at_head))
                pruned_v.reset(c.at_tail);
        }
        if (pruned_v.empty())
            ++hits;
    }
    BadProbabilityEstimate est;
    est.estimate = static_cast<double>(hits) / static_cast<double>(samples);
    est.std_error = std::sqrt(est.estimate * (1.0 - est.estimate) / static_cast<double>(samples));
    return est;
}

} // namespace scc
