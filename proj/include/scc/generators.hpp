#pragma once

#include "scc/conflict.hpp"
#include "scc/reductions.hpp"
#include "scc/rng.hpp"

namespace scc {

// Random simple graph of degeneracy <= d: vertex j picks min(j, d) distinct
// earlier neighbors uniformly. For n > d every vertex has degree >= d, so the
// degeneracy is exactly d.
MultiGraph gen_degenerate(std::uint32_t n, std::uint32_t d, std::uint64_t seed);

// Random conflicts over k colors on the given multigraph, one uniform pair per
// arc. With mu >= 2 each input edge is first duplicated to a uniform
// multiplicity in 1..mu and the copies get pairwise distinct pairs (rejection
// sampled), so the result survives normalization with that multiplicity.
ConflictInstance gen_conflicts(const MultiGraph& g, std::uint32_t k, std::uint32_t mu,
                               std::uint64_t seed);

// Family of random forests on a shared vertex set, each of maximum degree
// <= max_degree: every vertex after the first (in a random order) attaches to
// an earlier vertex that still has spare degree, when one exists.
GraphFamily gen_forest_family(std::uint32_t count, std::uint32_t n, std::uint32_t max_degree,
                              std::uint64_t seed);

} // namespace scc
