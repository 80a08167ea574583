#pragma once

#include "scc/conflict.hpp"
#include "scc/lll_solver.hpp"

#include <optional>

namespace scc {

// Complete backtracking search in degeneracy order with forward checking of
// the exclusions induced by already-colored neighbors. Returns a valid
// coloring iff one exists. Exponential worst case; meant for desk scale.
std::optional<Coloring> backtracking_solve(const ConflictInstance& inst);

// Exact chromatic number of the underlying simple graph, by incremental k and
// direct proper-coloring backtracking (independent of the conflict machinery).
std::uint32_t chromatic_number(const MultiGraph& g);

// Smallest k <= k_max such that every conflict function over k colors admits a
// coloring, by enumeration over conflict functions (one representative per
// global-recoloring orbit of the first arc). Throws ResourceError when the
// enumeration for some required k would exceed ~10^7 assignments.
std::optional<std::uint32_t> adversarial_chi_con(const MultiGraph& g, std::uint32_t k_max);

} // namespace scc
