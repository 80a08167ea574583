#pragma once

#include "scc/conflict.hpp"
#include "scc/rng.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string_view>
#include <vector>

namespace scc {

// Fixed-capacity color set, one bit per color.
class ColorMask {
public:
    ColorMask() = default;
    explicit ColorMask(std::uint32_t bits) : bits_(bits), words_((bits + 63) / 64, 0) {}

    void set(std::uint32_t i) { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
    void reset(std::uint32_t i) { words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
    bool test(std::uint32_t i) const { return (words_[i >> 6] >> (i & 63)) & 1; }
    void clear() { std::fill(words_.begin(), words_.end(), 0); }

    bool empty() const;
    std::uint32_t count() const;
    std::optional<Color> lowest() const;
    bool subset_of(const ColorMask& other) const;

    std::uint32_t capacity() const { return bits_; }
    bool operator==(const ColorMask&) const = default;

private:
    std::uint32_t bits_ = 0;
    std::vector<std::uint64_t> words_;
};

// Per-vertex random color inventories and their pruned copies. Pruning only
// ever deletes from `pruned`; `inventory` stays the raw draw.
struct InventoryState {
    std::vector<ColorMask> inventory;
    std::vector<ColorMask> pruned;
};

enum class Variant { automatic, greedy, unique, general };

struct SolverConfig {
    Variant variant = Variant::automatic;
    std::optional<double> probability_override; // must lie in (0, 1]
    std::optional<std::uint64_t> max_rounds;    // default 1000 * n
    std::uint64_t seed = 0;
};

enum class Outcome { solved, exhausted_rounds, infeasible_detected };

struct SolverReport {
    Outcome outcome = Outcome::exhausted_rounds;
    std::optional<Coloring> coloring;
    std::uint64_t rounds = 0;
    std::uint64_t resampled_vertices = 0;
    double p_used = 0.0;
    Variant variant_used = Variant::greedy;
    std::vector<std::uint32_t> bad_history; // bad-vertex count per round
};

const char* to_string(Outcome o);
const char* to_string(Variant v);

// Inclusion probability for the inventory draw. unique: k/(2d) clamped to 1;
// general: k/(2^{r+3} r d) clamped to 1/4, with r the instance's
// restrictiveness. d is the orientation's maximum out-degree and must be
// >= 1 (arcless instances never reach the randomized path).
double choose_probability(const ConflictInstance& inst, Variant variant);

// Independent Bernoulli(p) draw per (vertex, color), consumed vertex-ascending
// then color-ascending; pruned starts equal to the inventory.
InventoryState sample_inventories(const ConflictInstance& inst, double p, Rng& rng);

// For every out-arc (v, w) with conflict (c, c'): if c is in v's inventory and
// c' in w's inventory, c is deleted from v's pruned copy. Only raw inventories
// are read, so re-running on the same draw gives the same pruned state.
InventoryState prune(const ConflictInstance& inst, InventoryState state);

// Vertices whose pruned inventory is empty, ascending.
std::vector<VertexId> bad_vertices(const InventoryState& state);

// Randomized solve: sample inventories, prune, and while some vertex has an
// empty pruned inventory redraw the smallest such vertex together with its
// out-neighbors (the variables its bad event depends on). Once every pruned
// inventory is nonempty, picking any member per vertex is a valid coloring;
// the smallest color is used. Variant `automatic` routes instances with
// k >= max out-degree + 1 to the greedy pass, uniquely restrictive instances
// to `unique`, and everything else to `general`.
SolverReport moser_tardos_solve(const ConflictInstance& inst, const SolverConfig& config);

// Colors vertices with every out-neighbor already colored (possible for any
// acyclic orientation; degeneracy orientations always are), excluding the tail
// color of each out-arc whose head color landed on the neighbor. Guaranteed
// whenever k >= max out-degree + 1, since at most out-degree colors are ever
// excluded; otherwise best effort, throwing std::invalid_argument when no
// color survives at some vertex.
Coloring greedy_solve(const ConflictInstance& inst);

enum class BoundMode { max_degree, degenerate, multiplicity, restrictiveness, cooperative };

// Number of colors that always suffices, by mode:
//   max_degree:      ceil(sqrt(e (2 delta - 1)))
//   degenerate:      ceil(2 sqrt(d (1 + ln((d+1) delta))))        (simple graphs)
//   multiplicity:    ceil(sqrt(d) 2^{mu/2+2} sqrt(mu) sqrt(1 + ln((d+1) delta)))
//   restrictiveness: same formula with r in place of mu
//   cooperative:     ceil(13 (1 + d ln(d delta)))                  (family size)
// Logarithms are natural.
std::uint64_t min_colors_bound(BoundMode mode, std::uint32_t d, std::uint32_t delta,
                               std::uint32_t mu = 0, std::uint32_t r = 0);

std::optional<BoundMode> bound_mode_from_string(std::string_view name);

struct BCounts {
    // per_color[c]: out-arcs of v whose tail-side color is c.
    std::vector<std::uint64_t> per_color;
    // per_set[{c_1..c_t}]: tuples of parallel out-arcs to one neighbor whose
    // conflicts share a single head color and whose tail colors are exactly
    // the key. Singleton keys agree with per_color.
    std::map<std::vector<Color>, std::uint64_t> per_set;
};

// Exhaustive enumeration over (out-neighbor, head color) groups; meant for
// diagnostic instances with small out-degrees.
BCounts b_counts(const ConflictInstance& inst, VertexId v);

struct ClaimCheck {
    std::uint64_t lhs = 0; // sum over disjoint lexicographic set tuples of the b(C_i) products
    std::uint64_t rhs = 0; // 2^{z r} * sigma_z
    bool holds = true;
};

struct ResourceError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Checks that the tuple sum for one part-size composition is dominated by
// 2^{z r} sigma_z at v. Parts must be >= 1, at most r, and sum to <= k.
// Throws ResourceError when the enumeration would exceed ~10^7 tuples.
ClaimCheck claim_check(const ConflictInstance& inst, VertexId v,
                       std::span<const std::uint32_t> partition);

struct BadProbabilityEstimate {
    double estimate = 0.0;
    double std_error = 0.0;
};

// Monte Carlo frequency of "v's pruned inventory is empty" over fresh draws of
// v and its out-neighbors.
BadProbabilityEstimate estimate_bad_probability(const ConflictInstance& inst, VertexId v, double p,
                                                std::uint64_t samples, std::uint64_t seed);

} // namespace scc
