#pragma once

#include "scc/conflict.hpp"

#include <stdexcept>
#include <string>
#include <string_view>

namespace scc {

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Instance text as written, before any re-orientation or deduplication. The
// arc directions in the file are a hint only.
struct RawInstance {
    MultiGraph graph;
    std::uint32_t k = 0;
    std::vector<ArcSpec> arcs;
};

// Instance file format, line oriented:
//   # comment                 (anywhere; blank lines ignored)
//   scc 1
//   colors <k>
//   vertices <n>
//   arc <u> <v> <c_u> <c_v>   (0-indexed; repeated lines are parallel arcs)
// Malformed input fails with a message carrying the line number.
RawInstance parse_raw_instance(std::string_view text);

// Parses, re-anchors to the degeneracy orientation (rewriting flipped
// conflicts as their reversals), and normalizes.
ConflictInstance parse_instance(std::string_view text);

// Canonical serialization: header, then arcs sorted by
// (tail, head, tail color, head color). parse_instance round-trips it.
std::string emit_instance(const ConflictInstance& inst);

// Coloring file: one `v <vertex> <color>` line per vertex, any order, each
// vertex exactly once.
Coloring parse_coloring(std::string_view text, std::uint32_t vertex_count);

std::string emit_coloring(const Coloring& col);

std::string read_file(const std::string& path);
void write_file(const std::string& path, std::string_view content);

} // namespace scc
