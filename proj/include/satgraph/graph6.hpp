#pragma once

#include <string>
#include <string_view>

#include "satgraph/subgraph.hpp"

namespace satgraph {

// Standard graph6 line: header byte(s) carrying the vertex count, then the
// upper-triangle adjacency bits in column-major pair order ((i, j), i < j,
// ordered by j then i), packed big-endian into 6-bit groups, each group
// printed as group + 63.  Trailing pad bits are zero.
std::string encode_graph6(const Subgraph& g);

// Inverse of encode_graph6, validated against a host: every decoded edge
// must be a legal host edge (distinct parts), or MultipartiteViolationError.
// A vertex count smaller than the host's embeds into the lowest flat ids; a
// larger one is an IndexDomainError.  Malformed bytes raise ParseError with
// the offending byte offset.  Trailing ASCII whitespace is ignored.
Subgraph decode_graph6(std::string_view text, const Host& host);

}  // namespace satgraph
