#pragma once

#include <string>
#include <string_view>

#include "genergy/graph.hpp"

namespace genergy {

// Decodes one graph6-encoded graph.  A leading ">>graph6<<" tag is
// tolerated and stripped.  Orders up to 2^18 - 1 are supported (1-byte
// and 3-byte headers); the 8-byte '~~' header is rejected, as are
// non-canonical headers, out-of-range bytes, truncated or trailing data,
// and nonzero padding bits.  All rejections throw ParseError carrying
// the byte offset.
Graph parse_graph6(std::string_view line);

// Canonical graph6 encoding (minimal header, zero padding); parsing the
// result reproduces the graph, and encoding a parsed line reproduces the
// line byte for byte.
std::string write_graph6(const Graph& g);

}  // namespace genergy
