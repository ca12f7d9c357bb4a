#pragma once

#include <istream>
#include <string>
#include <string_view>
#include <vector>

#include "ic/graph.hpp"

namespace ic {

/// Encode as graph6: 63-offset printable bytes, upper triangle packed column
/// by column, big-endian within each 6-bit group.
std::string to_graph6(const Graph& g);

/// Decode one graph6 code (an optional ">>graph6<<" header is skipped).
/// Throws ParseError carrying the offset of the first offending byte.
Graph parse_graph6(std::string_view text);

/// One code per line; blank lines are skipped.
std::vector<Graph> read_graph6_stream(std::istream& in);

}  // namespace ic
