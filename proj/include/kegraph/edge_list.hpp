#pragma once

#include <iosfwd>
#include <string>
#include <string_view>

#include "kegraph/graph.hpp"

namespace kegraph {

/// Parses the edge-list text format:
///
///   # comment
///   n m
///   u v      (m lines, 0-based ids)
///
/// `#` starts a comment anywhere on a line. Duplicate pairs collapse.
/// Throws InputError on malformed text, self-loops, or out-of-range ids.
Graph parse_edge_list(std::string_view text);
Graph read_edge_list_file(const std::string& path);

/// Canonical serialization; an optional comment block is written first,
/// one `# ` prefixed line per input line.
std::string format_edge_list(const Graph& g, std::string_view comment = {});

}  // namespace kegraph
