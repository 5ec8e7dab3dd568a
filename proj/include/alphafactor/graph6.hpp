#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "alphafactor/graph.hpp"

namespace alphafactor {

inline constexpr int kGraph6MaxOrder = 62;

/// Decodes one graph6 record (no trailing newline). Throws ParseError naming the byte offset.
Graph parse_graph6(std::string_view text);

/// Canonical graph6 bytes; throws SizeError above kGraph6MaxOrder vertices.
std::string write_graph6(const Graph& g);

/// One line of a graph6 file. Exactly one of `graph` / `error` is set.
struct Graph6Record {
  std::size_t line = 0;  // 1-based
  std::string text;
  std::optional<Graph> graph;
  std::string error;
};

/**
 * Reads a graph6 file: one graph per LF-terminated line, blank lines ignored,
 * an optional ">>graph6<<" header skipped. Malformed lines are returned with
 * `error` set so callers can report them and continue.
 */
std::vector<Graph6Record> read_graph6(std::istream& in);

}  // namespace alphafactor
