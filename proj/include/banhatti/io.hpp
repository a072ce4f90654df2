#ifndef BANHATTI_IO_HPP
#define BANHATTI_IO_HPP

#include <string>
#include <string_view>
#include <vector>

#include "banhatti/graph.hpp"

namespace banhatti {

/// Decodes one graph6 line. An optional ">>graph6<<" header and a trailing
/// newline are accepted. Orders up to 258047 (the 4-byte size form) are
/// supported. Errors carry the byte offset of the offending character.
Graph parse_graph6(std::string_view line);

/// Encodes with the shortest size form; no header, no newline.
std::string to_graph6(const Graph& g);

/// Parses "u v" lines of 0-based labels; '#' starts a comment. The order is
/// one more than the largest label seen. Errors carry the 1-based line.
Graph parse_edge_list(std::string_view text);

/// Splits a multi-graph graph6 file into graphs, skipping blank lines.
/// On error the ParseError position is the byte offset within its line and
/// `line_number` (1-based) identifies the line.
struct Graph6Line {
  std::size_t line_number = 0;
  std::string text;
};
std::vector<Graph6Line> split_graph6_lines(std::string_view content);

}  // namespace banhatti

#endif  // BANHATTI_IO_HPP
