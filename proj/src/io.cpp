#include "banhatti/io.hpp"

#include <charconv>
#include <cstdint>
#include <stdexcept>

namespace banhatti {

namespace {

constexpr std::string_view kGraph6Header = ">>graph6<<";
constexpr int kBias = 63;

ParseError byte_error(std::size_t offset, const std::string& what) {
  return ParseError(ParseError::Where::ByteOffset, offset,
                    "graph6: " + what + " at byte " + std::to_string(offset));
}

int sextet(std::string_view line, std::size_t offset) {
  if (offset >= line.size()) throw byte_error(offset, "truncated input");
  auto c = static_cast<unsigned char>(line[offset]);
  if (c < 63 || c > 126) throw byte_error(offset, "byte " + std::to_string(c) + " outside 63..126");
  return c - kBias;
}

}  // namespace

Graph parse_graph6(std::string_view line) {
  while (!line.empty() && (line.back() == '\n' || line.back() == '\r')) line.remove_suffix(1);

  std::size_t pos = 0;
  if (line.starts_with(kGraph6Header)) pos = kGraph6Header.size();
  if (pos < line.size() && line[pos] == ':') throw byte_error(pos, "sparse6 input is not supported");
  if (pos < line.size() && line[pos] == '&') throw byte_error(pos, "digraph6 input is not supported");

  // Size field: N(n) is one byte for n <= 62, else 126 followed by 3 bytes.
  std::size_t n = 0;
  const std::size_t size_start = pos;
  int first = sextet(line, pos++);
  if (first < 63) {
    n = static_cast<std::size_t>(first);
  } else {
    if (pos < line.size() && static_cast<unsigned char>(line[pos]) == 126) {
      throw byte_error(pos, "orders above 258047 are not supported");
    }
    for (int k = 0; k < 3; ++k) n = (n << 6) | static_cast<std::size_t>(sextet(line, pos++));
  }
  if (n == 0) throw byte_error(size_start, "empty graph (order 0) is not supported");

  for (std::size_t b = pos; b < line.size(); ++b) sextet(line, b);

  const std::size_t bits = n * (n - 1) / 2;
  const std::size_t body = (bits + 5) / 6;
  if (line.size() - pos < body) throw byte_error(line.size(), "truncated bit vector");
  if (line.size() - pos > body) throw byte_error(pos + body, "trailing data after bit vector");

  std::vector<Edge> edges;
  std::size_t k = 0;
  for (Vertex v = 1; v < n; ++v) {
    for (Vertex u = 0; u < v; ++u, ++k) {
      int chunk = sextet(line, pos + k / 6);
      if ((chunk >> (5 - k % 6)) & 1) edges.emplace_back(u, v);
    }
  }
  if (bits % 6 != 0) {
    int last = sextet(line, pos + body - 1);
    if (last & ((1 << (6 - bits % 6)) - 1)) throw byte_error(pos + body - 1, "non-zero padding bits");
  }
  return Graph(n, edges);
}

std::string to_graph6(const Graph& g) {
  const std::size_t n = g.order();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + kBias));
  } else if (n <= 258047) {
    out.push_back(static_cast<char>(126));
    for (int shift = 12; shift >= 0; shift -= 6) out.push_back(static_cast<char>(((n >> shift) & 63) + kBias));
  } else {
    throw std::invalid_argument("graph6 encoding supports orders up to 258047");
  }
  int chunk = 0, filled = 0;
  for (Vertex v = 1; v < n; ++v) {
    for (Vertex u = 0; u < v; ++u) {
      chunk = (chunk << 1) | (g.has_edge(u, v) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(chunk + kBias));
        chunk = filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>((chunk << (6 - filled)) + kBias));
  return out;
}

namespace {

ParseError line_error(std::size_t line, const std::string& what) {
  return ParseError(ParseError::Where::Line, line, "edge list line " + std::to_string(line) + ": " + what);
}

bool is_space(char c) { return c == ' ' || c == '\t' || c == '\r' || c == ','; }

}  // namespace

Graph parse_edge_list(std::string_view text) {
  std::vector<Edge> edges;
  Vertex max_label = 0;
  bool any = false;
  std::size_t line_no = 0;

  while (!text.empty()) {
    ++line_no;
    auto eol = text.find('\n');
    std::string_view line = text.substr(0, eol);
    text = eol == std::string_view::npos ? std::string_view{} : text.substr(eol + 1);
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);

    std::vector<Vertex> labels;
    std::size_t i = 0;
    while (i < line.size()) {
      while (i < line.size() && is_space(line[i])) ++i;
      if (i == line.size()) break;
      std::size_t j = i;
      while (j < line.size() && !is_space(line[j])) ++j;
      std::string_view token = line.substr(i, j - i);
      if (token.front() == '-') throw line_error(line_no, "negative label '" + std::string(token) + "'");
      std::uint64_t value = 0;
      auto [end, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
      if (ec != std::errc{} || end != token.data() + token.size() || value > UINT32_MAX - 1) {
        throw line_error(line_no, "expected a non-negative integer, got '" + std::string(token) + "'");
      }
      labels.push_back(static_cast<Vertex>(value));
      i = j;
    }
    if (labels.empty()) continue;
    if (labels.size() != 2) throw line_error(line_no, "expected exactly two labels per edge");
    if (labels[0] == labels[1]) throw line_error(line_no, "self-loop at vertex " + std::to_string(labels[0]));
    edges.emplace_back(labels[0], labels[1]);
    max_label = std::max({max_label, labels[0], labels[1]});
    any = true;
  }
  if (!any) throw line_error(line_no, "no edges");
  return Graph(static_cast<std::size_t>(max_label) + 1, edges);
}

std::vector<Graph6Line> split_graph6_lines(std::string_view content) {
  std::vector<Graph6Line> out;
  std::size_t line_no = 0;
  while (!content.empty()) {
    ++line_no;
    auto eol = content.find('\n');
    std::string_view line = content.substr(0, eol);
    content = eol == std::string_view::npos ? std::string_view{} : content.substr(eol + 1);
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ' || line.back() == '\t')) line.remove_suffix(1);
    if (line.empty()) continue;
    out.push_back({line_no, std::string(line)});
  }
  return out;
}

}  // namespace banhatti
