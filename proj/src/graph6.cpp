#include <algorithm>
#include <cctype>
#include <charconv>
#include <sstream>

#include "spectrachrome/errors.hpp"
#include "spectrachrome/graph.hpp"

namespace spectrachrome {

namespace {

constexpr int kBias = 63;
constexpr int kLongFormMarker = 126;

bool printable(unsigned char c) { return c >= kBias && c <= 126; }

}  // namespace

Graph parse_graph6(std::string_view text) {
  if (text.empty()) throw ParseError("empty graph6 string", 0);
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (!printable(static_cast<unsigned char>(text[i]))) {
      throw ParseError("byte " + std::to_string(static_cast<unsigned char>(text[i])) +
                           " outside graph6 range 63..126",
                       i);
    }
  }

  std::size_t n = 0;
  std::size_t pos = 0;
  if (static_cast<unsigned char>(text[0]) != kLongFormMarker) {
    n = static_cast<std::size_t>(text[0] - kBias);
    pos = 1;
  } else {
    if (text.size() >= 2 && static_cast<unsigned char>(text[1]) == kLongFormMarker) {
      throw ParseError("8-byte vertex count form exceeds supported order", 1);
    }
    if (text.size() < 4) throw ParseError("truncated vertex count", text.size());
    for (std::size_t i = 1; i < 4; ++i) n = (n << 6) | static_cast<std::size_t>(text[i] - kBias);
    pos = 4;
  }
  if (n == 0) throw ParseError("graph6 encodes the null graph, which is unsupported", 0);
  if (n > kMaxVertices) {
    throw ParseError("order " + std::to_string(n) + " exceeds " + std::to_string(kMaxVertices), 0);
  }

  const std::size_t bits = n * (n - 1) / 2;
  const std::size_t expected = pos + (bits + 5) / 6;
  if (text.size() < expected) throw ParseError("truncated adjacency bit stream", text.size());
  if (text.size() > expected) throw ParseError("trailing bytes after adjacency bit stream", expected);

  std::vector<Edge> edges;
  std::size_t k = 0;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i, ++k) {
      const int byte = text[pos + k / 6] - kBias;
      if ((byte >> (5 - static_cast<int>(k % 6))) & 1) edges.emplace_back(i, j);
    }
  }
  return Graph::from_edges(n, edges);
}

std::string encode_graph6(const Graph& g) {
  const std::size_t n = g.order();
  std::string out;
  if (n < 63) {
    out.push_back(static_cast<char>(n + kBias));
  } else {
    out.push_back(static_cast<char>(kLongFormMarker));
    out.push_back(static_cast<char>(((n >> 12) & 63) + kBias));
    out.push_back(static_cast<char>(((n >> 6) & 63) + kBias));
    out.push_back(static_cast<char>((n & 63) + kBias));
  }
  int acc = 0;
  int filled = 0;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(acc + kBias));
        acc = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>((acc << (6 - filled)) + kBias));
  return out;
}

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

bool looks_like_edge_line(std::string_view line) {
  line = trim(line);
  if (line.empty() || line.front() == '#') return false;
  return std::any_of(line.begin(), line.end(), [](char c) { return c == ' ' || c == '\t'; });
}

}  // namespace

Graph parse_edge_list(std::string_view text) {
  std::vector<Edge> edges;
  std::size_t declared_n = 0;
  std::size_t max_id = 0;
  bool any = false;
  std::size_t offset = 0;
  while (offset <= text.size()) {
    const std::size_t eol = std::min(text.find('\n', offset), text.size());
    std::string_view line = text.substr(offset, eol - offset);
    const std::size_t line_start = offset;
    offset = eol + 1;

    const std::string_view body = trim(line);
    if (body.empty()) continue;
    if (body.front() == '#') {
      std::istringstream header{std::string(body.substr(1))};
      std::string key;
      std::size_t value = 0;
      if (header >> key >> value && key == "n") declared_n = value;
      continue;
    }
    const std::string_view content = trim(body.substr(0, body.find('#')));
    std::size_t uv[2] = {0, 0};
    const char* p = content.data();
    const char* end = content.data() + content.size();
    for (int t = 0; t < 2; ++t) {
      while (p < end && (*p == ' ' || *p == '\t')) ++p;
      auto [next, ec] = std::from_chars(p, end, uv[t]);
      if (ec != std::errc{}) {
        throw ParseError("expected vertex id in edge list",
                         line_start + static_cast<std::size_t>(p - line.data()));
      }
      p = next;
    }
    while (p < end && (*p == ' ' || *p == '\t')) ++p;
    if (p != end) {
      throw ParseError("unexpected trailing token in edge list",
                       line_start + static_cast<std::size_t>(p - line.data()));
    }
    edges.emplace_back(uv[0], uv[1]);
    max_id = std::max({max_id, uv[0], uv[1]});
    any = true;
  }
  std::size_t n = declared_n;
  if (n == 0) {
    if (!any) throw ParseError("edge list contains no edges and no '# n' header", 0);
    n = max_id + 1;
  }
  if (any && max_id >= n) throw ParseError("vertex id exceeds declared order", 0);
  if (n > kMaxVertices) throw ParseError("order exceeds " + std::to_string(kMaxVertices), 0);
  return Graph::from_edges(n, edges);
}

Graph parse_graph_text(std::string_view text) {
  std::size_t offset = 0;
  bool edge_style = false;
  std::string_view first;
  while (offset <= text.size()) {
    const std::size_t eol = std::min(text.find('\n', offset), text.size());
    const std::string_view line = text.substr(offset, eol - offset);
    offset = eol + 1;
    const std::string_view body = trim(line);
    if (body.empty()) continue;
    if (body.front() == '#') {
      edge_style = true;
      continue;
    }
    if (first.empty()) first = body;
    if (looks_like_edge_line(line)) edge_style = true;
  }
  if (edge_style) return parse_edge_list(text);
  if (first.empty()) throw ParseError("empty graph input", 0);
  return parse_graph6(first);
}

}  // namespace spectrachrome
