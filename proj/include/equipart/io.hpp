#pragma once

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "equipart/graph.hpp"
#include "equipart/vertex_set.hpp"

namespace equipart {

inline constexpr std::size_t graph6_max_vertices = 62;

namespace detail {

inline std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

inline std::size_t parse_index(std::string_view tok, std::size_t line, const char* what) {
  if (tok.empty() || !std::all_of(tok.begin(), tok.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
    throw parse_error(std::string("expected ") + what + ", got '" + std::string(tok) + "'", line);
  if (tok.size() > 9) throw parse_error(std::string(what) + " too large: '" + std::string(tok) + "'", line);
  return static_cast<std::size_t>(std::stoul(std::string(tok)));
}

inline std::vector<std::string_view> split_ws(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    const auto start = i;
    while (i < s.size() && !std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    if (i > start) out.push_back(s.substr(start, i - start));
  }
  return out;
}

}  // namespace detail

// Short graph6 form only (n <= 62). Upper-triangle bits in column order
// x(0,1), x(0,2), x(1,2), x(0,3), ... packed six to a byte, each byte + 63.
inline Graph parse_graph6(std::string_view text) {
  text = detail::trim(text);
  if (text.starts_with(">>graph6<<")) text.remove_prefix(10);
  if (text.empty()) throw parse_error("graph6: empty input");
  for (char ch : text) {
    const auto b = static_cast<unsigned char>(ch);
    if (b < 63 || b > 126) throw parse_error("graph6: byte " + std::to_string(b) + " outside [63,126]");
  }
  const auto first = static_cast<unsigned char>(text[0]);
  if (first == 126) throw parse_error("graph6: multi-byte size form (n > 62) is not supported");
  const std::size_t n = first - 63U;
  if (n == 0) throw parse_error("graph6: graph must have at least one vertex");
  const auto bits = n * (n - 1) / 2;
  const auto body = (bits + 5) / 6;
  if (text.size() - 1 != body)
    throw parse_error("graph6: expected " + std::to_string(body) + " body bytes for n = " + std::to_string(n) +
                      ", got " + std::to_string(text.size() - 1));

  std::vector<std::pair<Vertex, Vertex>> edges;
  std::size_t k = 0;
  for (Vertex j = 1; j < n; ++j)
    for (Vertex i = 0; i < j; ++i, ++k) {
      const auto byte = static_cast<unsigned char>(text[1 + k / 6]) - 63U;
      if ((byte >> (5 - k % 6)) & 1U) edges.emplace_back(i, j);
    }
  for (; k < body * 6; ++k) {
    const auto byte = static_cast<unsigned char>(text[1 + k / 6]) - 63U;
    if ((byte >> (5 - k % 6)) & 1U) throw parse_error("graph6: nonzero padding bits");
  }
  return build_graph(n, edges);
}

inline std::string emit_graph6(const Graph& g) {
  const auto n = g.order();
  if (n > graph6_max_vertices) throw precondition_error("graph6: n = " + std::to_string(n) + " exceeds 62");
  const auto bits = n * (n - 1) / 2;
  std::string out(1 + (bits + 5) / 6, static_cast<char>(63));
  out[0] = static_cast<char>(63 + n);
  std::size_t k = 0;
  for (Vertex j = 1; j < n; ++j)
    for (Vertex i = 0; i < j; ++i, ++k)
      if (g.adjacent(i, j)) out[1 + k / 6] = static_cast<char>(out[1 + k / 6] + (1 << (5 - k % 6)));
  return out;
}

// "n <count>" then one "u v" pair per line, 0-based; '#' starts a comment.
inline Graph parse_edge_list(std::string_view text, std::size_t max_vertices = default_max_vertices) {
  std::optional<std::size_t> n;
  std::vector<std::pair<Vertex, Vertex>> edges;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto end = std::min(text.find('\n', pos), text.size());
    auto line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    const auto tokens = detail::split_ws(line);
    if (tokens.empty()) continue;
    if (!n) {
      if (tokens.size() != 2 || tokens[0] != "n") throw parse_error("expected header 'n <count>'", line_no);
      n = detail::parse_index(tokens[1], line_no, "vertex count");
      if (*n < 1) throw parse_error("vertex count must be positive", line_no);
      if (*n > max_vertices) throw parse_error("vertex count exceeds limit " + std::to_string(max_vertices), line_no);
      continue;
    }
    if (tokens.size() != 2) throw parse_error("expected 'u v'", line_no);
    const auto u = detail::parse_index(tokens[0], line_no, "vertex");
    const auto v = detail::parse_index(tokens[1], line_no, "vertex");
    for (auto x : {u, v})
      if (x >= *n) throw parse_error("vertex " + std::to_string(x) + " out of range 0.." + std::to_string(*n - 1), line_no);
    if (u == v) throw parse_error("loop at vertex " + std::to_string(u), line_no);
    edges.emplace_back(u, v);
  }
  if (!n) throw parse_error("missing header 'n <count>'");
  return build_graph(*n, edges, max_vertices);
}

inline std::string emit_edge_list(const Graph& g) {
  std::ostringstream os;
  os << "n " << g.order() << '\n';
  for (auto [u, v] : g.edges()) os << u << ' ' << v << '\n';
  return os.str();
}

// Either comma-separated 0-based indices ("0,2,5") or a 0/1 string of length n
// ("101" = {0,2}). A 0/1 string of length >= 2 is read as binary when its
// length is n or it has a leading zero.
inline VertexSet parse_vertex_set(std::string_view text, std::size_t n) {
  text = detail::trim(text);
  VertexSet s(n);
  const bool binary = !text.empty() && text.find(',') == std::string_view::npos &&
                      std::all_of(text.begin(), text.end(), [](char c) { return c == '0' || c == '1'; }) &&
                      text.size() >= 2 && (text.size() == n || text[0] == '0');
  if (binary) {
    if (text.size() != n)
      throw parse_error("binary vertex set has length " + std::to_string(text.size()) + ", expected " + std::to_string(n));
    for (std::size_t i = 0; i < n; ++i)
      if (text[i] == '1') s.insert(i);
    return s;
  }
  if (text.empty()) return s;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto end = std::min(text.find(',', pos), text.size());
    const auto tok = detail::trim(text.substr(pos, end - pos));
    pos = end + 1;
    const auto v = detail::parse_index(tok, 0, "vertex index");
    if (v >= n) throw parse_error("vertex " + std::to_string(v) + " out of range 0.." + std::to_string(n - 1));
    if (s.contains(v)) throw parse_error("duplicate vertex " + std::to_string(v));
    s.insert(v);
  }
  return s;
}

// Comma-separated color per vertex, e.g. "0,1,0,1".
inline std::vector<std::size_t> parse_colors(std::string_view text, std::size_t n) {
  std::vector<std::size_t> colors;
  text = detail::trim(text);
  std::size_t pos = 0;
  while (pos <= text.size() && !text.empty()) {
    const auto end = std::min(text.find(',', pos), text.size());
    colors.push_back(detail::parse_index(detail::trim(text.substr(pos, end - pos)), 0, "color"));
    pos = end + 1;
  }
  if (colors.size() != n)
    throw parse_error("coloring has " + std::to_string(colors.size()) + " entries, expected " + std::to_string(n));
  return colors;
}

}  // namespace equipart
