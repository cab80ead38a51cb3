#ifndef SUBTREE_IO_HPP
#define SUBTREE_IO_HPP

#include <charconv>
#include <string>
#include <string_view>
#include <vector>

#include "subtree/common.hpp"
#include "subtree/tree.hpp"

namespace subtree {

namespace detail {

inline std::size_t parse_number(std::string_view token, std::string_view what) {
  if (token.empty()) throw ParseError("empty " + std::string(what));
  std::size_t value = 0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc{} || ptr != token.data() + token.size()) {
    throw ParseError("bad " + std::string(what) + ": '" + std::string(token) + "'");
  }
  return value;
}

inline std::vector<std::string_view> split_lines(std::string_view text) {
  if (!text.empty() && text.back() == '\n') text.remove_suffix(1);
  std::vector<std::string_view> lines;
  std::size_t start = 0;
  while (true) {
    const std::size_t end = text.find('\n', start);
    lines.push_back(text.substr(start, end == std::string_view::npos ? end : end - start));
    if (end == std::string_view::npos) break;
    start = end + 1;
  }
  return lines;
}

}  // namespace detail

/// Edge-list text: a line "n", then n-1 lines "u v" (decimal, single space).
/// A single trailing newline is allowed; anything else extra is rejected.
/// Throws ParseError on format problems and NotATree on structural ones.
inline Tree parse_edge_list(std::string_view text) {
  const auto lines = detail::split_lines(text);
  const std::size_t n = detail::parse_number(lines[0], "vertex count");
  if (n == 0) throw ParseError("vertex count must be at least 1");
  if (lines.size() != n) {
    throw ParseError("expected " + std::to_string(n - 1) + " edge lines, got " +
                     std::to_string(lines.size() - 1));
  }
  std::vector<Edge> edges;
  edges.reserve(n - 1);
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const std::string_view line = lines[i];
    const std::size_t space = line.find(' ');
    if (space == std::string_view::npos) throw ParseError("edge line without a space: '" + std::string(line) + "'");
    edges.emplace_back(detail::parse_number(line.substr(0, space), "vertex id"),
                       detail::parse_number(line.substr(space + 1), "vertex id"));
  }
  return tree_from_edges(n, edges);
}

/// Inverse of parse_edge_list; edges in lexicographic order.
inline std::string format_edge_list(const Tree& t) {
  std::string out = std::to_string(t.size()) + "\n";
  for (auto [u, v] : t.sorted_edges()) out += std::to_string(u) + " " + std::to_string(v) + "\n";
  return out;
}

/// Comma-separated decimal integers on one line (optional trailing newline).
/// Returns the raw values; realizability is checked by validate_degree_sequence.
inline std::vector<long long> parse_degree_list(std::string_view text) {
  if (!text.empty() && text.back() == '\n') text.remove_suffix(1);
  std::vector<long long> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = text.find(',', start);
    const auto token = text.substr(start, comma == std::string_view::npos ? comma : comma - start);
    out.push_back(static_cast<long long>(detail::parse_number(token, "degree")));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

inline std::string format_sequence(const std::vector<std::size_t>& values) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(values[i]);
  }
  return out;
}

inline std::string format_sequence(const DegreeSequence& pi) { return format_sequence(pi.values()); }

}  // namespace subtree

#endif  // SUBTREE_IO_HPP
