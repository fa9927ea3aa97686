#pragma once

#include <cctype>
#include <charconv>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "pdtree/error.hpp"
#include "pdtree/rooted_tree.hpp"

namespace pdtree {

/// "n\np1 p2 ... pn" with the root entry 0. No trailing newline.
inline std::string serialize(const RootedTree& tree) {
  std::string out = std::to_string(tree.size());
  out += '\n';
  for (std::size_t v = 1; v <= tree.size(); ++v) {
    if (v > 1) out += ' ';
    out += std::to_string(tree.parent(static_cast<Rank>(v)));
  }
  return out;
}

namespace detail {

inline bool parse_int(std::string_view token, std::int64_t& value) {
  const auto* first = token.data();
  const auto* last = token.data() + token.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  return ec == std::errc{} && ptr == last;
}

inline std::vector<std::string_view> split_ws(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    std::size_t j = i;
    while (j < s.size() && !std::isspace(static_cast<unsigned char>(s[j]))) ++j;
    if (j > i) out.push_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

}  // namespace detail

/// Inverse of serialize(). Trailing whitespace is tolerated; the tree need
/// not be BFS ranked.
inline RootedTree parse(std::string_view text) {
  const auto eol = text.find('\n');
  const auto header = detail::split_ws(text.substr(0, eol));
  std::int64_t n = 0;
  if (header.size() != 1 || !detail::parse_int(header[0], n) || n < 1)
    throw Error(ErrorCode::MalformedHeader, "first line must be a positive vertex count");
  const auto body = eol == std::string_view::npos ? std::string_view{}
                                                  : text.substr(eol + 1);
  const auto tokens = detail::split_ws(body);
  if (tokens.size() != static_cast<std::size_t>(n))
    throw Error(ErrorCode::TokenCount, "expected " + std::to_string(n) +
                                           " parent ranks, found " +
                                           std::to_string(tokens.size()));
  std::vector<std::int64_t> raw(tokens.size());
  for (std::size_t k = 0; k < tokens.size(); ++k)
    if (!detail::parse_int(tokens[k], raw[k]))
      throw Error(ErrorCode::TokenCount,
                  "token '" + std::string(tokens[k]) + "' is not an integer");
  return RootedTree::from_parent_array(raw);
}

/// Reads a tree file; "-" reads standard input.
inline RootedTree read_tree_file(const std::string& path) {
  std::string text;
  if (path == "-") {
    text.assign(std::istreambuf_iterator<char>(std::cin), {});
  } else {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    text = buf.str();
  }
  return parse(text);
}

inline void write_tree_file(const std::string& path, const RootedTree& tree) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << serialize(tree) << '\n';
}

}  // namespace pdtree
