#pragma once

#include <cctype>
#include <cstdint>
#include <istream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "p3c/error.hpp"
#include "p3c/graph.hpp"

namespace p3c {

namespace detail {

constexpr int g6_bias = 63;

inline void g6_put_size(std::string& out, std::uint64_t n) {
  if (n <= 62) {
    out.push_back(static_cast<char>(n + g6_bias));
  } else if (n <= 258047) {
    out.push_back('~');
    for (int shift = 12; shift >= 0; shift -= 6)
      out.push_back(static_cast<char>(((n >> shift) & 63) + g6_bias));
  } else {
    out += "~~";
    for (int shift = 30; shift >= 0; shift -= 6)
      out.push_back(static_cast<char>(((n >> shift) & 63) + g6_bias));
  }
}

inline int g6_value(char c) {
  if (c < 63 || c > 126)
    throw input_error(std::string("graph6: character '") + c + "' outside 63..126");
  return c - g6_bias;
}

}  // namespace detail

/// graph6 encoding: size header, then the upper triangle column by column
/// ((0,1), (0,2), (1,2), (0,3), ...) packed six bits per byte, biased by 63.
inline std::string to_graph6(const Graph& g) {
  std::string out;
  const auto n = static_cast<std::uint64_t>(g.order());
  detail::g6_put_size(out, n);
  int acc = 0, nbits = 0;
  for (vertex_t j = 1; j < g.order(); ++j) {
    for (vertex_t i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++nbits == 6) {
        out.push_back(static_cast<char>(acc + detail::g6_bias));
        acc = nbits = 0;
      }
    }
  }
  if (nbits > 0) out.push_back(static_cast<char>((acc << (6 - nbits)) + detail::g6_bias));
  return out;
}

/// Decodes one graph6 line. Accepts an optional ">>graph6<<" prefix and a
/// trailing newline; anything else that does not fit the format throws.
inline Graph from_graph6(std::string_view text) {
  constexpr std::string_view header = ">>graph6<<";
  if (text.starts_with(header)) text.remove_prefix(header.size());
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.remove_suffix(1);
  if (text.empty()) throw input_error("graph6: empty input");

  std::size_t pos = 0;
  auto next = [&]() -> int {
    if (pos >= text.size()) throw input_error("graph6: truncated header");
    return detail::g6_value(text[pos++]);
  };

  std::uint64_t n = 0;
  int first = next();
  if (first < 63) {
    n = static_cast<std::uint64_t>(first);
  } else {
    int second = next();
    if (second < 63) {
      n = static_cast<std::uint64_t>(second);
      for (int i = 0; i < 2; ++i) n = (n << 6) | static_cast<std::uint64_t>(next());
    } else {
      for (int i = 0; i < 6; ++i) n = (n << 6) | static_cast<std::uint64_t>(next());
    }
  }
  if (n > 10000) throw input_error("graph6: graphs above 10000 vertices are unsupported");

  const std::uint64_t bits = n * (n - (n > 0 ? 1 : 0)) / 2;
  const std::uint64_t bytes = (bits + 5) / 6;
  if (text.size() - pos < bytes) throw input_error("graph6: truncated bit field");
  if (text.size() - pos > bytes) throw input_error("graph6: trailing characters after bit field");

  std::vector<Edge> edges;
  std::uint64_t k = 0;
  for (vertex_t j = 1; j < static_cast<vertex_t>(n); ++j) {
    for (vertex_t i = 0; i < j; ++i, ++k) {
      int byte = detail::g6_value(text[pos + k / 6]);
      if ((byte >> (5 - k % 6)) & 1) edges.emplace_back(i, j);
    }
  }
  if (k % 6 != 0) {
    int last = detail::g6_value(text[pos + k / 6]);
    if (last & ((1 << (6 - k % 6)) - 1)) throw input_error("graph6: nonzero padding bits");
  }
  return new_graph(static_cast<int>(n), edges);
}

/// Edge-list text: "n m" followed by m lines "u v" (0-indexed). '#' starts a comment.
inline Graph read_edge_list(std::istream& in) {
  std::ostringstream clean;
  std::string line;
  while (std::getline(in, line)) {
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    clean << line << '\n';
  }
  std::istringstream tokens(clean.str());
  long long n = 0, m = 0;
  if (!(tokens >> n >> m)) throw input_error("edge list: missing \"n m\" header");
  if (n < 0 || m < 0) throw input_error("edge list: negative counts");
  if (n > 10000) throw input_error("edge list: graphs above 10000 vertices are unsupported");
  std::vector<Edge> edges;
  for (long long i = 0; i < m; ++i) {
    long long u = 0, v = 0;
    if (!(tokens >> u >> v))
      throw input_error("edge list: expected " + std::to_string(m) + " edges, got " +
                        std::to_string(i));
    if (u < 0 || v < 0 || u >= n || v >= n)
      throw input_error("edge list: endpoint out of range in edge " + std::to_string(i));
    edges.emplace_back(static_cast<vertex_t>(u), static_cast<vertex_t>(v));
  }
  std::string extra;
  if (tokens >> extra) throw input_error("edge list: trailing data '" + extra + "'");
  return new_graph(static_cast<int>(n), edges);
}

inline Graph read_edge_list(std::string_view text) {
  std::istringstream in{std::string(text)};
  return read_edge_list(in);
}

inline std::string to_edge_list(const Graph& g) {
  std::ostringstream out;
  out << g.order() << ' ' << g.edge_count() << '\n';
  for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
  return out.str();
}

/// Picks graph6 or edge-list by the first non-blank byte: graph6 bytes are
/// all in '>'..'~', edge lists start with a digit or '#'.
inline Graph read_graph(std::string_view text) {
  std::size_t i = 0;
  while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  if (i == text.size()) throw input_error("empty graph input");
  char c = text[i];
  if (c >= '>' && c <= '~') {
    std::string_view rest = text.substr(i);
    rest = rest.substr(0, rest.find('\n'));
    return from_graph6(rest);
  }
  return read_edge_list(text.substr(i));
}

}  // namespace p3c
