// Copyright 2026 The spanwalk Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef SPANWALK_FORMATS_HPP
#define SPANWALK_FORMATS_HPP

#include <cctype>
#include <cstdint>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "spanwalk/multigraph.hpp"

namespace spanwalk {

enum class GraphFormat { graph6, sparse6, edge_list };

class ParseError : public Error {
 public:
  ParseError(const std::string& what, size_t byte_offset)
      : Error(what + " (byte " + std::to_string(byte_offset) + ")"),
        offset(byte_offset) {}
  size_t offset;
};

/// Parse result. input_edge_order lists edge instances in the order the
/// format delivers them (bit-stream order for graph6, group order for
/// sparse6, line order for edge lists); rotation files refer to edges by
/// index into this list.
struct ParsedGraph {
  MultiGraph graph;
  std::vector<std::pair<int, int>> input_edge_order;
};

namespace detail {

inline std::string_view strip_line(std::string_view text) {
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r'))
    text.remove_suffix(1);
  return text;
}

inline int g6_byte(std::string_view text, size_t i) {
  if (i >= text.size()) throw ParseError("truncated input", text.size());
  unsigned char c = static_cast<unsigned char>(text[i]);
  if (c < 63 || c > 126)
    throw ParseError("byte out of graph6 range", i);
  return c - 63;
}

// N(n): 1, 4 or 8 bytes. Returns (n, bytes consumed).
inline std::pair<long long, size_t> parse_n(std::string_view text, size_t at) {
  int b0 = g6_byte(text, at);
  if (b0 < 63) return {b0, 1};
  int b1 = g6_byte(text, at + 1);
  if (b1 < 63) {
    long long n = 0;
    for (size_t i = 1; i <= 3; ++i) n = (n << 6) | g6_byte(text, at + i);
    return {n, 4};
  }
  long long n = 0;
  for (size_t i = 2; i <= 7; ++i) n = (n << 6) | g6_byte(text, at + i);
  return {n, 8};
}

inline void append_n(std::string& out, long long n) {
  if (n <= 62) {
    out.push_back(static_cast<char>(n + 63));
  } else if (n <= 258047) {
    out.push_back(126);
    for (int s = 12; s >= 0; s -= 6)
      out.push_back(static_cast<char>(((n >> s) & 63) + 63));
  } else {
    out.push_back(126);
    out.push_back(126);
    for (int s = 30; s >= 0; s -= 6)
      out.push_back(static_cast<char>(((n >> s) & 63) + 63));
  }
}

inline size_t skip_header(std::string_view& text, std::string_view header) {
  if (text.substr(0, header.size()) == header) {
    text.remove_prefix(header.size());
    return header.size();
  }
  return 0;
}

}  // namespace detail

inline ParsedGraph parse_graph6(std::string_view text) {
  text = detail::strip_line(text);
  size_t base = detail::skip_header(text, ">>graph6<<");
  auto [n64, at] = detail::parse_n(text, 0);
  if (n64 > 1'000'000) throw ParseError("vertex count too large", base);
  int n = static_cast<int>(n64);
  MultiGraph g(n);
  std::vector<std::pair<int, int>> order;
  size_t nbits = static_cast<size_t>(n) * (n - 1) / 2;
  size_t nbytes = (nbits + 5) / 6;
  if (text.size() != at + nbytes)
    throw ParseError(text.size() < at + nbytes ? "truncated graph6 data"
                                               : "trailing bytes after graph6 data",
                     base + std::min(text.size(), at + nbytes));
  size_t bit = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++bit) {
      int word = detail::g6_byte(text, at + bit / 6);
      if ((word >> (5 - bit % 6)) & 1) {
        g.add_edge(i, j);
        order.push_back({i, j});
      }
    }
  }
  for (; bit < nbytes * 6; ++bit) {
    int word = detail::g6_byte(text, at + bit / 6);
    if ((word >> (5 - bit % 6)) & 1)
      throw ParseError("nonzero padding bit", base + at + bit / 6);
  }
  return {std::move(g), std::move(order)};
}

inline ParsedGraph parse_sparse6(std::string_view text) {
  text = detail::strip_line(text);
  size_t base = detail::skip_header(text, ">>sparse6<<");
  if (text.empty() || text[0] != ':')
    throw ParseError("sparse6 data must start with ':'", base);
  text.remove_prefix(1);
  base += 1;
  auto [n64, at] = detail::parse_n(text, 0);
  if (n64 > 1'000'000) throw ParseError("vertex count too large", base);
  int n = static_cast<int>(n64);
  MultiGraph g(n);
  std::vector<std::pair<int, int>> order;
  int k = 1;
  while ((1LL << k) < n) ++k;

  size_t pos = at;     // next byte to read
  int word = 0, have = 0;
  auto next_bits = [&](int want, long long& out) -> bool {
    out = 0;
    while (want > 0) {
      if (have == 0) {
        if (pos >= text.size()) return false;
        word = detail::g6_byte(text, pos);
        ++pos;
        have = 6;
      }
      int take = std::min(want, have);
      out = (out << take) | ((word >> (have - take)) & ((1 << take) - 1));
      have -= take;
      want -= take;
    }
    return true;
  };

  long long v = 0;
  while (true) {
    long long b = 0, x = 0;
    if (!next_bits(1, b)) break;
    if (!next_bits(k, x)) break;
    if (b == 1) ++v;
    if (x >= n || v >= n) break;  // padding
    if (x > v) {
      v = x;
    } else if (x == v) {
      throw ParseError("loop edge rejected", base + (pos > 0 ? pos - 1 : 0));
    } else {
      g.add_edge(static_cast<int>(x), static_cast<int>(v));
      order.push_back({static_cast<int>(x), static_cast<int>(v)});
    }
  }
  return {std::move(g), std::move(order)};
}

inline ParsedGraph parse_edge_list(std::string_view text) {
  ParsedGraph out;
  size_t pos = 0;
  auto skip_ws = [&](bool newline_ok) {
    while (pos < text.size() &&
           (text[pos] == ' ' || text[pos] == '\t' || text[pos] == '\r' ||
            (newline_ok && text[pos] == '\n')))
      ++pos;
  };
  auto read_int = [&](const char* what) -> long long {
    skip_ws(false);
    size_t start = pos;
    if (pos < text.size() && text[pos] == '-') ++pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
      ++pos;
    if (pos == start)
      throw ParseError(std::string("expected ") + what, start);
    long long val = 0;
    bool neg = text[start] == '-';
    for (size_t i = start + (neg ? 1 : 0); i < pos; ++i)
      val = val * 10 + (text[i] - '0');
    return neg ? -val : val;
  };
  auto end_line = [&]() {
    skip_ws(false);
    if (pos < text.size() && text[pos] != '\n')
      throw ParseError("unexpected token", pos);
    if (pos < text.size()) ++pos;
  };

  skip_ws(true);
  size_t header_at = pos;
  long long n = read_int("vertex count");
  long long m = read_int("edge line count");
  if (n < 0 || m < 0 || n > 1'000'000)
    throw ParseError("malformed header", header_at);
  end_line();
  MultiGraph g(static_cast<int>(n));
  for (long long line = 0; line < m; ++line) {
    skip_ws(true);
    size_t line_at = pos;
    long long u = read_int("endpoint");
    long long v = read_int("endpoint");
    long long mult = 1;
    skip_ws(false);
    if (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
      mult = read_int("multiplicity");
    end_line();
    if (u < 0 || u >= n || v < 0 || v >= n)
      throw ParseError("vertex index out of range", line_at);
    if (u == v) throw ParseError("loop edge rejected", line_at);
    if (mult < 1) throw ParseError("multiplicity must be positive", line_at);
    g.add_edge(static_cast<int>(u), static_cast<int>(v),
               static_cast<int>(mult));
    for (long long c = 0; c < mult; ++c)
      out.input_edge_order.push_back({static_cast<int>(std::min(u, v)),
                                      static_cast<int>(std::max(u, v))});
  }
  skip_ws(true);
  if (pos < text.size()) throw ParseError("trailing input", pos);
  out.graph = std::move(g);
  return out;
}

inline ParsedGraph parse_graph(std::string_view text, GraphFormat format) {
  switch (format) {
    case GraphFormat::graph6: return parse_graph6(text);
    case GraphFormat::sparse6: return parse_sparse6(text);
    case GraphFormat::edge_list: return parse_edge_list(text);
  }
  throw Error("unknown graph format");
}

/// graph6 cannot carry multiplicities; multigraphs are rejected.
inline std::string serialize_graph6(const MultiGraph& g) {
  if (!g.is_simple())
    throw Error("graph6 cannot encode a multigraph; use sparse6");
  std::string out;
  detail::append_n(out, g.order());
  int n = g.order();
  size_t nbits = static_cast<size_t>(n) * (n - 1) / 2;
  std::vector<char> bits(nbits, 0);
  size_t bit = 0;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i, ++bit)
      if (g.has_edge(i, j)) bits[bit] = 1;
  for (size_t i = 0; i < (nbits + 5) / 6 * 6; i += 6) {
    int word = 0;
    for (size_t b = 0; b < 6; ++b)
      word = (word << 1) | (i + b < nbits ? bits[i + b] : 0);
    out.push_back(static_cast<char>(word + 63));
  }
  return out;
}

inline std::string serialize_sparse6(const MultiGraph& g) {
  std::string out = ":";
  int n = g.order();
  detail::append_n(out, n);
  int k = 1;
  while ((1LL << k) < n) ++k;

  // Edge instances sorted by (max endpoint, min endpoint).
  std::vector<std::pair<int, int>> edges;  // (v, u) with u <= v
  for (const MultiGraph::Pair& p : g.pairs())
    for (int c = 0; c < p.mult; ++c) edges.push_back({p.v, p.u});
  std::sort(edges.begin(), edges.end());

  std::vector<char> bits;
  auto enc = [&](int x) {
    for (int s = k - 1; s >= 0; --s) bits.push_back((x >> s) & 1);
  };
  int curv = 0;
  for (auto [v, u] : edges) {
    if (v == curv) {
      bits.push_back(0);
      enc(u);
    } else if (v == curv + 1) {
      ++curv;
      bits.push_back(1);
      enc(u);
    } else {
      curv = v;
      bits.push_back(1);
      enc(v);
      bits.push_back(0);
      enc(u);
    }
  }
  // Pad with 1s; when n is a power of two and enough padding follows, a
  // leading 0 keeps the padding from decoding as a loop on vertex n-1.
  size_t pad = (6 - bits.size() % 6) % 6;
  if (k < 6 && n == (1 << k) && pad >= static_cast<size_t>(k) && curv < n - 1)
    bits.push_back(0);
  while (bits.size() % 6 != 0) bits.push_back(1);
  for (size_t i = 0; i < bits.size(); i += 6) {
    int word = 0;
    for (size_t b = 0; b < 6; ++b) word = (word << 1) | bits[i + b];
    out.push_back(static_cast<char>(word + 63));
  }
  return out;
}

inline std::string serialize_edge_list(const MultiGraph& g) {
  std::ostringstream out;
  out << g.order() << " " << g.pairs().size() << "\n";
  for (const MultiGraph::Pair& p : g.pairs()) {
    out << p.u << " " << p.v;
    if (p.mult != 1) out << " " << p.mult;
    out << "\n";
  }
  return out.str();
}

inline std::string serialize_graph(const MultiGraph& g, GraphFormat format) {
  switch (format) {
    case GraphFormat::graph6: return serialize_graph6(g);
    case GraphFormat::sparse6: return serialize_sparse6(g);
    case GraphFormat::edge_list: return serialize_edge_list(g);
  }
  throw Error("unknown graph format");
}

inline GraphFormat format_from_extension(std::string_view path) {
  auto ends_with = [&](std::string_view suf) {
    return path.size() >= suf.size() &&
           path.substr(path.size() - suf.size()) == suf;
  };
  if (ends_with(".g6")) return GraphFormat::graph6;
  if (ends_with(".s6")) return GraphFormat::sparse6;
  if (ends_with(".el")) return GraphFormat::edge_list;
  throw Error("cannot infer graph format from extension of '" +
              std::string(path) + "'");
}

}  // namespace spanwalk

#endif  // SPANWALK_FORMATS_HPP
