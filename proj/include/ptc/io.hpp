// Copyright 2026 The ptc Authors
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

#ifndef PTC_IO_HPP
#define PTC_IO_HPP

#include <charconv>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "ptc/graph.hpp"

namespace ptc {

enum class ParseErrorKind {
  kMalformedHeader,
  kMalformedLine,
  kVertexOutOfRange,
  kSelfLoop,
  kDuplicateEdge,
  kEdgeCountMismatch,
  kUnsupported,
};

class ParseError : public std::runtime_error {
 public:
  ParseError(ParseErrorKind kind, int line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what),
        kind_(kind),
        line_(line) {}

  ParseErrorKind kind() const { return kind_; }
  int line() const { return line_; }

 private:
  ParseErrorKind kind_;
  int line_;
};

namespace detail {

/// Splits on '\n', dropping a trailing '\r' from each line.
inline std::vector<std::string_view> split_lines(std::string_view text) {
  std::vector<std::string_view> lines;
  std::size_t start = 0;
  while (start <= text.size()) {
    auto end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    auto line = text.substr(start, end - start);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    lines.push_back(line);
    if (end == text.size()) break;
    start = end + 1;
  }
  return lines;
}

inline std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

/// Parses exactly two whitespace-separated non-negative integers.
inline bool parse_pair(std::string_view s, long long& a, long long& b) {
  auto next = [&s](long long& out) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    if (s.empty()) return false;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
    if (ec != std::errc{} || out < 0) return false;
    s.remove_prefix(static_cast<std::size_t>(ptr - s.data()));
    return s.empty() || s.front() == ' ' || s.front() == '\t';
  };
  if (!next(a) || !next(b)) return false;
  return trim(s).empty();
}

}  // namespace detail

/// Reads the edge-list format: comment lines start with '#', the first other
/// line is "n m", then exactly m lines "u v". Blank lines are ignored.
inline Graph parse_edge_list(std::string_view text) {
  const auto lines = detail::split_lines(text);
  bool have_header = false;
  long long n = 0, m = 0;
  long long seen = 0;
  std::optional<GraphBuilder> builder;
  int lineno = 0;
  for (auto raw : lines) {
    ++lineno;
    auto line = detail::trim(raw);
    if (line.empty() || line.front() == '#') continue;
    long long a = 0, b = 0;
    if (!have_header) {
      if (!detail::parse_pair(line, a, b) || a < 1 || a > 1'000'000 ||
          b > a * (a - 1) / 2) {
        throw ParseError(ParseErrorKind::kMalformedHeader, lineno,
                         "expected header \"n m\" with n >= 1 and m <= n(n-1)/2");
      }
      n = a;
      m = b;
      have_header = true;
      builder.emplace(static_cast<int>(n));
      continue;
    }
    if (!detail::parse_pair(line, a, b)) {
      throw ParseError(ParseErrorKind::kMalformedLine, lineno,
                       "expected edge \"u v\"");
    }
    if (a >= n || b >= n) {
      throw ParseError(ParseErrorKind::kVertexOutOfRange, lineno,
                       "vertex id >= n = " + std::to_string(n));
    }
    if (a == b) {
      throw ParseError(ParseErrorKind::kSelfLoop, lineno,
                       "self-loop at " + std::to_string(a));
    }
    if (builder->has_edge(static_cast<int>(a), static_cast<int>(b))) {
      throw ParseError(ParseErrorKind::kDuplicateEdge, lineno,
                       "duplicate edge " + std::to_string(a) + " " +
                           std::to_string(b));
    }
    if (++seen > m) {
      throw ParseError(ParseErrorKind::kEdgeCountMismatch, lineno,
                       "more than m = " + std::to_string(m) + " edges");
    }
    builder->add_edge(static_cast<int>(a), static_cast<int>(b));
  }
  if (!have_header) {
    throw ParseError(ParseErrorKind::kMalformedHeader, lineno, "missing header");
  }
  if (seen != m) {
    throw ParseError(ParseErrorKind::kEdgeCountMismatch, lineno,
                     "expected " + std::to_string(m) + " edges, found " +
                         std::to_string(seen));
  }
  return std::move(*builder).build();
}

inline std::string format_edge_list(const Graph& g) {
  std::string out;
  out += std::to_string(g.order()) + " " + std::to_string(g.size()) + "\n";
  for (const auto& e : g.edges()) {
    out += std::to_string(e.u) + " " + std::to_string(e.v) + "\n";
  }
  return out;
}

/// Reads one graph6 record (without the optional ">>graph6<<" header).
/// Graphs with more than 62 vertices are rejected.
inline Graph parse_graph6(std::string_view text) {
  auto s = detail::trim(text);
  while (!s.empty() && (s.back() == '\n' || s.back() == '\r')) s.remove_suffix(1);
  if (s.starts_with(">>graph6<<")) s.remove_prefix(10);
  if (s.empty()) {
    throw ParseError(ParseErrorKind::kMalformedHeader, 1, "empty graph6 record");
  }
  for (char c : s) {
    if (c < 63 || c > 126) {
      throw ParseError(ParseErrorKind::kMalformedLine, 1,
                       "graph6 byte out of range");
    }
  }
  if (s.front() == 126) {
    throw ParseError(ParseErrorKind::kUnsupported, 1,
                     "graph6 graphs with n > 62 are not supported");
  }
  const int n = s.front() - 63;
  if (n < 1) {
    throw ParseError(ParseErrorKind::kMalformedHeader, 1, "graph6 with n = 0");
  }
  const std::size_t bits = static_cast<std::size_t>(n) * (n - 1) / 2;
  const std::size_t bytes = (bits + 5) / 6;
  if (s.size() != 1 + bytes) {
    throw ParseError(ParseErrorKind::kMalformedLine, 1,
                     "graph6 record has wrong length for n = " +
                         std::to_string(n));
  }
  GraphBuilder b(n);
  std::size_t k = 0;
  for (int v = 1; v < n; ++v) {
    for (int u = 0; u < v; ++u, ++k) {
      const int byte = s[1 + k / 6] - 63;
      if ((byte >> (5 - k % 6)) & 1) b.add_edge(u, v);
    }
  }
  return std::move(b).build();
}

/// Orders above 62 use the four-byte size prefix, so canonical ids exist
/// for every graph the oracles accept; such records are not read back.
inline std::string format_graph6(const Graph& g) {
  const int n = g.order();
  if (n > 258047) throw GraphError("graph6 output supports n <= 258047");
  std::string out;
  if (n <= 62) {
    out += static_cast<char>(63 + n);
  } else {
    out += '~';
    for (int shift : {12, 6, 0}) out += static_cast<char>(63 + ((n >> shift) & 63));
  }
  int acc = 0, nbits = 0;
  for (int v = 1; v < n; ++v) {
    for (int u = 0; u < v; ++u) {
      acc = (acc << 1) | (g.has_edge(u, v) ? 1 : 0);
      if (++nbits == 6) {
        out += static_cast<char>(63 + acc);
        acc = nbits = 0;
      }
    }
  }
  if (nbits > 0) out += static_cast<char>(63 + (acc << (6 - nbits)));
  return out;
}

enum class GraphFormat { kEdgeList, kGraph6 };

inline Graph parse_graph(std::string_view text, GraphFormat format) {
  return format == GraphFormat::kGraph6 ? parse_graph6(text)
                                        : parse_edge_list(text);
}

}  // namespace ptc

#endif  // PTC_IO_HPP
