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

#ifndef PTC_PENDANT_TREE_HPP
#define PTC_PENDANT_TREE_HPP

#include <algorithm>
#include <charconv>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "ptc/graph.hpp"
#include "ptc/io.hpp"

namespace ptc {

using TreeEdges = std::vector<Edge>;

/// internal: trees share no edges and meet only in the terminals.
/// edge: trees share no edges.
enum class PackingMode { kInternal, kEdge };

inline std::string_view to_string(PackingMode m) {
  return m == PackingMode::kInternal ? "internal" : "edge";
}

/// A family of S-Steiner trees over a common terminal set.
struct Packing {
  VertexSet terminals;
  PackingMode mode = PackingMode::kInternal;
  std::vector<TreeEdges> trees;

  int size() const { return static_cast<int>(trees.size()); }
  friend bool operator==(const Packing&, const Packing&) = default;
};

/// Value of a local (fixed S) search together with a packing achieving it.
struct LocalResult {
  int value = 0;
  Packing witness;
  /// True when the search proved optimality. Capped searches that stopped
  /// early report false.
  bool exhausted = true;
};

namespace detail {

/// Structural check shared by the pendant and plain variants.
inline std::optional<std::string> steiner_tree_defect(const Graph& g,
                                                      const VertexSet& s,
                                                      const TreeEdges& t,
                                                      bool pendant) {
  if (s.size() < 2) throw std::invalid_argument("terminal set needs >= 2 vertices");
  if (t.empty()) return "tree has no edges";
  std::map<Vertex, int> degree;
  std::set<Edge> seen;
  for (auto e : t) {
    if (e.u < 0 || e.v < 0 || e.u >= g.order() || e.v >= g.order() ||
        e.u == e.v) {
      return "invalid edge " + std::to_string(e.u) + "-" + std::to_string(e.v);
    }
    e = make_edge(e.u, e.v);
    if (!g.has_edge(e.u, e.v)) {
      return "edge " + std::to_string(e.u) + "-" + std::to_string(e.v) +
             " is not in the graph";
    }
    if (!seen.insert(e).second) {
      return "repeated edge " + std::to_string(e.u) + "-" + std::to_string(e.v);
    }
    ++degree[e.u];
    ++degree[e.v];
  }
  if (seen.size() + 1 != degree.size()) return "edge set is not a tree";
  // Connectivity via union-find on the touched vertices.
  std::map<Vertex, Vertex> parent;
  for (auto& [v, d] : degree) parent[v] = v;
  auto find = [&parent](Vertex v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  for (auto e : seen) {
    auto a = find(e.u), b = find(e.v);
    if (a == b) return "edge set contains a cycle";
    parent[a] = b;
  }
  for (auto v : s.members()) {
    auto it = degree.find(v);
    if (it == degree.end()) {
      return "terminal " + std::to_string(v) + " is not in the tree";
    }
    if (pendant && it->second != 1) {
      return "terminal " + std::to_string(v) + " has degree " +
             std::to_string(it->second);
    }
  }
  return std::nullopt;
}

inline std::set<Vertex> tree_vertices(const TreeEdges& t) {
  std::set<Vertex> out;
  for (auto e : t) {
    out.insert(e.u);
    out.insert(e.v);
  }
  return out;
}

}  // namespace detail

/// True iff T is a tree in G containing S with every terminal of degree 1.
/// Edges missing from G make the answer false; |S| < 2 throws.
inline bool is_pendant_steiner_tree(const Graph& g, const VertexSet& s,
                                    const TreeEdges& t) {
  return !detail::steiner_tree_defect(g, s, t, true).has_value();
}

/// True iff T is a tree in G whose vertex set contains S.
inline bool is_steiner_tree(const Graph& g, const VertexSet& s,
                            const TreeEdges& t) {
  return !detail::steiner_tree_defect(g, s, t, false).has_value();
}

struct VerifyResult {
  bool ok = true;
  std::string diagnostic;  // first failure, empty when ok

  explicit operator bool() const { return ok; }
};

namespace detail {

inline VerifyResult verify_trees(const Graph& g, const VertexSet& s,
                                 const Packing& p, bool pendant) {
  auto fail = [](std::string msg) { return VerifyResult{false, std::move(msg)}; };
  if (!(p.terminals == s)) return fail("packing terminal set differs from S");
  std::vector<std::set<Edge>> edge_sets;
  std::vector<std::set<Vertex>> inner;
  for (std::size_t i = 0; i < p.trees.size(); ++i) {
    const auto& t = p.trees[i];
    if (auto d = steiner_tree_defect(g, s, t, pendant)) {
      return fail("tree " + std::to_string(i) + ": " + *d);
    }
    if (pendant && s.size() >= 3) {
      // Every pendant tree for |S| >= 3 leaves each terminal through a cut
      // edge, so it uses at least |S| edges of E(S, V - S).
      int cut = 0;
      for (auto e : t) cut += s.contains(e.u) != s.contains(e.v);
      if (cut < s.size()) {
        return fail("tree " + std::to_string(i) + " uses " +
                    std::to_string(cut) + " cut edges, fewer than |S|");
      }
    }
    std::set<Edge> es;
    for (auto e : t) es.insert(make_edge(e.u, e.v));
    std::set<Vertex> in;
    for (auto v : tree_vertices(t)) {
      if (!s.contains(v)) in.insert(v);
    }
    for (std::size_t j = 0; j < i; ++j) {
      for (auto e : es) {
        if (edge_sets[j].count(e)) {
          return fail("trees " + std::to_string(j) + " and " +
                      std::to_string(i) + " share edge " + std::to_string(e.u) +
                      "-" + std::to_string(e.v));
        }
      }
      if (p.mode == PackingMode::kInternal) {
        for (auto v : in) {
          if (inner[j].count(v)) {
            return fail("trees " + std::to_string(j) + " and " +
                        std::to_string(i) + " share non-terminal vertex " +
                        std::to_string(v));
          }
        }
      }
    }
    edge_sets.push_back(std::move(es));
    inner.push_back(std::move(in));
  }
  return {};
}

}  // namespace detail

/// Checks that every tree is a pendant S-Steiner tree of G and that the
/// trees are pairwise disjoint according to the packing mode.
inline VerifyResult verify_packing(const Graph& g, const VertexSet& s,
                                   const Packing& p) {
  return detail::verify_trees(g, s, p, true);
}

/// As verify_packing for (not necessarily pendant) S-Steiner trees.
inline VerifyResult verify_steiner_packing(const Graph& g, const VertexSet& s,
                                           const Packing& p) {
  return detail::verify_trees(g, s, p, false);
}

// Certificate documents:
//
//   # ref: <tag>              optional provenance line
//   S: v1 v2 ... vk
//   mode: internal|edge
//   T: u1-v1 u2-v2 ...        one line per tree

struct Certificate {
  Packing packing;
  std::optional<std::string> provenance;

  friend bool operator==(const Certificate&, const Certificate&) = default;
};

inline std::string format_certificate(const Packing& p,
                                      const std::optional<std::string>& ref = {}) {
  std::string out;
  if (ref) out += "# ref: " + *ref + "\n";
  out += "S:";
  for (auto v : p.terminals.members()) out += " " + std::to_string(v);
  out += "\nmode: ";
  out += to_string(p.mode);
  out += "\n";
  for (const auto& t : p.trees) {
    out += "T:";
    for (auto e : t) out += " " + std::to_string(e.u) + "-" + std::to_string(e.v);
    out += "\n";
  }
  return out;
}

inline std::string format_certificate(const Certificate& c) {
  return format_certificate(c.packing, c.provenance);
}

/// Parses a certificate. `n` is the vertex count of the host graph, used to
/// range-check ids.
inline Certificate parse_certificate(std::string_view text, int n) {
  Certificate c;
  auto lines = detail::split_lines(text);
  if (!lines.empty() && lines.back().empty()) lines.pop_back();
  std::size_t i = 0;
  auto bad = [&](const std::string& what) {
    return ParseError(ParseErrorKind::kMalformedLine, static_cast<int>(i + 1), what);
  };
  auto parse_int = [&](std::string_view tok) {
    int v = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc{} || ptr != tok.data() + tok.size() || v < 0) {
      throw bad("bad integer '" + std::string(tok) + "'");
    }
    if (v >= n) {
      throw ParseError(ParseErrorKind::kVertexOutOfRange, static_cast<int>(i + 1),
                       "vertex " + std::to_string(v) + " >= n");
    }
    return v;
  };
  auto tokens = [](std::string_view s) {
    std::vector<std::string_view> out;
    while (!s.empty()) {
      auto sp = s.find(' ');
      if (sp == std::string_view::npos) sp = s.size();
      if (sp > 0) out.push_back(s.substr(0, sp));
      s.remove_prefix(std::min(s.size(), sp + 1));
    }
    return out;
  };
  for (; i < lines.size() && lines[i].starts_with("#"); ++i) {
    constexpr std::string_view kRef = "# ref: ";
    if (lines[i].starts_with(kRef) && !c.provenance) {
      c.provenance = std::string(lines[i].substr(kRef.size()));
    }
  }
  if (i >= lines.size() || !lines[i].starts_with("S:")) throw bad("expected 'S:' line");
  std::vector<Vertex> terms;
  for (auto tok : tokens(lines[i].substr(2))) terms.push_back(parse_int(tok));
  try {
    c.packing.terminals = VertexSet(n, terms);
  } catch (const GraphError& e) {
    throw bad(e.what());
  }
  ++i;
  if (i >= lines.size()) throw bad("expected 'mode:' line");
  if (lines[i] == "mode: internal") {
    c.packing.mode = PackingMode::kInternal;
  } else if (lines[i] == "mode: edge") {
    c.packing.mode = PackingMode::kEdge;
  } else {
    throw bad("expected 'mode: internal' or 'mode: edge'");
  }
  for (++i; i < lines.size(); ++i) {
    if (!lines[i].starts_with("T:")) throw bad("expected 'T:' line");
    TreeEdges t;
    for (auto tok : tokens(lines[i].substr(2))) {
      auto dash = tok.find('-');
      if (dash == std::string_view::npos) throw bad("edge must be written u-v");
      int a = parse_int(tok.substr(0, dash));
      int b = parse_int(tok.substr(dash + 1));
      t.push_back(Edge{a, b});
    }
    c.packing.trees.push_back(std::move(t));
  }
  return c;
}

}  // namespace ptc

#endif  // PTC_PENDANT_TREE_HPP
