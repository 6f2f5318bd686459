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

#ifndef PTC_GRAPH_HPP
#define PTC_GRAPH_HPP

#include <algorithm>
#include <bit>
#include <compare>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace ptc {

using Vertex = int;

/// An undirected edge stored with u < v.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

inline Edge make_edge(Vertex a, Vertex b) {
  return a < b ? Edge{a, b} : Edge{b, a};
}

/// Raised for structurally invalid graphs (self-loops, duplicates, bad ids).
class GraphError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Simple undirected graph on vertices 0..n-1.
///
/// Adjacency rows are bit vectors, one 64-bit word per 64 vertices, so that
/// neighborhood intersections cost one AND per word. Values are immutable
/// once built; use GraphBuilder to assemble one edge at a time.
class Graph {
 public:
  /// Edgeless graph on n vertices.
  explicit Graph(int n = 1) : n_(n), words_((n + 63) / 64) {
    if (n < 1) throw GraphError("graph must have at least one vertex");
    bits_.assign(static_cast<std::size_t>(n_) * words_, 0);
  }

  /// Builds a graph from an edge list; rejects self-loops, duplicates and
  /// out-of-range endpoints.
  static Graph from_edges(int n, std::span<const Edge> edges);

  int order() const { return n_; }
  int size() const { return m_; }

  bool has_edge(Vertex a, Vertex b) const {
    return (row(a)[b >> 6] >> (b & 63)) & 1u;
  }

  int degree(Vertex v) const {
    int d = 0;
    for (auto w : row(v)) d += std::popcount(w);
    return d;
  }

  int min_degree() const {
    int best = n_;
    for (Vertex v = 0; v < n_; ++v) best = std::min(best, degree(v));
    return best;
  }

  std::vector<Vertex> neighbors(Vertex v) const {
    std::vector<Vertex> out;
    auto r = row(v);
    for (int w = 0; w < words_; ++w) {
      for (std::uint64_t x = r[w]; x; x &= x - 1) {
        out.push_back(w * 64 + std::countr_zero(x));
      }
    }
    return out;
  }

  /// Neighborhood as a single word. Only valid for graphs with n <= 64.
  std::uint64_t neighbor_mask(Vertex v) const { return row(v)[0]; }

  std::span<const std::uint64_t> row(Vertex v) const {
    return {bits_.data() + static_cast<std::size_t>(v) * words_,
            static_cast<std::size_t>(words_)};
  }

  /// All edges in lexicographic order of (u, v), u < v.
  std::vector<Edge> edges() const {
    std::vector<Edge> out;
    out.reserve(m_);
    for (Vertex u = 0; u < n_; ++u) {
      for (Vertex v = u + 1; v < n_; ++v) {
        if (has_edge(u, v)) out.push_back({u, v});
      }
    }
    return out;
  }

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.bits_ == b.bits_;
  }

 private:
  friend class GraphBuilder;

  std::uint64_t* mutable_row(Vertex v) {
    return bits_.data() + static_cast<std::size_t>(v) * words_;
  }

  int n_;
  int words_;
  int m_ = 0;
  std::vector<std::uint64_t> bits_;
};

/// Incremental construction of a Graph.
class GraphBuilder {
 public:
  explicit GraphBuilder(int n) : g_(n) {}

  int order() const { return g_.order(); }

  bool has_edge(Vertex a, Vertex b) const { return g_.has_edge(a, b); }

  /// Adds edge ab; throws GraphError on self-loop, duplicate or bad id.
  GraphBuilder& add_edge(Vertex a, Vertex b) {
    const int n = g_.order();
    if (a < 0 || b < 0 || a >= n || b >= n) {
      throw GraphError("vertex id out of range: " + std::to_string(a) + " " +
                       std::to_string(b));
    }
    if (a == b) throw GraphError("self-loop at " + std::to_string(a));
    if (g_.has_edge(a, b)) {
      throw GraphError("duplicate edge " + std::to_string(a) + " " +
                       std::to_string(b));
    }
    set(a, b);
    set(b, a);
    ++g_.m_;
    return *this;
  }

  /// Adds ab unless already present.
  GraphBuilder& ensure_edge(Vertex a, Vertex b) {
    if (!g_.has_edge(a, b)) add_edge(a, b);
    return *this;
  }

  Graph build() && { return std::move(g_); }
  Graph build() const& { return g_; }

 private:
  void set(Vertex a, Vertex b) {
    g_.mutable_row(a)[b >> 6] |= std::uint64_t{1} << (b & 63);
  }

  Graph g_;
};

inline Graph Graph::from_edges(int n, std::span<const Edge> edges) {
  GraphBuilder b(n);
  for (const auto& e : edges) b.add_edge(e.u, e.v);
  return std::move(b).build();
}

/// A set of vertices of a graph with n vertices, kept sorted.
class VertexSet {
 public:
  VertexSet() = default;

  VertexSet(int n, std::vector<Vertex> members)
      : n_(n), members_(std::move(members)) {
    std::sort(members_.begin(), members_.end());
    for (std::size_t i = 0; i < members_.size(); ++i) {
      if (members_[i] < 0 || members_[i] >= n_) {
        throw GraphError("vertex " + std::to_string(members_[i]) +
                         " not in 0.." + std::to_string(n_ - 1));
      }
      if (i > 0 && members_[i] == members_[i - 1]) {
        throw GraphError("duplicate vertex " + std::to_string(members_[i]));
      }
    }
  }

  static VertexSet from_mask(int n, std::uint64_t mask) {
    std::vector<Vertex> m;
    for (; mask; mask &= mask - 1) m.push_back(std::countr_zero(mask));
    return VertexSet(n, std::move(m));
  }

  int universe() const { return n_; }
  int size() const { return static_cast<int>(members_.size()); }
  bool empty() const { return members_.empty(); }
  std::span<const Vertex> members() const { return members_; }
  Vertex operator[](std::size_t i) const { return members_[i]; }

  bool contains(Vertex v) const {
    return std::binary_search(members_.begin(), members_.end(), v);
  }

  /// Bit mask of members. Only valid when universe() <= 64.
  std::uint64_t mask() const {
    std::uint64_t m = 0;
    for (auto v : members_) m |= std::uint64_t{1} << v;
    return m;
  }

  /// V - S.
  VertexSet complement() const {
    std::vector<Vertex> out;
    for (Vertex v = 0; v < n_; ++v) {
      if (!contains(v)) out.push_back(v);
    }
    return VertexSet(n_, std::move(out));
  }

  friend bool operator==(const VertexSet&, const VertexSet&) = default;

 private:
  int n_ = 0;
  std::vector<Vertex> members_;
};

/// Number of edges with one end in S and the other outside S.
inline int cut_size(const Graph& g, const VertexSet& s) {
  int c = 0;
  for (auto v : s.members()) {
    for (auto w : g.neighbors(v)) {
      if (!s.contains(w)) ++c;
    }
  }
  return c;
}

/// Vertex-induced subgraph with vertices relabeled in ascending order.
inline Graph induced_subgraph(const Graph& g, std::span<const Vertex> keep) {
  GraphBuilder b(static_cast<int>(keep.size()));
  for (std::size_t i = 0; i < keep.size(); ++i) {
    for (std::size_t j = i + 1; j < keep.size(); ++j) {
      if (g.has_edge(keep[i], keep[j])) {
        b.add_edge(static_cast<int>(i), static_cast<int>(j));
      }
    }
  }
  return std::move(b).build();
}

inline Graph remove_edge(const Graph& g, Edge e) {
  GraphBuilder b(g.order());
  for (const auto& f : g.edges()) {
    if (f != e) b.add_edge(f.u, f.v);
  }
  return std::move(b).build();
}

}  // namespace ptc

#endif  // PTC_GRAPH_HPP
