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

#ifndef PTC_TRANSFORMS_HPP
#define PTC_TRANSFORMS_HPP

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "ptc/graph.hpp"

namespace ptc {

inline Graph complement(const Graph& g) {
  GraphBuilder b(g.order());
  for (Vertex u = 0; u < g.order(); ++u) {
    for (Vertex v = u + 1; v < g.order(); ++v) {
      if (!g.has_edge(u, v)) b.add_edge(u, v);
    }
  }
  return std::move(b).build();
}

/// Bijection between the edges of G and the vertices of L(G). Vertex i of
/// L(G) is the i-th edge of G in lexicographic order.
class LineGraphMap {
 public:
  LineGraphMap() = default;
  explicit LineGraphMap(std::vector<Edge> edges) : edges_(std::move(edges)) {}

  int size() const { return static_cast<int>(edges_.size()); }
  Edge edge_of(Vertex line_vertex) const { return edges_.at(line_vertex); }

  /// Line-graph vertex of edge e, or -1 if e is not an edge of G.
  Vertex vertex_of(Edge e) const {
    auto it = std::lower_bound(edges_.begin(), edges_.end(), e);
    if (it == edges_.end() || *it != e) return -1;
    return static_cast<Vertex>(it - edges_.begin());
  }

  const std::vector<Edge>& edges() const { return edges_; }

 private:
  std::vector<Edge> edges_;
};

struct LineGraph {
  Graph graph;
  LineGraphMap map;
};

/// L(G): one vertex per edge of G, adjacent when the edges share an end.
inline LineGraph line_graph(const Graph& g) {
  auto edges = g.edges();
  if (edges.empty()) {
    throw std::invalid_argument("line graph of an edgeless graph is empty");
  }
  const int m = static_cast<int>(edges.size());
  GraphBuilder b(m);
  std::vector<std::vector<Vertex>> incident(g.order());
  for (int i = 0; i < m; ++i) {
    incident[edges[i].u].push_back(i);
    incident[edges[i].v].push_back(i);
  }
  for (const auto& list : incident) {
    for (std::size_t i = 0; i < list.size(); ++i) {
      for (std::size_t j = i + 1; j < list.size(); ++j) {
        b.ensure_edge(list[i], list[j]);
      }
    }
  }
  return {std::move(b).build(), LineGraphMap(std::move(edges))};
}

/// G □ H with vertex (u, v) labeled u * |V(H)| + v.
inline Graph cartesian_product(const Graph& g, const Graph& h) {
  const int ng = g.order(), nh = h.order();
  GraphBuilder b(ng * nh);
  for (Vertex u = 0; u < ng; ++u) {
    for (const auto& e : h.edges()) b.add_edge(u * nh + e.u, u * nh + e.v);
  }
  for (Vertex v = 0; v < nh; ++v) {
    for (const auto& e : g.edges()) b.add_edge(e.u * nh + v, e.v * nh + v);
  }
  return std::move(b).build();
}

// Named families used throughout tests, constructions and the CLI.

inline Graph complete_graph(int n) {
  GraphBuilder b(n);
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) b.add_edge(u, v);
  }
  return std::move(b).build();
}

inline Graph empty_graph(int n) { return Graph(n); }

/// K_{a,b} with parts {0..a-1} and {a..a+b-1}.
inline Graph complete_bipartite(int a, int b) {
  if (a < 1 || b < 1) throw std::invalid_argument("K_{a,b} needs a, b >= 1");
  GraphBuilder g(a + b);
  for (int i = 0; i < a; ++i) {
    for (int j = 0; j < b; ++j) g.add_edge(i, a + j);
  }
  return std::move(g).build();
}

/// K_{1,r} with center 0.
inline Graph star(int r) { return complete_bipartite(1, r); }

inline Graph path_graph(int n) {
  GraphBuilder b(n);
  for (int i = 0; i + 1 < n; ++i) b.add_edge(i, i + 1);
  return std::move(b).build();
}

inline Graph cycle_graph(int n) {
  if (n < 3) throw std::invalid_argument("cycle needs n >= 3");
  GraphBuilder b(n);
  for (int i = 0; i < n; ++i) b.add_edge(i, (i + 1) % n);
  return std::move(b).build();
}

/// Outer 5-cycle 0..4, inner pentagram 5..9, spokes i -- i+5.
inline Graph petersen_graph() {
  GraphBuilder b(10);
  for (int i = 0; i < 5; ++i) {
    b.add_edge(i, (i + 1) % 5);
    b.add_edge(5 + i, 5 + (i + 2) % 5);
    b.add_edge(i, i + 5);
  }
  return std::move(b).build();
}

/// K_r □ K_s, the r x s rook's graph.
inline Graph rook_graph(int r, int s) {
  return cartesian_product(complete_graph(r), complete_graph(s));
}

/// K_n minus the given edges.
inline Graph complete_minus(int n, std::span<const Edge> removed) {
  GraphBuilder b(n);
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      const bool gone =
          std::any_of(removed.begin(), removed.end(), [&](const Edge& e) {
            return make_edge(e.u, e.v) == Edge{u, v};
          });
      if (!gone) {
        b.add_edge(u, v);
      }
    }
  }
  return std::move(b).build();
}

}  // namespace ptc

#endif  // PTC_TRANSFORMS_HPP
