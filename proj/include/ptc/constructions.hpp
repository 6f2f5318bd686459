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

#ifndef PTC_CONSTRUCTIONS_HPP
#define PTC_CONSTRUCTIONS_HPP

#include <algorithm>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "ptc/closed_forms.hpp"
#include "ptc/graph.hpp"
#include "ptc/pendant_tree.hpp"
#include "ptc/transforms.hpp"

namespace ptc {

/// A graph, a claimed value of tau_k, and a packing at one terminal set
/// that attains the claim.
struct InstanceCertificate {
  Graph graph;
  int k = 3;
  int claimed_value = 0;
  Packing packing;
  std::string provenance;
};

namespace detail {

inline TreeEdges tree_of(std::initializer_list<std::pair<Vertex, Vertex>> edges) {
  TreeEdges t;
  for (auto [a, b] : edges) t.push_back(make_edge(a, b));
  std::sort(t.begin(), t.end());
  return t;
}

inline Packing internal_packing(const VertexSet& s) {
  Packing p;
  p.terminals = s;
  p.mode = PackingMode::kInternal;
  return p;
}

}  // namespace detail

/// One star per vertex outside S, in increasing order: n - |S| trees in K_n.
inline Packing pack_complete(int n, const VertexSet& s) {
  detail::require(s.universe() == n, "terminal set universe must be n");
  detail::require(3 <= s.size() && s.size() <= n, "need 3 <= |S| <= n");
  auto p = detail::internal_packing(s);
  for (Vertex v = 0; v < n; ++v) {
    if (s.contains(v)) continue;
    TreeEdges t;
    for (auto x : s.members()) t.push_back(make_edge(x, v));
    std::sort(t.begin(), t.end());
    p.trees.push_back(std::move(t));
  }
  return p;
}

/// a-2 trees in K_{a,b} (parts {0..a-1} and {a..a+b-1}, 2 <= a <= b) for a
/// 3-set S, by the number of terminals in the first part.
inline Packing pack_complete_bipartite_k3(int a, int b, const VertexSet& s) {
  detail::require(2 <= a && a <= b, "need 2 <= a <= b");
  detail::require(s.universe() == a + b, "terminal set universe must be a+b");
  detail::require(s.size() == 3, "need |S| = 3");
  auto p = detail::internal_packing(s);
  std::vector<Vertex> in_a, in_b, free_a, free_b;
  for (Vertex v = 0; v < a + b; ++v) {
    const bool left = v < a;
    if (s.contains(v)) {
      (left ? in_a : in_b).push_back(v);
    } else {
      (left ? free_a : free_b).push_back(v);
    }
  }
  const std::size_t want = static_cast<std::size_t>(a - 2);
  auto stars = [&](const std::vector<Vertex>& centres) {
    for (std::size_t i = 0; i < want; ++i) {
      const Vertex c = centres[i];
      p.trees.push_back(detail::tree_of({{s[0], c}, {s[1], c}, {s[2], c}}));
    }
  };
  if (in_a.size() == 3) {
    stars(free_b);
  } else if (in_b.size() == 3) {
    stars(free_a);
  } else if (in_a.size() == 2) {
    // x, y in A and z in B: x, y -> v in B -> u in A -> z.
    const Vertex x = in_a[0], y = in_a[1], z = in_b[0];
    for (std::size_t i = 0; i < want; ++i) {
      const Vertex v = free_b[i], u = free_a[i];
      p.trees.push_back(detail::tree_of({{x, v}, {y, v}, {v, u}, {u, z}}));
    }
  } else {
    // x in A and y, z in B: y, z -> u in A -> v in B -> x.
    const Vertex x = in_a[0], y = in_b[0], z = in_b[1];
    for (std::size_t i = 0; i < want; ++i) {
      const Vertex u = free_a[i], v = free_b[i];
      p.trees.push_back(detail::tree_of({{y, u}, {z, u}, {u, v}, {v, x}}));
    }
  }
  return p;
}

/// Row-major labels of K_r x K_s: vertex (i, j) is i*s + j. Two vertices
/// are adjacent iff they share exactly one coordinate.
struct RookCoordinates {
  int r = 0;
  int s = 0;

  Vertex at(int row, int col) const { return row * s + col; }
  int row(Vertex v) const { return v / s; }
  int col(Vertex v) const { return v % s; }
};

namespace detail {

// Trees through three terminals in distinct rows and distinct columns.
inline void rook_distinct_rows_distinct_cols(const RookCoordinates& g, Vertex x,
                                             Vertex y, Vertex z, Packing& p) {
  const int rx = g.row(x), ry = g.row(y), rz = g.row(z);
  const int cx = g.col(x), cy = g.col(y), cz = g.col(z);
  const Vertex x1 = g.at(ry, cx), x2 = g.at(rz, cx);  // below x
  const Vertex y1 = g.at(rx, cy), y2 = g.at(rz, cy);
  const Vertex z1 = g.at(rx, cz), z2 = g.at(ry, cz);
  p.trees.push_back(tree_of({{x, x1}, {x1, y}, {x1, x2}, {x2, z}}));
  p.trees.push_back(tree_of({{x, z1}, {z1, z2}, {y, z2}, {z2, z}}));
  p.trees.push_back(tree_of({{x, y1}, {y, y1}, {y1, y2}, {y2, z}}));
  for (int c = 0; c < g.s; ++c) {
    if (c == cx || c == cy || c == cz) continue;
    const Vertex u = g.at(rx, c), u1 = g.at(ry, c), u2 = g.at(rz, c);
    p.trees.push_back(tree_of({{x, u}, {y, u1}, {u2, z}, {u, u1}, {u1, u2}}));
  }
  for (int j = 0; j < g.r; ++j) {
    if (j == rx || j == ry || j == rz) continue;
    const Vertex xj = g.at(j, cx), yj = g.at(j, cy), zj = g.at(j, cz);
    p.trees.push_back(tree_of({{x, xj}, {y, yj}, {z, zj}, {xj, yj}, {yj, zj}}));
  }
}

// Distinct rows; y and z share a column, x does not.
inline void rook_distinct_rows_one_pair(const RookCoordinates& g, Vertex x,
                                        Vertex y, Vertex z, Packing& p) {
  const int rx = g.row(x), ry = g.row(y), rz = g.row(z);
  const int a = g.col(x), b = g.col(y);
  const Vertex x1 = g.at(ry, a), x2 = g.at(rz, a);
  p.trees.push_back(tree_of({{x, x1}, {x1, y}, {x1, x2}, {x2, z}}));
  const Vertex hub = g.at(rx, b);
  p.trees.push_back(tree_of({{x, hub}, {y, hub}, {z, hub}}));
  for (int c = 0; c < g.s; ++c) {
    if (c == a || c == b) continue;
    const Vertex u = g.at(rx, c), u1 = g.at(ry, c), u2 = g.at(rz, c);
    p.trees.push_back(tree_of({{x, u}, {y, u1}, {z, u2}, {u, u1}, {u1, u2}}));
  }
  for (int j = 0; j < g.r; ++j) {
    if (j == rx || j == ry || j == rz) continue;
    const Vertex xj = g.at(j, a), yj = g.at(j, b);
    p.trees.push_back(tree_of({{x, xj}, {y, yj}, {z, yj}, {xj, yj}}));
  }
}

// Distinct rows, one common column.
inline void rook_distinct_rows_one_col(const RookCoordinates& g, Vertex x,
                                       Vertex y, Vertex z, Packing& p) {
  const int rx = g.row(x), ry = g.row(y), rz = g.row(z);
  const int a = g.col(x);
  for (int c = 0; c < g.s; ++c) {
    if (c == a) continue;
    const Vertex u = g.at(rx, c), u1 = g.at(ry, c), u2 = g.at(rz, c);
    p.trees.push_back(tree_of({{x, u}, {y, u1}, {z, u2}, {u, u1}, {u1, u2}}));
  }
  for (int j = 0; j < g.r; ++j) {
    if (j == rx || j == ry || j == rz) continue;
    const Vertex hub = g.at(j, a);
    p.trees.push_back(tree_of({{x, hub}, {y, hub}, {z, hub}}));
  }
}

// x and y share a row, z lies in another row and not below x.
inline void rook_two_in_row(const RookCoordinates& g, Vertex x, Vertex y,
                            Vertex z, Packing& p) {
  const int r1 = g.row(x), r2 = g.row(z);
  const int a = g.col(x), b = g.col(y), c = g.col(z);
  if (c != b) {
    const Vertex z1 = g.at(r1, c);
    p.trees.push_back(tree_of({{z, z1}, {x, z1}, {y, z1}}));
  }
  for (int d = 0; d < g.s; ++d) {
    if (d == a || d == b || d == c) continue;
    const Vertex v = g.at(r1, d), v1 = g.at(r2, d);
    p.trees.push_back(tree_of({{x, v}, {y, v}, {v, v1}, {v1, z}}));
  }
  for (int j = 0; j < g.r; ++j) {
    if (j == r1 || j == r2) continue;
    const Vertex xj = g.at(j, a), yj = g.at(j, b), zj = g.at(j, c);
    if (c != b) {
      p.trees.push_back(tree_of({{x, xj}, {y, yj}, {z, zj}, {xj, zj}, {yj, zj}}));
    } else {
      p.trees.push_back(tree_of({{x, xj}, {y, yj}, {z, yj}, {xj, yj}}));
    }
  }
}

// All three in one row.
inline void rook_one_row(const RookCoordinates& g, Vertex x, Vertex y, Vertex z,
                         Packing& p) {
  const int r0 = g.row(x);
  const int a = g.col(x), b = g.col(y), c = g.col(z);
  for (int d = 0; d < g.s; ++d) {
    if (d == a || d == b || d == c) continue;
    const Vertex hub = g.at(r0, d);
    p.trees.push_back(tree_of({{x, hub}, {y, hub}, {z, hub}}));
  }
  for (int j = 0; j < g.r; ++j) {
    if (j == r0) continue;
    const Vertex xj = g.at(j, a), yj = g.at(j, b), zj = g.at(j, c);
    p.trees.push_back(tree_of({{x, xj}, {y, yj}, {z, zj}, {xj, yj}, {yj, zj}}));
  }
}

}  // namespace detail

/// Internally disjoint pendant trees for a 3-set S in K_r x K_s (r, s >= 3),
/// at least r+s-4 of them. Roles x, y, z are assigned by the row/column
/// pattern of S; unused rows and columns are taken in increasing order.
inline Packing pack_rook_k3(int r, int s, const VertexSet& terms) {
  detail::require(r >= 3 && s >= 3, "need r, s >= 3");
  detail::require(terms.universe() == r * s, "terminal set universe must be r*s");
  detail::require(terms.size() == 3, "need |S| = 3");
  const RookCoordinates g{r, s};
  auto p = detail::internal_packing(terms);
  Vertex x = terms[0], y = terms[1], z = terms[2];
  const int rows = 1 + (g.row(y) != g.row(x)) + (g.row(z) != g.row(y));
  if (rows == 1) {
    detail::rook_one_row(g, x, y, z, p);
  } else if (rows == 2) {
    // Labels are row-major, so the pair sharing a row is adjacent in order.
    if (g.row(x) != g.row(y)) std::swap(x, z);  // now x, y share the row
    if (g.col(z) == g.col(x)) std::swap(x, y);
    detail::rook_two_in_row(g, x, y, z, p);
  } else {
    const int cx = g.col(x), cy = g.col(y), cz = g.col(z);
    if (cx != cy && cy != cz && cx != cz) {
      detail::rook_distinct_rows_distinct_cols(g, x, y, z, p);
    } else if (cx == cy && cy == cz) {
      detail::rook_distinct_rows_one_col(g, x, y, z, p);
    } else {
      if (cx == cy) std::swap(x, z);  // pair becomes (z, y)
      else if (cx == cz) std::swap(x, y);  // pair becomes (y, z)
      detail::rook_distinct_rows_one_pair(g, x, y, z, p);
    }
  }
  std::sort(p.trees.begin(), p.trees.end());
  return p;
}

inline InstanceCertificate complete_instance(int n, const VertexSet& s) {
  const int k = s.size();
  return {complete_graph(n), k, tau_complete(n, k), pack_complete(n, s),
          "complete-graph stars"};
}

inline InstanceCertificate bipartite_instance(int a, int b, const VertexSet& s) {
  return {complete_bipartite(a, b), 3, tau_complete_bipartite(a, b, 3),
          pack_complete_bipartite_k3(a, b, s), "complete-bipartite k=3"};
}

/// Certificate for tau_3(K_r x K_s) = r+s-4; the packing is cut down to the
/// claimed size when a terminal pattern admits more trees.
inline InstanceCertificate rook_instance(int r, int s, const VertexSet& terms) {
  auto p = pack_rook_k3(r, s, terms);
  const int claim = tau_rook(r, s);
  p.trees.resize(static_cast<std::size_t>(claim));
  return {rook_graph(r, s), 3, claim, std::move(p), "rook-graph k=3"};
}

/// For 1 < p and q >= 2p: G = K_{p+2, q-p+2} has tau_3 = p and its line
/// graph, the rook's graph K_{p+2} x K_{q-p+2}, has tau_3 = q.
inline std::pair<InstanceCertificate, InstanceCertificate> theorem41_instance(
    int p, int q) {
  detail::require(p > 1 && q >= 2 * p, "need 1 < p and q >= 2p");
  const int a = p + 2, b = q - p + 2;
  const VertexSet mixed(a + b, {0, 1, a});
  auto base = bipartite_instance(a, b, mixed);
  base.provenance = "prescribed pair, base graph";
  const Graph line = line_graph(base.graph).graph;
  auto lifted = rook_instance(a, b, VertexSet(a * b, {0, 1, 2}));
  if (!(lifted.graph == line)) {
    throw std::logic_error("line graph of K_{a,b} differs from rook labelling");
  }
  lifted.provenance = "prescribed pair, line graph";
  return {std::move(base), std::move(lifted)};
}

}  // namespace ptc

#endif  // PTC_CONSTRUCTIONS_HPP
