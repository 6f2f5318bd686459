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

#ifndef PTC_NAIVE_HPP
#define PTC_NAIVE_HPP

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>
#include <vector>

#include "ptc/connectivity.hpp"
#include "ptc/graph.hpp"
#include "ptc/pendant_tree.hpp"
#include "ptc/search.hpp"

namespace ptc {

namespace detail {

// Definition-level reference: list every pendant S-Steiner tree whose
// leaves all lie in S as an explicit edge set, then find a largest
// internally disjoint family. Shares no search code with tau_local.
class NaiveTau {
 public:
  NaiveTau(const Graph& g, const VertexSet& s) : g_(g), s_(s), edges_(g.edges()) {
    if (edges_.size() > 64) throw GraphError("naive oracle supports e(G) <= 64");
    parent_.resize(g.order());
    degree_.assign(g.order(), 0);
  }

  int run() {
    chosen_.clear();
    enumerate(0);
    std::sort(trees_.begin(), trees_.end(), [](const Tree& a, const Tree& b) {
      return std::popcount(a.inner) < std::popcount(b.inner);
    });
    std::uint64_t free_vertices = 0;
    for (Vertex v = 0; v < g_.order(); ++v) {
      if (!s_.contains(v)) free_vertices |= std::uint64_t{1} << v;
    }
    best_ = 0;
    pack(0, 0, 0, free_vertices, 0);
    return best_;
  }

 private:
  struct Tree {
    std::uint64_t edges;
    std::uint64_t inner;
  };

  // Include/exclude over edges in lexicographic order, keeping a forest in
  // which terminals have degree <= 1.
  void enumerate(std::size_t i) {
    if (i == edges_.size()) {
      consider();
      return;
    }
    enumerate(i + 1);
    const auto e = edges_[i];
    if (s_.contains(e.u) && degree_[e.u] >= 1) return;
    if (s_.contains(e.v) && degree_[e.v] >= 1) return;
    if (creates_cycle(e)) return;
    chosen_.push_back(e);
    ++degree_[e.u];
    ++degree_[e.v];
    enumerate(i + 1);
    --degree_[e.u];
    --degree_[e.v];
    chosen_.pop_back();
  }

  bool creates_cycle(Edge e) {
    std::iota(parent_.begin(), parent_.end(), 0);
    auto find = [this](int v) {
      while (parent_[v] != v) v = parent_[v];
      return v;
    };
    for (auto f : chosen_) parent_[find(f.u)] = find(f.v);
    return find(e.u) == find(e.v);
  }

  void consider() {
    if (chosen_.empty()) return;
    for (Vertex v = 0; v < g_.order(); ++v) {
      if (degree_[v] == 1 && !s_.contains(v)) return;
    }
    if (!is_pendant_steiner_tree(g_, s_, chosen_)) return;
    Tree t{0, 0};
    for (auto e : chosen_) {
      const auto idx = std::find(edges_.begin(), edges_.end(), e) - edges_.begin();
      t.edges |= std::uint64_t{1} << idx;
      for (auto v : {e.u, e.v}) {
        if (!s_.contains(v)) t.inner |= std::uint64_t{1} << v;
      }
    }
    trees_.push_back(t);
  }

  void pack(std::size_t from, int count, std::uint64_t used_edges,
            std::uint64_t free_left, int direct_used) {
    best_ = std::max(best_, count);
    int bound = count + std::popcount(free_left);
    if (s_.size() == 2 && !direct_used) ++bound;
    if (bound <= best_) return;
    for (std::size_t i = from; i < trees_.size(); ++i) {
      const auto& t = trees_[i];
      if (t.edges & used_edges) continue;
      if ((t.inner & free_left) != t.inner) continue;
      pack(i + 1, count + 1, used_edges | t.edges, free_left & ~t.inner,
           direct_used || t.inner == 0);
    }
  }

  const Graph& g_;
  const VertexSet& s_;
  std::vector<Edge> edges_;
  std::vector<Edge> chosen_;
  std::vector<int> parent_;
  std::vector<int> degree_;
  std::vector<Tree> trees_;
  int best_ = 0;
};

}  // namespace detail

/// Reference value of tau_local computed straight from the definition.
/// Exponential in e(G); meant for n <= 10.
inline int tau_local_naive(const Graph& g, const VertexSet& s) {
  detail::check_local_args(g, s);
  if (!is_connected(g)) return 0;
  return detail::NaiveTau(g, s).run();
}

}  // namespace ptc

#endif  // PTC_NAIVE_HPP
