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

#ifndef PTC_TAU_HPP
#define PTC_TAU_HPP

#include <algorithm>
#include <bit>
#include <cstdint>
#include <vector>

#include "ptc/connectivity.hpp"
#include "ptc/graph.hpp"
#include "ptc/pendant_tree.hpp"
#include "ptc/search.hpp"

namespace ptc {

/// Optimum over all k-subsets together with the lexicographically first
/// minimising terminal set and a packing for it.
struct GlobalResult {
  int value = 0;
  VertexSet terminals;
  LocalResult local;
};

namespace detail {

// A pendant S-Steiner tree with |S| >= 2 and internal vertex set A exists
// iff G[A] is connected and every terminal has a neighbour in A. Packing
// trees internally disjointly is then packing disjoint such sets A, plus
// the direct edge when |S| = 2.
class TauSearch {
 public:
  TauSearch(const Graph& g, std::uint64_t terminals, int cap,
            std::uint64_t budget)
      : adj_(adjacency_masks(g)), s_(terminals), cap_(cap), nodes_(budget) {
    for (auto t = s_; t; t &= t - 1) term_.push_back(lowest(t));
    const std::uint64_t all =
        g.order() == 64 ? ~std::uint64_t{0} : bit(g.order()) - 1;
    free_ = all & ~s_;
  }

  /// Maximum number of disjoint internal sets, limited by the cap.
  int run(std::vector<std::uint64_t>& chosen) {
    std::uint64_t pool = 0;
    for (auto rest = free_; rest;) {
      auto comp = reach(adj_, rest & (~rest + 1), free_);
      rest &= ~comp;
      if (dominates(comp)) pool |= comp;
    }
    enumerate_candidates(pool);
    by_vertex_.assign(adj_.size(), {});
    for (std::size_t i = 0; i < cands_.size(); ++i) {
      for (auto m = cands_[i]; m; m &= m - 1) by_vertex_[lowest(m)].push_back(i);
    }
    min_size_ = cands_.empty() ? 1 : std::popcount(cands_.front());
    best_ = 0;
    best_sets_.clear();
    cur_.clear();
    if (!cands_.empty()) pack(pool);
    chosen = best_sets_;
    return best_;
  }

  bool capped() const { return best_ >= cap_; }

 private:
  bool dominates(std::uint64_t a) const {
    for (auto t : term_) {
      if (!(adj_[t] & a)) return false;
    }
    return true;
  }

  bool minimal(std::uint64_t a) const {
    for (auto m = a; m; m &= m - 1) {
      const auto b = a & ~(m & (~m + 1));
      if (b && dominates(b) && connected_mask(adj_, b)) return false;
    }
    return true;
  }

  // Connected sets are grown from their lowest vertex, adding only larger
  // vertices adjacent to the set; growth stops once the set dominates.
  void enumerate_candidates(std::uint64_t pool) {
    cands_.clear();
    for (auto r = pool; r; r &= r - 1) {
      const int v = lowest(r);
      const std::uint64_t allowed = pool & ~((bit(v) << 1) - 1);
      grow(bit(v), adj_[v] & allowed, 0, allowed);
    }
    std::sort(cands_.begin(), cands_.end(), [](auto a, auto b) {
      const int pa = std::popcount(a), pb = std::popcount(b);
      return pa != pb ? pa < pb : a < b;
    });
  }

  // Each frontier vertex is either added or excluded for the rest of the
  // subtree, so every connected set is produced once.
  void grow(std::uint64_t set, std::uint64_t ext, std::uint64_t excluded,
            std::uint64_t allowed) {
    nodes_.tick();
    if (dominates(set)) {
      if (minimal(set)) cands_.push_back(set);
      return;
    }
    while (ext) {
      const auto wb = ext & (~ext + 1);
      ext &= ~wb;
      const auto grown = adj_[lowest(wb)] & allowed & ~set & ~excluded & ~wb;
      grow(set | wb, ext | grown, excluded, allowed);
      excluded |= wb;
    }
  }

  int upper_bound(std::uint64_t avail) const {
    int ub = std::popcount(avail) / min_size_;
    for (auto t : term_) ub = std::min(ub, std::popcount(adj_[t] & avail));
    return ub;
  }

  bool done() const { return best_ >= cap_ || best_ >= root_ub_; }

  void pack(std::uint64_t avail) {
    root_ub_ = upper_bound(avail);
    search(avail);
  }

  void search(std::uint64_t avail) {
    nodes_.tick();
    const int count = static_cast<int>(cur_.size());
    if (count > best_) {
      best_ = count;
      best_sets_ = cur_;
    }
    if (done()) return;
    if (count + upper_bound(avail) <= best_) return;
    // Branch on the lowest available neighbour of the most constrained
    // terminal: some optimal packing either uses it or avoids it.
    int pick = -1, fewest = 65;
    for (auto t : term_) {
      const int d = std::popcount(adj_[t] & avail);
      if (d < fewest) {
        fewest = d;
        pick = t;
      }
    }
    const int v = lowest(adj_[pick] & avail);
    for (auto i : by_vertex_[v]) {
      const auto c = cands_[i];
      if ((c & avail) != c) continue;
      cur_.push_back(c);
      search(avail & ~c);
      cur_.pop_back();
      if (done()) return;
    }
    search(avail & ~bit(v));
  }

  std::vector<std::uint64_t> adj_;
  std::uint64_t s_;
  std::uint64_t free_ = 0;
  std::vector<int> term_;
  int cap_;
  NodeCounter nodes_;
  std::vector<std::uint64_t> cands_;
  std::vector<std::vector<std::size_t>> by_vertex_;
  int min_size_ = 1;
  int root_ub_ = 0;
  int best_ = 0;
  std::vector<std::uint64_t> best_sets_, cur_;
};

/// Spanning tree of G[A] grown breadth-first from its lowest vertex, plus
/// one edge from each terminal to its lowest neighbour in A.
inline TreeEdges tree_through(const Graph& g, std::uint64_t terminals,
                              std::uint64_t a) {
  TreeEdges t;
  std::uint64_t seen = a & (~a + 1);
  std::vector<int> queue{lowest(a)};
  for (std::size_t i = 0; i < queue.size(); ++i) {
    const int u = queue[i];
    for (auto m = g.neighbor_mask(u) & a & ~seen; m; m &= m - 1) {
      const int w = lowest(m);
      seen |= bit(w);
      t.push_back(make_edge(u, w));
      queue.push_back(w);
    }
  }
  for (auto m = terminals; m; m &= m - 1) {
    const int s = lowest(m);
    t.push_back(make_edge(s, lowest(g.neighbor_mask(s) & a)));
  }
  std::sort(t.begin(), t.end());
  return t;
}

inline LocalResult tau_local_capped(const Graph& g, const VertexSet& s,
                                    int cap, std::uint64_t budget) {
  check_local_args(g, s);
  LocalResult r;
  r.witness.terminals = s;
  r.witness.mode = PackingMode::kInternal;
  if (!is_connected(g)) return r;
  if (s.size() == 2 && g.has_edge(s[0], s[1])) {
    r.witness.trees.push_back({make_edge(s[0], s[1])});
  }
  const int direct = r.witness.size();
  TauSearch search(g, s.mask(), cap == kNoCap ? kNoCap : cap - direct, budget);
  std::vector<std::uint64_t> sets;
  r.value = direct + search.run(sets);
  r.exhausted = !search.capped();
  for (auto a : sets) r.witness.trees.push_back(tree_through(g, s.mask(), a));
  return r;
}

}  // namespace detail

/// Maximum number of internally disjoint pendant S-Steiner trees, with a
/// packing attaining it. Requires 2 <= |S| <= n <= 64. Returns 0 when G is
/// disconnected.
inline LocalResult tau_local(const Graph& g, const VertexSet& s,
                             const SearchOptions& opt = {}) {
  return detail::tau_local_capped(g, s, kNoCap, opt.node_budget);
}

/// min over k-subsets S of tau_local(G, S), with the lexicographically first
/// minimising S and its packing.
inline GlobalResult tau_k_with_witness(const Graph& g, int k,
                                       const SearchOptions& opt = {}) {
  detail::check_k(g, k);
  const int n = g.order();
  if (!is_connected(g)) {
    const auto s = VertexSet::from_mask(n, detail::k_subsets(n, k).front());
    return {0, s, detail::tau_local_capped(g, s, kNoCap, opt.node_budget)};
  }
  auto m = detail::minimize_over_subsets<LocalResult>(
      n, k, opt.jobs, [&](std::uint64_t mask, int cap) {
        return detail::tau_local_capped(g, VertexSet::from_mask(n, mask), cap,
                                        opt.node_budget);
      });
  return {m.value, VertexSet::from_mask(n, m.argmin), std::move(m.witness)};
}

inline int tau_k(const Graph& g, int k, const SearchOptions& opt = {}) {
  return tau_k_with_witness(g, k, opt).value;
}

}  // namespace ptc

#endif  // PTC_TAU_HPP
