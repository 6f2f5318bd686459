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

#ifndef PTC_KAPPA_HPP
#define PTC_KAPPA_HPP

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>
#include <vector>

#include "ptc/connectivity.hpp"
#include "ptc/graph.hpp"
#include "ptc/pendant_tree.hpp"
#include "ptc/search.hpp"
#include "ptc/tau.hpp"

namespace ptc {

namespace detail {

// Internally disjoint S-Steiner trees without the pendant condition. A tree
// is described by its non-terminal vertex set A and the set X of edges it
// uses inside S; the remaining edges all touch A and therefore belong to a
// single tree. Trees with disjoint A and disjoint X can always be realised
// simultaneously, so the search packs such pairs.
class KappaSearch {
 public:
  KappaSearch(const Graph& g, std::uint64_t terminals, int cap,
              std::uint64_t budget)
      : adj_(adjacency_masks(g)), s_(terminals), cap_(cap), nodes_(budget) {
    const int n = g.order();
    for (auto t = s_; t; t &= t - 1) term_.push_back(lowest(t));
    for (const auto& e : g.edges()) {
      if (((s_ >> e.u) & 1) && ((s_ >> e.v) & 1)) ss_.push_back(e);
    }
    if (ss_.size() > 64) {
      throw GraphError("generalized oracle supports at most 64 edges inside S");
    }
    ss_at_.assign(n, 0);
    for (std::size_t i = 0; i < ss_.size(); ++i) {
      ss_at_[ss_[i].u] |= bit(static_cast<int>(i));
      ss_at_[ss_[i].v] |= bit(static_cast<int>(i));
    }
    const std::uint64_t all = n == 64 ? ~std::uint64_t{0} : bit(n) - 1;
    free_ = all & ~s_;
  }

  struct Item {
    std::uint64_t inner;
    std::uint64_t x;
  };

  int run(std::vector<Item>& chosen) {
    std::uint64_t ext = 0;
    for (auto t : term_) ext |= adj_[t];
    grow(0, ext & free_, 0);
    by_vertex_.assign(adj_.size(), {});
    by_edge_.assign(ss_.size(), {});
    for (std::size_t i = 0; i < items_.size(); ++i) {
      for (auto m = items_[i].inner; m; m &= m - 1) by_vertex_[lowest(m)].push_back(i);
      for (auto m = items_[i].x; m; m &= m - 1) by_edge_[lowest(m)].push_back(i);
    }
    best_ = 0;
    std::uint64_t all_x =
        ss_.size() == 64 ? ~std::uint64_t{0} : bit(static_cast<int>(ss_.size())) - 1;
    root_ub_ = upper_bound(free_, all_x);
    search(free_, all_x);
    chosen = best_sets_;
    return best_;
  }

  bool capped() const { return best_ >= cap_; }
  const std::vector<Edge>& inner_edges() const { return ss_; }

 private:
  // Labels components of the graph on S + A formed by the edges touching A
  // together with the S-edges in x. Returns the component count.
  int components(std::uint64_t a, std::uint64_t x, std::vector<int>& label) const {
    const std::uint64_t vs = s_ | a;
    label.assign(adj_.size(), -1);
    int c = 0;
    for (auto m = vs; m; m &= m - 1) {
      const int root = lowest(m);
      if (label[root] >= 0) continue;
      std::vector<int> stack{root};
      label[root] = c;
      while (!stack.empty()) {
        const int u = stack.back();
        stack.pop_back();
        std::uint64_t nb = adj_[u] & vs;
        if ((s_ >> u) & 1) {
          nb &= a;
          for (auto e = ss_at_[u] & x; e; e &= e - 1) {
            const auto& ed = ss_[lowest(e)];
            nb |= bit(ed.u == u ? ed.v : ed.u);
          }
        }
        for (; nb; nb &= nb - 1) {
          const int w = lowest(nb);
          if (label[w] < 0) {
            label[w] = c;
            stack.push_back(w);
          }
        }
      }
      ++c;
    }
    return c;
  }

  bool removable_vertex(std::uint64_t a, std::uint64_t x) const {
    std::vector<int> label;
    for (auto m = a; m; m &= m - 1) {
      if (components(a & ~(m & (~m + 1)), x, label) == 1) return true;
    }
    return false;
  }

  // Enumerates A with S + A connected after contracting S, stopping at sets
  // that already span S on their own.
  void grow(std::uint64_t a, std::uint64_t ext, std::uint64_t excluded) {
    nodes_.tick();
    std::vector<int> label;
    const int c = components(a, 0, label);
    if (c == 1) {
      if (!removable_vertex(a, 0)) items_.push_back({a, 0});
      return;
    }
    add_connectors(a, label, c);
    while (ext) {
      const auto wb = ext & (~ext + 1);
      ext &= ~wb;
      const auto grown = adj_[lowest(wb)] & free_ & ~a & ~excluded & ~wb;
      grow(a | wb, ext | grown, excluded);
      excluded |= wb;
    }
  }

  // Every spanning tree of the quotient by the components, using S-edges.
  void add_connectors(std::uint64_t a, const std::vector<int>& label, int comps) {
    std::vector<int> uf(comps);
    pick_edges(a, label, 0, 0, comps - 1, uf);
  }

  void pick_edges(std::uint64_t a, const std::vector<int>& label, std::size_t i,
                  std::uint64_t x, int need, std::vector<int>& uf) {
    if (need == 0) {
      if (!removable_vertex(a, x)) items_.push_back({a, x});
      return;
    }
    if (ss_.size() - i < static_cast<std::size_t>(need)) return;
    nodes_.tick();
    std::iota(uf.begin(), uf.end(), 0);
    auto find = [&uf](int v) {
      while (uf[v] != v) v = uf[v];
      return v;
    };
    for (auto m = x; m; m &= m - 1) {
      const auto& e = ss_[lowest(m)];
      uf[find(label[e.u])] = find(label[e.v]);
    }
    const auto& e = ss_[i];
    if (find(label[e.u]) != find(label[e.v])) {
      pick_edges(a, label, i + 1, x | bit(static_cast<int>(i)), need - 1, uf);
    }
    pick_edges(a, label, i + 1, x, need, uf);
  }

  int degree(int t, std::uint64_t free_avail, std::uint64_t x_avail) const {
    return std::popcount(adj_[t] & free_avail) + std::popcount(ss_at_[t] & x_avail);
  }

  int upper_bound(std::uint64_t free_avail, std::uint64_t x_avail) const {
    int ub = std::popcount(free_avail) +
             std::popcount(x_avail) / static_cast<int>(term_.size() - 1);
    for (auto t : term_) ub = std::min(ub, degree(t, free_avail, x_avail));
    return ub;
  }

  bool done() const { return best_ >= cap_ || best_ >= root_ub_; }

  void search(std::uint64_t free_avail, std::uint64_t x_avail) {
    nodes_.tick();
    const int count = static_cast<int>(cur_.size());
    if (count > best_) {
      best_ = count;
      best_sets_ = cur_;
    }
    if (done()) return;
    if (count + upper_bound(free_avail, x_avail) <= best_) return;
    int pick = -1, fewest = kNoCap;
    for (auto t : term_) {
      const int d = degree(t, free_avail, x_avail);
      if (d < fewest) {
        fewest = d;
        pick = t;
      }
    }
    // Branch on one resource next to the tightest terminal: a free
    // neighbour if there is one, otherwise an S-edge at it.
    const auto nb = adj_[pick] & free_avail;
    const bool on_vertex = nb != 0;
    const int r = on_vertex ? lowest(nb) : lowest(ss_at_[pick] & x_avail);
    const auto& list = on_vertex ? by_vertex_[r] : by_edge_[r];
    for (auto i : list) {
      const auto& it = items_[i];
      if ((it.inner & free_avail) != it.inner || (it.x & x_avail) != it.x) continue;
      cur_.push_back(it);
      search(free_avail & ~it.inner, x_avail & ~it.x);
      cur_.pop_back();
      if (done()) return;
    }
    if (on_vertex) {
      search(free_avail & ~bit(r), x_avail);
    } else {
      search(free_avail, x_avail & ~bit(r));
    }
  }

  std::vector<std::uint64_t> adj_;
  std::uint64_t s_;
  std::uint64_t free_ = 0;
  std::vector<int> term_;
  std::vector<Edge> ss_;
  std::vector<std::uint64_t> ss_at_;
  int cap_;
  NodeCounter nodes_;
  std::vector<Item> items_;
  std::vector<std::vector<std::size_t>> by_vertex_, by_edge_;
  int root_ub_ = 0;
  int best_ = 0;
  std::vector<Item> best_sets_, cur_;
};

inline TreeEdges realise_tree(const Graph& g, std::uint64_t terminals,
                              const KappaSearch::Item& it,
                              const std::vector<Edge>& ss) {
  std::vector<int> uf(g.order());
  std::iota(uf.begin(), uf.end(), 0);
  auto find = [&uf](int v) {
    while (uf[v] != v) v = uf[v] = uf[uf[v]];
    return v;
  };
  TreeEdges t;
  auto take = [&](Edge e) {
    const int a = find(e.u), b = find(e.v);
    if (a == b) return;
    uf[a] = b;
    t.push_back(e);
  };
  for (auto m = it.x; m; m &= m - 1) take(ss[lowest(m)]);
  const auto vs = terminals | it.inner;
  for (const auto& e : g.edges()) {
    if (((vs >> e.u) & 1) && ((vs >> e.v) & 1) &&
        (((it.inner >> e.u) & 1) || ((it.inner >> e.v) & 1))) {
      take(e);
    }
  }
  std::sort(t.begin(), t.end());
  return t;
}

inline LocalResult kappa_local_capped(const Graph& g, const VertexSet& s,
                                      int cap, std::uint64_t budget) {
  check_local_args(g, s);
  LocalResult r;
  r.witness.terminals = s;
  r.witness.mode = PackingMode::kInternal;
  if (!is_connected(g)) return r;
  KappaSearch search(g, s.mask(), cap, budget);
  std::vector<KappaSearch::Item> items;
  r.value = search.run(items);
  r.exhausted = !search.capped();
  for (const auto& it : items) {
    r.witness.trees.push_back(realise_tree(g, s.mask(), it, search.inner_edges()));
  }
  return r;
}

}  // namespace detail

/// Maximum number of internally disjoint S-Steiner trees (no pendant
/// condition). The witness verifies under verify_steiner_packing.
inline LocalResult kappa_local(const Graph& g, const VertexSet& s,
                               const SearchOptions& opt = {}) {
  return detail::kappa_local_capped(g, s, kNoCap, opt.node_budget);
}

inline GlobalResult kappa_k_with_witness(const Graph& g, int k,
                                         const SearchOptions& opt = {}) {
  detail::check_k(g, k);
  const int n = g.order();
  if (!is_connected(g)) {
    const auto s = VertexSet::from_mask(n, detail::k_subsets(n, k).front());
    return {0, s, detail::kappa_local_capped(g, s, kNoCap, opt.node_budget)};
  }
  auto m = detail::minimize_over_subsets<LocalResult>(
      n, k, opt.jobs, [&](std::uint64_t mask, int cap) {
        return detail::kappa_local_capped(g, VertexSet::from_mask(n, mask), cap,
                                          opt.node_budget);
      });
  return {m.value, VertexSet::from_mask(n, m.argmin), std::move(m.witness)};
}

/// Generalized k-connectivity; 0 for disconnected G.
inline int kappa_k(const Graph& g, int k, const SearchOptions& opt = {}) {
  return kappa_k_with_witness(g, k, opt).value;
}

}  // namespace ptc

#endif  // PTC_KAPPA_HPP
