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

#ifndef PTC_MU_HPP
#define PTC_MU_HPP

#include <algorithm>
#include <bitset>
#include <cstdint>
#include <functional>
#include <vector>

#include "ptc/connectivity.hpp"
#include "ptc/graph.hpp"
#include "ptc/pendant_tree.hpp"
#include "ptc/search.hpp"
#include "ptc/tau.hpp"

namespace ptc {

inline constexpr int kMaxOracleEdges = 256;

namespace detail {

using EdgeMask = std::bitset<kMaxOracleEdges>;

// Edge-disjoint packing of minimal pendant trees (every leaf a terminal).
// Pruning non-terminal leaves keeps a tree pendant and only frees edges, so
// minimal trees suffice.
class MuSearch {
 public:
  MuSearch(const Graph& g, std::uint64_t terminals, int cap,
           std::uint64_t budget)
      : n_(g.order()), edges_(g.edges()), s_(terminals), cap_(cap),
        nodes_(budget) {
    if (static_cast<int>(edges_.size()) > kMaxOracleEdges) {
      throw GraphError("edge-disjoint oracle supports e(G) <= 256");
    }
    inc_.resize(n_);
    for (std::size_t i = 0; i < edges_.size(); ++i) {
      inc_[edges_[i].u].set(i);
      inc_[edges_[i].v].set(i);
    }
    for (auto t = s_; t; t &= t - 1) term_.push_back(lowest(t));
    k_ = static_cast<int>(term_.size());
  }

  /// Edges between two terminals cannot lie in a pendant tree when |S| >= 3.
  EdgeMask usable() const {
    EdgeMask m;
    for (std::size_t i = 0; i < edges_.size(); ++i) {
      if (!((s_ >> edges_[i].u) & 1) || !((s_ >> edges_[i].v) & 1)) m.set(i);
    }
    return m;
  }

  int run(EdgeMask avail, std::vector<EdgeMask>& chosen) {
    best_ = 0;
    best_sets_.clear();
    cur_.clear();
    root_ub_ = upper_bound(avail);
    search(avail);
    chosen = best_sets_;
    return best_;
  }

  bool capped() const { return best_ >= cap_; }

  const std::vector<Edge>& edges() const { return edges_; }

 private:
  bool is_term(int v) const { return (s_ >> v) & 1; }

  int other(std::size_t e, int v) const {
    return edges_[e].u == v ? edges_[e].v : edges_[e].u;
  }

  int upper_bound(const EdgeMask& avail) const {
    int cut = 0, ub = kNoCap;
    for (auto t : term_) {
      const int d = static_cast<int>((inc_[t] & avail).count());
      cut += d;
      ub = std::min(ub, d);
    }
    return std::min(ub, cut / k_);
  }

  bool done() const { return best_ >= cap_ || best_ >= root_ub_; }

  void search(const EdgeMask& avail) {
    nodes_.tick();
    const int count = static_cast<int>(cur_.size());
    if (count > best_) {
      best_ = count;
      best_sets_ = cur_;
    }
    if (done()) return;
    if (count + upper_bound(avail) <= best_) return;
    int pick = -1;
    std::size_t fewest = kMaxOracleEdges + 1;
    for (auto t : term_) {
      const auto d = (inc_[t] & avail).count();
      if (d < fewest) {
        fewest = d;
        pick = t;
      }
    }
    const auto at = inc_[pick] & avail;
    std::size_t e = at._Find_first();
    // Either some tree of an optimal packing uses e, and then a minimal
    // tree through e can replace it, or e stays unused.
    Grow st;
    st.avail = avail;
    st.tree_edges.set(e);
    st.tree_v = bit(pick) | bit(other(e, pick));
    st.deg.assign(n_, 0);
    st.deg[pick] = st.deg[other(e, pick)] = 1;
    grow(st, [&](const EdgeMask& tree) {
      cur_.push_back(tree);
      search(avail & ~tree);
      cur_.pop_back();
      return done();
    });
    if (done()) return;
    auto rest = avail;
    rest.reset(e);
    search(rest);
  }

  struct Grow {
    EdgeMask avail;
    EdgeMask tree_edges;
    EdgeMask excluded;
    std::uint64_t tree_v = 0;
    std::vector<int> deg;
  };

  EdgeMask open_edges(const Grow& st, int v) const {
    auto m = inc_[v] & st.avail & ~st.excluded & ~st.tree_edges;
    for (auto i = m._Find_first(); i < kMaxOracleEdges; i = m._Find_next(i)) {
      if ((st.tree_v >> other(i, v)) & 1) m.reset(i);
    }
    return m;
  }

  // Returns true when the caller asked to stop.
  bool grow(Grow& st, const std::function<bool(const EdgeMask&)>& emit) {
    nodes_.tick();
    const std::uint64_t inner = st.tree_v & ~s_;
    if ((st.tree_v & s_) == s_) {
      for (auto m = inner; m; m &= m - 1) {
        if (st.deg[lowest(m)] < 2) return false;
      }
      return emit(st.tree_edges);
    }
    // A non-terminal leaf with no way out can never become internal.
    for (auto m = inner; m; m &= m - 1) {
      const int v = lowest(m);
      if (st.deg[v] < 2 && open_edges(st, v).none()) return false;
    }
    // Every missing terminal must still be reachable through new
    // non-terminal vertices.
    std::uint64_t seen = st.tree_v;
    std::vector<int> stack;
    for (auto m = inner; m; m &= m - 1) stack.push_back(lowest(m));
    const auto open = st.avail & ~st.excluded & ~st.tree_edges;
    while (!stack.empty()) {
      const int u = stack.back();
      stack.pop_back();
      const auto m = inc_[u] & open;
      for (auto i = m._Find_first(); i < kMaxOracleEdges; i = m._Find_next(i)) {
        const int w = other(i, u);
        if ((seen >> w) & 1) continue;
        seen |= bit(w);
        if (!is_term(w)) stack.push_back(w);
      }
    }
    if ((seen & s_) != s_) return false;
    // Branch on an open edge, preferring one that reaches a new terminal.
    std::size_t f = kMaxOracleEdges;
    int from = -1;
    for (auto m = inner; m && f == kMaxOracleEdges; m &= m - 1) {
      const int v = lowest(m);
      const auto o = open_edges(st, v);
      for (auto i = o._Find_first(); i < kMaxOracleEdges; i = o._Find_next(i)) {
        if (is_term(other(i, v))) {
          f = i;
          from = v;
          break;
        }
      }
    }
    if (f == kMaxOracleEdges) {
      std::size_t best_edge = kMaxOracleEdges;
      for (auto m = inner; m; m &= m - 1) {
        const int v = lowest(m);
        const auto i = open_edges(st, v)._Find_first();
        if (i < best_edge) {
          best_edge = i;
          from = v;
        }
      }
      f = best_edge;
    }
    if (f == kMaxOracleEdges) return false;
    const int w = other(f, from);
    st.tree_edges.set(f);
    st.tree_v |= bit(w);
    ++st.deg[from];
    ++st.deg[w];
    const bool stop = grow(st, emit);
    --st.deg[from];
    --st.deg[w];
    st.tree_v &= ~bit(w);
    st.tree_edges.reset(f);
    if (stop) return true;
    st.excluded.set(f);
    const bool stop2 = grow(st, emit);
    st.excluded.reset(f);
    return stop2;
  }

  int n_;
  std::vector<Edge> edges_;
  std::uint64_t s_;
  std::vector<int> term_;
  int k_ = 0;
  std::vector<EdgeMask> inc_;
  int cap_;
  NodeCounter nodes_;
  int root_ub_ = 0;
  int best_ = 0;
  std::vector<EdgeMask> best_sets_, cur_;
};

inline LocalResult mu_local_capped(const Graph& g, const VertexSet& s, int cap,
                                   std::uint64_t budget) {
  check_local_args(g, s);
  LocalResult r;
  r.witness.terminals = s;
  r.witness.mode = PackingMode::kEdge;
  if (!is_connected(g)) return r;
  // For |S| = 2 the edge between the terminals is a pendant tree on its own
  // and can always be added to a packing.
  if (s.size() == 2 && g.has_edge(s[0], s[1])) {
    r.witness.trees.push_back({make_edge(s[0], s[1])});
  }
  const int direct = r.witness.size();
  MuSearch search(g, s.mask(), cap == kNoCap ? kNoCap : cap - direct, budget);
  std::vector<EdgeMask> sets;
  r.value = direct + search.run(search.usable(), sets);
  r.exhausted = !search.capped();
  for (const auto& m : sets) {
    TreeEdges t;
    for (std::size_t i = 0; i < search.edges().size(); ++i) {
      if (m.test(i)) t.push_back(search.edges()[i]);
    }
    r.witness.trees.push_back(std::move(t));
  }
  return r;
}

}  // namespace detail

/// Maximum number of edge-disjoint pendant S-Steiner trees, with a packing
/// attaining it. Requires 2 <= |S| <= n <= 64 and e(G) <= 256. Returns 0
/// when G is disconnected.
inline LocalResult mu_local(const Graph& g, const VertexSet& s,
                            const SearchOptions& opt = {}) {
  return detail::mu_local_capped(g, s, kNoCap, opt.node_budget);
}

inline GlobalResult mu_k_with_witness(const Graph& g, int k,
                                      const SearchOptions& opt = {}) {
  detail::check_k(g, k);
  const int n = g.order();
  if (!is_connected(g)) {
    const auto s = VertexSet::from_mask(n, detail::k_subsets(n, k).front());
    return {0, s, detail::mu_local_capped(g, s, kNoCap, opt.node_budget)};
  }
  auto m = detail::minimize_over_subsets<LocalResult>(
      n, k, opt.jobs, [&](std::uint64_t mask, int cap) {
        return detail::mu_local_capped(g, VertexSet::from_mask(n, mask), cap,
                                       opt.node_budget);
      });
  return {m.value, VertexSet::from_mask(n, m.argmin), std::move(m.witness)};
}

inline int mu_k(const Graph& g, int k, const SearchOptions& opt = {}) {
  return mu_k_with_witness(g, k, opt).value;
}

}  // namespace ptc

#endif  // PTC_MU_HPP
