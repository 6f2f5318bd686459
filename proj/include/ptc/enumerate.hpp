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

#ifndef PTC_ENUMERATE_HPP
#define PTC_ENUMERATE_HPP

#include <algorithm>
#include <bit>
#include <cstdint>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "ptc/connectivity.hpp"
#include "ptc/graph.hpp"
#include "ptc/io.hpp"

namespace ptc {

namespace detail {

// Canonical vertex order by individualisation and refinement. Each node of
// the search tree holds an ordered partition refined to equitability; a
// non-singleton cell is split by fixing one of its vertices first. Every
// discrete leaf is a vertex order, and the order whose upper-triangle
// adjacency bits (read column by column as in graph6) form the smallest
// string wins. Leaves that tie the best yield automorphisms, which prune
// children lying in one orbit of the stabiliser of the fixed vertices.
class CanonicalSearch {
 public:
  using Cells = std::vector<std::uint64_t>;

  explicit CanonicalSearch(const Graph& g) : n_(g.order()) {
    for (Vertex v = 0; v < n_; ++v) adj_.push_back(g.neighbor_mask(v));
  }

  std::vector<Vertex> run() {
    if (n_ == 0) return {};
    Cells root{n_ == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n_) - 1};
    std::vector<Vertex> fixed;
    search(std::move(root), fixed);
    return best_perm_;
  }

 private:
  static constexpr std::size_t kMaxGenerators = 128;

  // Splits cells by neighbour counts into each splitter cell until stable.
  // Sub-cells are ordered by count, so the result is isomorphism-invariant.
  void refine(Cells& cells) const {
    for (std::size_t w = 0; w < cells.size();) {
      const std::uint64_t splitter = cells[w];
      Cells next;
      bool split = false;
      for (const auto cell : cells) {
        std::vector<std::pair<int, Vertex>> keyed;
        for (std::uint64_t m = cell; m; m &= m - 1) {
          const auto v = static_cast<Vertex>(std::countr_zero(m));
          keyed.emplace_back(std::popcount(adj_[v] & splitter), v);
        }
        std::sort(keyed.begin(), keyed.end());
        std::uint64_t part = 0;
        for (std::size_t i = 0; i < keyed.size(); ++i) {
          if (i > 0 && keyed[i].first != keyed[i - 1].first) {
            next.push_back(part);
            part = 0;
            split = true;
          }
          part |= std::uint64_t{1} << keyed[i].second;
        }
        next.push_back(part);
      }
      cells = std::move(next);
      w = split ? 0 : w + 1;
    }
  }

  void search(Cells cells, std::vector<Vertex>& fixed) {
    refine(cells);
    std::size_t target = cells.size();
    int best_size = 65;
    for (std::size_t i = 0; i < cells.size(); ++i) {
      const int size = std::popcount(cells[i]);
      if (size > 1 && size < best_size) {
        best_size = size;
        target = i;
      }
    }
    if (target == cells.size()) {
      leaf(cells);
      return;
    }
    std::vector<Vertex> tried;
    for (std::uint64_t m = cells[target]; m; m &= m - 1) {
      const auto v = static_cast<Vertex>(std::countr_zero(m));
      if (!tried.empty() && in_tried_orbit(v, tried, fixed)) continue;
      tried.push_back(v);
      Cells child;
      child.reserve(cells.size() + 1);
      for (std::size_t i = 0; i < cells.size(); ++i) {
        if (i == target) {
          child.push_back(std::uint64_t{1} << v);
          child.push_back(cells[i] & ~(std::uint64_t{1} << v));
        } else {
          child.push_back(cells[i]);
        }
      }
      fixed.push_back(v);
      search(std::move(child), fixed);
      fixed.pop_back();
    }
  }

  bool in_tried_orbit(Vertex v, const std::vector<Vertex>& tried,
                      const std::vector<Vertex>& fixed) const {
    std::vector<Vertex> parent(n_);
    for (Vertex i = 0; i < n_; ++i) parent[i] = i;
    auto root = [&](Vertex x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    for (const auto& gen : generators_) {
      const bool fixes = std::all_of(fixed.begin(), fixed.end(),
                                     [&](Vertex f) { return gen[f] == f; });
      if (!fixes) continue;
      for (Vertex i = 0; i < n_; ++i) parent[root(i)] = root(gen[i]);
    }
    return std::any_of(tried.begin(), tried.end(),
                       [&](Vertex u) { return root(u) == root(v); });
  }

  void leaf(const Cells& cells) {
    std::vector<Vertex> perm;
    perm.reserve(n_);
    for (const auto cell : cells) perm.push_back(static_cast<Vertex>(std::countr_zero(cell)));
    std::vector<char> code;
    code.reserve(static_cast<std::size_t>(n_) * (n_ - 1) / 2);
    for (int j = 1; j < n_; ++j) {
      for (int i = 0; i < j; ++i) code.push_back((adj_[perm[i]] >> perm[j]) & 1);
    }
    if (best_perm_.empty() || code < best_) {
      best_ = std::move(code);
      best_perm_ = std::move(perm);
    } else if (code == best_ && generators_.size() < kMaxGenerators) {
      std::vector<Vertex> gen(n_);
      for (int i = 0; i < n_; ++i) gen[best_perm_[i]] = perm[i];
      generators_.push_back(std::move(gen));
    }
  }

  int n_;
  std::vector<std::uint64_t> adj_;
  std::vector<char> best_;
  std::vector<Vertex> best_perm_;
  std::vector<std::vector<Vertex>> generators_;
};

}  // namespace detail

/// Relabelling of G chosen by a search that depends only on the isomorphism
/// class, so isomorphic graphs get identical forms. Worst case exponential,
/// but symmetric graphs are cut down by automorphism pruning.
inline Graph canonical_form(const Graph& g) {
  if (g.order() > 64) throw GraphError("canonical form supports n <= 64");
  const auto order = detail::CanonicalSearch(g).run();
  std::vector<Vertex> pos(g.order());
  for (int i = 0; i < g.order(); ++i) pos[order[i]] = i;
  GraphBuilder b(g.order());
  for (const auto& e : g.edges()) b.add_edge(pos[e.u], pos[e.v]);
  return std::move(b).build();
}

/// graph6 string of the canonical form; equal for isomorphic graphs.
inline std::string graph_id(const Graph& g) {
  return format_graph6(canonical_form(g));
}

/// One canonical representative per isomorphism class on n <= 7 vertices,
/// ordered by graph id. Built by adding a vertex to every class on n-1
/// vertices in every possible way.
inline std::vector<Graph> enumerate_graphs(int n, bool connected_only) {
  if (n < 1 || n > 7) throw std::invalid_argument("enumeration supports 1 <= n <= 7");
  std::vector<Graph> level{Graph(1)};
  for (int m = 1; m < n; ++m) {
    std::set<std::string> seen;
    std::vector<Graph> next;
    for (const auto& g : level) {
      for (std::uint32_t nb = 0; nb < (1u << m); ++nb) {
        GraphBuilder b(m + 1);
        for (const auto& e : g.edges()) b.add_edge(e.u, e.v);
        for (int v = 0; v < m; ++v) {
          if ((nb >> v) & 1) b.add_edge(v, m);
        }
        auto c = canonical_form(std::move(b).build());
        if (seen.insert(format_graph6(c)).second) next.push_back(std::move(c));
      }
    }
    level = std::move(next);
  }
  std::sort(level.begin(), level.end(), [](const Graph& a, const Graph& b) {
    return format_graph6(a) < format_graph6(b);
  });
  if (connected_only) {
    std::erase_if(level, [](const Graph& g) { return !is_connected(g); });
  }
  return level;
}

}  // namespace ptc

#endif  // PTC_ENUMERATE_HPP
