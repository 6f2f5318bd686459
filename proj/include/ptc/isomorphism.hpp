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

#ifndef PTC_ISOMORPHISM_HPP
#define PTC_ISOMORPHISM_HPP

#include <algorithm>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "ptc/graph.hpp"

namespace ptc {

namespace detail {

/// Joint colour refinement of two graphs so colours are comparable across
/// them. Returns the stable colouring of each.
inline std::pair<std::vector<int>, std::vector<int>> refine_colors(
    const Graph& g, const Graph& h) {
  std::vector<int> cg(g.order()), ch(h.order());
  for (Vertex v = 0; v < g.order(); ++v) cg[v] = g.degree(v);
  for (Vertex v = 0; v < h.order(); ++v) ch[v] = h.degree(v);
  std::size_t classes = 0;
  while (true) {
    std::map<std::pair<int, std::vector<int>>, int> ids;
    auto signature = [](const Graph& x, const std::vector<int>& c, Vertex v) {
      std::vector<int> nb;
      for (auto w : x.neighbors(v)) nb.push_back(c[w]);
      std::sort(nb.begin(), nb.end());
      return std::make_pair(c[v], std::move(nb));
    };
    std::vector<std::pair<int, std::vector<int>>> sg, sh;
    for (Vertex v = 0; v < g.order(); ++v) sg.push_back(signature(g, cg, v));
    for (Vertex v = 0; v < h.order(); ++v) sh.push_back(signature(h, ch, v));
    for (const auto& s : sg) ids.emplace(s, 0);
    for (const auto& s : sh) ids.emplace(s, 0);
    int next = 0;
    for (auto& [key, id] : ids) id = next++;
    for (Vertex v = 0; v < g.order(); ++v) cg[v] = ids[sg[v]];
    for (Vertex v = 0; v < h.order(); ++v) ch[v] = ids[sh[v]];
    if (ids.size() == classes) break;
    classes = ids.size();
  }
  return {std::move(cg), std::move(ch)};
}

class IsoSearch {
 public:
  IsoSearch(const Graph& g, const Graph& h, std::vector<int> cg,
            std::vector<int> ch)
      : g_(g), h_(h), cg_(std::move(cg)), ch_(std::move(ch)),
        map_(g.order(), -1), used_(h.order(), false) {
    // Visit vertices so that each one (after the first of its component)
    // has an already-mapped neighbour; adjacency checks then prune early.
    std::vector<bool> seen(g.order(), false);
    for (Vertex root = 0; root < g.order(); ++root) {
      if (seen[root]) continue;
      seen[root] = true;
      std::size_t head = order_.size();
      order_.push_back(root);
      while (head < order_.size()) {
        for (auto w : g.neighbors(order_[head++])) {
          if (!seen[w]) {
            seen[w] = true;
            order_.push_back(w);
          }
        }
      }
    }
  }

  std::optional<std::vector<Vertex>> run() {
    if (extend(0)) return map_;
    return std::nullopt;
  }

 private:
  bool extend(std::size_t depth) {
    if (depth == order_.size()) return true;
    const Vertex v = order_[depth];
    for (Vertex c = 0; c < h_.order(); ++c) {
      if (used_[c] || ch_[c] != cg_[v]) continue;
      bool ok = true;
      for (std::size_t i = 0; i < depth && ok; ++i) {
        const Vertex u = order_[i];
        ok = g_.has_edge(u, v) == h_.has_edge(map_[u], c);
      }
      if (!ok) continue;
      map_[v] = c;
      used_[c] = true;
      if (extend(depth + 1)) return true;
      used_[c] = false;
      map_[v] = -1;
    }
    return false;
  }

  const Graph& g_;
  const Graph& h_;
  std::vector<int> cg_, ch_;
  std::vector<Vertex> map_;
  std::vector<bool> used_;
  std::vector<Vertex> order_;
};

}  // namespace detail

/// An adjacency-preserving bijection V(G) -> V(H), if one exists.
inline std::optional<std::vector<Vertex>> find_isomorphism(const Graph& g,
                                                           const Graph& h) {
  if (g.order() != h.order() || g.size() != h.size()) return std::nullopt;
  auto [cg, ch] = detail::refine_colors(g, h);
  auto sg = cg, sh = ch;
  std::sort(sg.begin(), sg.end());
  std::sort(sh.begin(), sh.end());
  if (sg != sh) return std::nullopt;
  return detail::IsoSearch(g, h, std::move(cg), std::move(ch)).run();
}

inline bool is_isomorphic(const Graph& g, const Graph& h) {
  return find_isomorphism(g, h).has_value();
}

}  // namespace ptc

#endif  // PTC_ISOMORPHISM_HPP
