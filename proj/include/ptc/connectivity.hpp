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

#ifndef PTC_CONNECTIVITY_HPP
#define PTC_CONNECTIVITY_HPP

#include <algorithm>
#include <limits>
#include <queue>
#include <vector>

#include "ptc/graph.hpp"

namespace ptc {

inline std::vector<int> component_labels(const Graph& g) {
  std::vector<int> label(g.order(), -1);
  int next = 0;
  for (Vertex s = 0; s < g.order(); ++s) {
    if (label[s] >= 0) continue;
    std::vector<Vertex> stack{s};
    label[s] = next;
    while (!stack.empty()) {
      Vertex v = stack.back();
      stack.pop_back();
      for (auto w : g.neighbors(v)) {
        if (label[w] < 0) {
          label[w] = next;
          stack.push_back(w);
        }
      }
    }
    ++next;
  }
  return label;
}

inline bool is_connected(const Graph& g) {
  auto label = component_labels(g);
  return std::all_of(label.begin(), label.end(), [](int c) { return c == 0; });
}

namespace detail {

/// Augmenting-path max flow for small integer-capacity networks.
class FlowNetwork {
 public:
  explicit FlowNetwork(int nodes) : head_(nodes, -1) {}

  void add_arc(int from, int to, int cap) {
    arcs_.push_back({to, cap, head_[from]});
    head_[from] = static_cast<int>(arcs_.size()) - 1;
    arcs_.push_back({from, 0, head_[to]});
    head_[to] = static_cast<int>(arcs_.size()) - 1;
  }

  /// Max flow from s to t, stopping early once `limit` is reached.
  int max_flow(int s, int t, int limit = std::numeric_limits<int>::max()) {
    int flow = 0;
    std::vector<int> via(head_.size());
    while (flow < limit) {
      std::fill(via.begin(), via.end(), -1);
      std::queue<int> q;
      q.push(s);
      via[s] = -2;
      while (!q.empty() && via[t] == -1) {
        int x = q.front();
        q.pop();
        for (int a = head_[x]; a >= 0; a = arcs_[a].next) {
          if (arcs_[a].cap > 0 && via[arcs_[a].to] == -1) {
            via[arcs_[a].to] = a;
            q.push(arcs_[a].to);
          }
        }
      }
      if (via[t] == -1) break;
      int push = std::numeric_limits<int>::max();
      for (int x = t; x != s; x = arcs_[via[x] ^ 1].to) {
        push = std::min(push, arcs_[via[x]].cap);
      }
      for (int x = t; x != s; x = arcs_[via[x] ^ 1].to) {
        arcs_[via[x]].cap -= push;
        arcs_[via[x] ^ 1].cap += push;
      }
      flow += push;
    }
    return flow;
  }

 private:
  struct Arc {
    int to;
    int cap;
    int next;
  };
  std::vector<int> head_;
  std::vector<Arc> arcs_;
};

}  // namespace detail

/// Maximum number of internally disjoint s-t paths for nonadjacent s, t
/// (Menger). Vertices are split into in/out halves of capacity one.
inline int local_vertex_connectivity(const Graph& g, Vertex s, Vertex t,
                                     int limit = std::numeric_limits<int>::max()) {
  const int n = g.order();
  const int big = n + 1;
  detail::FlowNetwork net(2 * n);
  for (Vertex v = 0; v < n; ++v) {
    net.add_arc(2 * v, 2 * v + 1, (v == s || v == t) ? big : 1);
  }
  for (const auto& e : g.edges()) {
    net.add_arc(2 * e.u + 1, 2 * e.v, big);
    net.add_arc(2 * e.v + 1, 2 * e.u, big);
  }
  return net.max_flow(2 * s + 1, 2 * t, limit);
}

/// Maximum number of edge-disjoint s-t paths.
inline int local_edge_connectivity(const Graph& g, Vertex s, Vertex t,
                                   int limit = std::numeric_limits<int>::max()) {
  detail::FlowNetwork net(g.order());
  for (const auto& e : g.edges()) {
    net.add_arc(e.u, e.v, 1);
    net.add_arc(e.v, e.u, 1);
  }
  return net.max_flow(s, t, limit);
}

/// κ(G). K_n has κ = n - 1; otherwise the minimum local connectivity over
/// nonadjacent pairs. Zero iff G is disconnected (or n = 1).
inline int vertex_connectivity(const Graph& g) {
  const int n = g.order();
  int best = n - 1;
  for (Vertex s = 0; s < n && best > 0; ++s) {
    for (Vertex t = s + 1; t < n && best > 0; ++t) {
      if (!g.has_edge(s, t)) {
        best = std::min(best, local_vertex_connectivity(g, s, t, best));
      }
    }
  }
  return best;
}

/// λ(G): minimum over t of the s-t edge connectivity with s = 0.
inline int edge_connectivity(const Graph& g) {
  if (g.order() == 1) return 0;
  int best = g.min_degree();
  for (Vertex t = 1; t < g.order() && best > 0; ++t) {
    best = std::min(best, local_edge_connectivity(g, 0, t, best));
  }
  return best;
}

}  // namespace ptc

#endif  // PTC_CONNECTIVITY_HPP
