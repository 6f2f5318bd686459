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

#ifndef PTC_CLOSED_FORMS_HPP
#define PTC_CLOSED_FORMS_HPP

#include <algorithm>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "ptc/connectivity.hpp"
#include "ptc/graph.hpp"
#include "ptc/rational.hpp"
#include "ptc/search.hpp"
#include "ptc/transforms.hpp"

namespace ptc {

// Shape of the complement of G, as used by the high-order
// characterisations. Tags are tested in the order complete, matching,
// star, so a single missing edge reports as a matching of size 1.
struct ComplementShape {
  enum class Tag { kComplete, kCompleteMinusMatching, kStarPlusIsolates, kOther };
  Tag tag = Tag::kOther;
  int parameter = 0;  // m for matchings, r for stars

  friend bool operator==(const ComplementShape&, const ComplementShape&) = default;
};

inline std::string to_string(const ComplementShape& c) {
  switch (c.tag) {
    case ComplementShape::Tag::kComplete:
      return "complete";
    case ComplementShape::Tag::kCompleteMinusMatching:
      return "complete_minus_matching(" + std::to_string(c.parameter) + ")";
    case ComplementShape::Tag::kStarPlusIsolates:
      return "star_plus_isolates(" + std::to_string(c.parameter) + ")";
    case ComplementShape::Tag::kOther:
      break;
  }
  return "other";
}

inline ComplementShape recognize_complement_shape(const Graph& g) {
  const Graph c = complement(g);
  const int n = c.order();
  if (c.size() == 0) return {ComplementShape::Tag::kComplete, 0};
  int max_deg = 0;
  for (Vertex v = 0; v < n; ++v) max_deg = std::max(max_deg, c.degree(v));
  if (max_deg == 1) return {ComplementShape::Tag::kCompleteMinusMatching, c.size()};
  // A star: every complement edge meets the max-degree vertex.
  if (max_deg == c.size() && max_deg <= n - 2) {
    return {ComplementShape::Tag::kStarPlusIsolates, max_deg};
  }
  return {ComplementShape::Tag::kOther, 0};
}

/// True iff the complement is K_{1,r} plus isolated vertices with
/// 1 <= r <= n-2. This includes a single missing edge (r = 1).
inline bool complement_is_star(const Graph& g) {
  const auto s = recognize_complement_shape(g);
  return s.tag == ComplementShape::Tag::kStarPlusIsolates ||
         (s.tag == ComplementShape::Tag::kCompleteMinusMatching &&
          s.parameter == 1 && g.order() >= 3);
}

/// True iff G = K_n minus a matching of size m with lo <= m <= hi.
inline bool is_complete_minus_matching(const Graph& g, int lo, int hi) {
  const auto s = recognize_complement_shape(g);
  const int m = s.tag == ComplementShape::Tag::kComplete ? 0
                : s.tag == ComplementShape::Tag::kCompleteMinusMatching
                    ? s.parameter
                    : -1;
  return m >= 0 && lo <= m && m <= hi;
}

namespace detail {

inline void require(bool ok, const std::string& what) {
  if (!ok) throw std::invalid_argument(what);
}

inline void require_high_order(const Graph& g, int k) {
  const int n = g.order();
  require(k == n - 1 || k == n - 2, "k must be n-1 or n-2");
  require(k >= 3, "high-order formulas need k >= 3");
  require(is_connected(g), "high-order formulas need a connected graph");
}

}  // namespace detail

inline int tau_complete(int n, int k) {
  detail::require(3 <= k && k <= n, "need 3 <= k <= n");
  return n - k;
}

inline int mu_complete(int n, int k) {
  detail::require(3 <= k && k <= n, "need 3 <= k <= n");
  return n - k;
}

/// max{min{a-k+1, b-k+1}, 0}.
inline int tau_complete_bipartite(int a, int b, int k) {
  detail::require(a >= 1 && b >= 1 && k >= 3, "need a, b >= 1 and k >= 3");
  return std::max(std::min(a - k + 1, b - k + 1), 0);
}

/// r + s - 4 for the rook's graph K_r x K_s at k = 3.
inline int tau_rook(int r, int s) {
  detail::require(r >= 3 && s >= 3, "need r, s >= 3");
  return r + s - 4;
}

/// tau_{n-1} = floor(kappa/(n-1)); tau_{n-2} = ceil(kappa/(n-2)) when
/// kappa = n-1, or kappa = n-2 with complement iK_2 (i = 1, 2), and
/// floor(kappa/(n-2)) otherwise.
inline int tau_high_order(const Graph& g, int k) {
  detail::require_high_order(g, k);
  const int n = g.order();
  const int kap = vertex_connectivity(g);
  if (k == n - 1) return Rational(kap, n - 1).floor();
  const bool ceiling =
      kap == n - 1 || (kap == n - 2 && is_complete_minus_matching(g, 1, 2));
  const Rational q(kap, n - 2);
  return static_cast<int>(ceiling ? q.ceil() : q.floor());
}

/// mu_{n-1} = floor(lambda/(n-1)); mu_{n-2} = ceil(lambda/(n-2)) when
/// lambda = n-1 or the complement is a star plus isolated vertices, and
/// floor(lambda/(n-2)) otherwise.
inline int mu_high_order(const Graph& g, int k) {
  detail::require_high_order(g, k);
  const int n = g.order();
  const int lam = edge_connectivity(g);
  if (k == n - 1) return Rational(lam, n - 1).floor();
  const bool ceiling = lam == n - 1 || complement_is_star(g);
  const Rational q(lam, n - 2);
  return static_cast<int>(ceiling ? q.ceil() : q.floor());
}

/// Value of mu_{n-2} predicted by the three-way characterisation: 2 for
/// complete graphs, 1 when the complement is a star plus isolated
/// vertices, 0 otherwise.
inline int mu_n_minus_2_by_shape(const Graph& g) {
  detail::require(g.order() >= 5 && is_connected(g), "need connected G, n >= 5");
  if (g.size() == g.order() * (g.order() - 1) / 2) return 2;
  return complement_is_star(g) ? 1 : 0;
}

/// Value of tau_{n-1} predicted by the complete/non-complete split.
inline int tau_n_minus_1_by_shape(const Graph& g) {
  detail::require(g.order() >= 4 && is_connected(g), "need connected G, n >= 4");
  return g.size() == g.order() * (g.order() - 1) / 2 ? 1 : 0;
}

/// Same split for mu_{n-1}.
inline int mu_n_minus_1_by_shape(const Graph& g) {
  return tau_n_minus_1_by_shape(g);
}

/// Value of tau_{n-2} predicted by the three-way split: 2 for K_n, 1 for
/// K_n minus a matching with 1 or 2 edges, 0 otherwise.
inline int tau_n_minus_2_by_shape(const Graph& g) {
  detail::require(g.order() >= 5 && is_connected(g), "need connected G, n >= 5");
  if (is_complete_minus_matching(g, 0, 0)) return 2;
  return is_complete_minus_matching(g, 1, 2) ? 1 : 0;
}

/// An interval [lower, upper] for one of the pendant-tree parameters at
/// (G, k). Missing ends are unbounded.
struct BoundInterval {
  std::string name;
  std::string target;  // "tau" or "mu"
  std::optional<Rational> lower;
  std::optional<Rational> upper;

  bool contains(std::int64_t v) const {
    return (!lower || *lower <= Rational(v)) && (!upper || Rational(v) <= *upper);
  }
};

/// Smallest integer t with 2^t >= x, for x >= 1.
inline int ceil_log2(std::int64_t x) {
  int t = 0;
  while ((std::int64_t{1} << t) < x) ++t;
  return t;
}

/// min over k-subsets S of floor(|E(S, V-S)| / k).
inline int min_cut_bound(const Graph& g, int k) {
  detail::check_k(g, k);
  int best = kNoCap;
  for (auto m : detail::k_subsets(g.order(), k)) {
    best = std::min(best, cut_size(g, VertexSet::from_mask(g.order(), m)) / k);
  }
  return best;
}

/// Every interval the literature gives for tau_k(G) and mu_k(G), in exact
/// arithmetic. Integer-valued parameters make the logarithmic lower bound
/// equivalent to tau >= ceil(ceil(log2 kappa) / (k+1)).
inline std::vector<BoundInterval> bound_report(const Graph& g, int k) {
  detail::check_k(g, k);
  detail::require(k >= 3, "need k >= 3");
  detail::require(is_connected(g), "bound report needs a connected graph");
  const int n = g.order();
  const int kap = vertex_connectivity(g);
  const int lam = edge_connectivity(g);
  const int delta = g.min_degree();
  std::vector<BoundInterval> out;
  out.push_back({"Prop2.1", "tau", Rational(0), Rational(n - k)});
  out.push_back({"Prop2.4", "mu", Rational(0), Rational(n - k)});
  out.push_back({"Lem2.2", "tau", Rational(Rational(ceil_log2(kap), k + 1).ceil()),
                 Rational(kap)});
  if (k == 3) {
    out.push_back({"Lem2.9", "tau", Rational(kap, 12) - Rational(1, 2),
                   Rational(2 * kap, 3)});
  }
  // Read as "mu_k >= l >= 1 implies delta >= k+l-1"; below k-1 the raw
  // value is negative and says nothing about mu_k = 0.
  out.push_back({"Lem4.2", "mu", std::nullopt, Rational(std::max(0, delta - k + 1))});
  out.push_back({"Obs2.2", "mu", std::nullopt, Rational(min_cut_bound(g, k))});
  if (k == n - 2) {
    const Rational q(lam, n - 2);
    out.push_back({"Cor2.3", "mu", Rational(q.floor()), Rational(q.ceil())});
  }
  return out;
}

}  // namespace ptc

#endif  // PTC_CLOSED_FORMS_HPP
