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

#ifndef PTC_SEARCH_HPP
#define PTC_SEARCH_HPP

#include <algorithm>
#include <atomic>
#include <bit>
#include <cstdint>
#include <exception>
#include <limits>
#include <mutex>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "ptc/graph.hpp"

namespace ptc {

/// Thrown when an exact search exceeds its node budget. Never converted
/// into an approximate answer.
class BudgetExceeded : public std::runtime_error {
 public:
  explicit BudgetExceeded(std::uint64_t budget)
      : std::runtime_error("search node budget of " + std::to_string(budget) +
                           " exceeded"),
        budget_(budget) {}
  std::uint64_t budget() const { return budget_; }

 private:
  std::uint64_t budget_;
};

inline constexpr std::uint64_t kDefaultNodeBudget = 400'000'000;

struct SearchOptions {
  /// Ceiling on search nodes for each local (fixed terminal set) search.
  std::uint64_t node_budget = kDefaultNodeBudget;
  /// Worker threads for global parameters; results do not depend on it.
  int jobs = 1;
};

inline constexpr int kNoCap = std::numeric_limits<int>::max();

namespace detail {

class NodeCounter {
 public:
  explicit NodeCounter(std::uint64_t limit) : limit_(limit) {}
  void tick() {
    if (++used_ > limit_) throw BudgetExceeded(limit_);
  }
  std::uint64_t used() const { return used_; }

 private:
  std::uint64_t used_ = 0;
  std::uint64_t limit_;
};

inline constexpr std::uint64_t bit(int v) { return std::uint64_t{1} << v; }

inline int lowest(std::uint64_t m) { return std::countr_zero(m); }

inline std::uint64_t mask_of(const VertexSet& s) { return s.mask(); }

/// Vertices of `within` reachable from `seed` using only vertices of
/// `within`. adj holds 64-bit neighbourhoods.
inline std::uint64_t reach(const std::vector<std::uint64_t>& adj,
                           std::uint64_t seed, std::uint64_t within) {
  std::uint64_t seen = seed & within, frontier = seen;
  while (frontier) {
    std::uint64_t next = 0;
    for (auto f = frontier; f; f &= f - 1) next |= adj[lowest(f)];
    next &= within & ~seen;
    seen |= next;
    frontier = next;
  }
  return seen;
}

inline bool connected_mask(const std::vector<std::uint64_t>& adj,
                           std::uint64_t set) {
  if (!set) return false;
  return reach(adj, set & (~set + 1), set) == set;
}

inline void check_local_args(const Graph& g, const VertexSet& s) {
  if (g.order() > 64) throw GraphError("exact oracles support n <= 64");
  if (s.universe() != g.order()) {
    throw std::invalid_argument("terminal set universe does not match graph");
  }
  if (s.size() < 2) throw std::invalid_argument("terminal set needs >= 2 vertices");
}

inline void check_k(const Graph& g, int k) {
  if (g.order() > 64) throw GraphError("exact oracles support n <= 64");
  if (k < 2 || k > g.order()) {
    throw std::invalid_argument("k must satisfy 2 <= k <= n, got k=" +
                                std::to_string(k));
  }
}

inline std::vector<std::uint64_t> adjacency_masks(const Graph& g) {
  std::vector<std::uint64_t> adj(g.order());
  for (Vertex v = 0; v < g.order(); ++v) adj[v] = g.neighbor_mask(v);
  return adj;
}

/// All k-subsets of {0..n-1} in lexicographic order, as bit masks.
inline std::vector<std::uint64_t> k_subsets(int n, int k) {
  std::vector<std::uint64_t> out;
  std::vector<int> idx(k);
  for (int i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    std::uint64_t m = 0;
    for (int i : idx) m |= bit(i);
    out.push_back(m);
    int i = k - 1;
    while (i >= 0 && idx[i] == n - k + i) --i;
    if (i < 0) break;
    ++idx[i];
    for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
  return out;
}

inline std::uint64_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  std::uint64_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

/// Result of minimising a capped local search over all k-subsets.
template <class Local>
struct SubsetMinimum {
  int value = 0;
  std::uint64_t argmin = 0;
  Local witness{};
};

/// Minimises `local(S, cap)` over all k-subsets S in lexicographic order.
/// `local` returns an object with `int value` that is exact when below
/// `cap` and otherwise only certifies value >= cap. The reported argmin is
/// the lexicographically first minimiser, independent of `jobs`.
template <class Local, class Fn>
SubsetMinimum<Local> minimize_over_subsets(int n, int k, int jobs, Fn&& local) {
  const auto subsets = k_subsets(n, k);
  SubsetMinimum<Local> best;
  best.value = kNoCap;
  if (jobs <= 1 || subsets.size() < 2) {
    for (auto s : subsets) {
      auto r = local(s, best.value);
      if (r.value < best.value) {
        best.value = r.value;
        best.argmin = s;
        best.witness = std::move(r);
        if (best.value == 0) break;
      }
    }
    return best;
  }
  // Parallel: each subset is searched with cap = (current global min) + 1,
  // which makes every value <= the final minimum exact.
  std::atomic<std::size_t> next{0};
  std::atomic<int> global{kNoCap};
  std::mutex mu;
  std::vector<std::pair<std::size_t, Local>> exact;
  std::exception_ptr failure;
  auto worker = [&] {
    try {
      while (true) {
        const std::size_t i = next.fetch_add(1);
        if (i >= subsets.size()) return;
        const int g = global.load();
        if (g == 0) return;
        const int cap = g == kNoCap ? kNoCap : g + 1;
        auto r = local(subsets[i], cap);
        if (r.value < cap) {
          int cur = global.load();
          while (r.value < cur && !global.compare_exchange_weak(cur, r.value)) {
          }
          std::lock_guard lock(mu);
          exact.emplace_back(i, std::move(r));
        }
      }
    } catch (...) {
      std::lock_guard lock(mu);
      if (!failure) failure = std::current_exception();
      next.store(subsets.size());
    }
  };
  {
    std::vector<std::jthread> pool;
    for (int t = 0; t < jobs; ++t) pool.emplace_back(worker);
  }
  if (failure) std::rethrow_exception(failure);
  std::size_t best_index = subsets.size();
  for (auto& [i, r] : exact) {
    if (r.value < best.value || (r.value == best.value && i < best_index)) {
      best.value = r.value;
      best_index = i;
      best.witness = r;
    }
  }
  best.argmin = subsets[best_index];
  return best;
}

}  // namespace detail
}  // namespace ptc

#endif  // PTC_SEARCH_HPP
