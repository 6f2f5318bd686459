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

#include <gtest/gtest.h>

#include <random>

#include "brute.hpp"
#include "ptc/connectivity.hpp"
#include "ptc/enumerate.hpp"
#include "ptc/io.hpp"
#include "ptc/kappa.hpp"
#include "ptc/mu.hpp"
#include "ptc/naive.hpp"
#include "ptc/pendant_tree.hpp"
#include "ptc/tau.hpp"
#include "ptc/transforms.hpp"

namespace ptc {
namespace {

VertexSet vs(const Graph& g, std::uint64_t mask) {
  return VertexSet::from_mask(g.order(), mask);
}

std::vector<Graph> connected_up_to(int n_max) {
  std::vector<Graph> out;
  for (int n = 2; n <= n_max; ++n) {
    for (auto& g : enumerate_graphs(n, true)) out.push_back(g);
  }
  return out;
}

// Triangle with a pendant vertex on each corner.
Graph h1() {
  return Graph::from_edges(6, std::vector<Edge>{{0, 1}, {0, 2}, {1, 2}, {0, 3}, {1, 4}, {2, 5}});
}

TEST(PendantTreeTest, Examples) {
  const Graph k4 = complete_graph(4);
  const VertexSet s(4, {0, 1, 2});
  EXPECT_TRUE(is_pendant_steiner_tree(k4, s, {{0, 3}, {1, 3}, {2, 3}}));
  EXPECT_FALSE(is_pendant_steiner_tree(k4, s, {{0, 1}, {1, 3}, {2, 3}}));
  EXPECT_TRUE(is_pendant_steiner_tree(path_graph(3), VertexSet(3, {0, 2}), {{0, 1}, {1, 2}}));
  EXPECT_THROW(is_pendant_steiner_tree(k4, VertexSet(4, {0}), {}), std::invalid_argument);
}

TEST(PendantTreeTest, RejectsNonTrees) {
  const Graph k5 = complete_graph(5);
  const VertexSet s(5, {0, 1});
  EXPECT_FALSE(is_pendant_steiner_tree(k5, s, {}));
  // Cycle through 2, 3, 4 plus the two terminal edges.
  EXPECT_FALSE(is_pendant_steiner_tree(k5, s, {{0, 2}, {1, 3}, {2, 3}, {3, 4}, {2, 4}}));
  // Disconnected pieces.
  EXPECT_FALSE(is_pendant_steiner_tree(k5, s, {{0, 2}, {1, 3}}));
  // Edge absent from the host.
  EXPECT_FALSE(is_pendant_steiner_tree(path_graph(4), VertexSet(4, {0, 3}), {{0, 3}}));
  EXPECT_TRUE(is_steiner_tree(k5, VertexSet(5, {0, 1, 2}), {{0, 1}, {1, 2}}));
}

TEST(VerifyPackingTest, Examples) {
  const Graph k5 = complete_graph(5);
  const VertexSet s(5, {0, 1, 2});
  Packing p{s, PackingMode::kInternal, {{{0, 3}, {1, 3}, {2, 3}}, {{0, 4}, {1, 4}, {2, 4}}}};
  EXPECT_TRUE(verify_packing(k5, s, p).ok);
  Packing shared{s, PackingMode::kInternal,
                 {{{0, 3}, {1, 3}, {2, 3}}, {{0, 4}, {1, 3}, {3, 4}, {2, 4}}}};
  const auto r = verify_packing(k5, s, shared);
  EXPECT_FALSE(r.ok);
  EXPECT_FALSE(r.diagnostic.empty());
  EXPECT_TRUE(verify_packing(k5, s, Packing{s, PackingMode::kInternal, {}}).ok);
}

TEST(VerifyPackingTest, EdgeModeAllowsSharedVertices) {
  const Graph k5 = complete_graph(5);
  const VertexSet s(5, {0, 1, 2});
  Packing p{s, PackingMode::kEdge, {{{0, 3}, {1, 3}, {2, 3}}, {{0, 4}, {1, 4}, {3, 4}, {2, 4}}}};
  EXPECT_TRUE(verify_packing(k5, s, p).ok);  // non-terminal leaves are allowed
  Packing internal = p;
  internal.mode = PackingMode::kInternal;
  EXPECT_FALSE(verify_packing(k5, s, internal).ok);  // both trees use vertex 3
  p.trees[1] = {{0, 4}, {1, 4}, {2, 4}};
  EXPECT_TRUE(verify_packing(k5, s, p).ok);
  p.trees.push_back({{0, 4}, {1, 3}, {3, 4}, {2, 3}});
  EXPECT_FALSE(verify_packing(k5, s, p).ok);  // shares edge 0-4
}

TEST(CertificateTest, RoundTrip) {
  const VertexSet s(9, {0, 4, 8});
  Packing p{s, PackingMode::kInternal, {{{0, 1}, {1, 4}, {1, 7}, {7, 8}}, {{0, 2}, {2, 5}}}};
  const std::string text = format_certificate(p, std::string("rook-graph k=3"));
  EXPECT_EQ(text,
            "# ref: rook-graph k=3\nS: 0 4 8\nmode: internal\nT: 0-1 1-4 1-7 7-8\nT: 0-2 2-5\n");
  const auto c = parse_certificate(text, 9);
  EXPECT_EQ(c.packing.trees, p.trees);
  EXPECT_EQ(c.packing.terminals.mask(), s.mask());
  EXPECT_EQ(c.provenance, "rook-graph k=3");
  EXPECT_EQ(format_certificate(c), text);
  const auto bare = parse_certificate("S: 1 2\nmode: edge\n", 3);
  EXPECT_FALSE(bare.provenance);
  EXPECT_EQ(bare.packing.mode, PackingMode::kEdge);
  EXPECT_EQ(bare.packing.size(), 0);
}

TEST(CertificateTest, Errors) {
  EXPECT_THROW(parse_certificate("mode: internal\n", 5), ParseError);
  EXPECT_THROW(parse_certificate("S: 0 1\nmode: both\n", 5), ParseError);
  EXPECT_THROW(parse_certificate("S: 0 9\nmode: edge\n", 5), ParseError);
  EXPECT_THROW(parse_certificate("S: 0 1\nmode: edge\nT: 0-x\n", 5), ParseError);
  EXPECT_THROW(parse_certificate("S: 0 1\nmode: edge\nT: 0-1\nfoo\n", 5), ParseError);
  EXPECT_THROW(parse_certificate("S: 0 0\nmode: edge\n", 5), ParseError);
}

TEST(TauLocalTest, Examples) {
  const Graph k5 = complete_graph(5);
  for (auto s : detail::k_subsets(5, 3)) EXPECT_EQ(tau_local(k5, vs(k5, s)).value, 2);
  const Graph c5 = cycle_graph(5);
  for (auto s : detail::k_subsets(5, 3)) EXPECT_EQ(tau_local(c5, vs(c5, s)).value, 0);
  const Graph k33 = complete_bipartite(3, 3);
  EXPECT_EQ(tau_local(k33, VertexSet(6, {0, 3, 4})).value, 1);
  EXPECT_EQ(tau_local(path_graph(3), VertexSet(3, {0, 2})).value, 1);
  EXPECT_EQ(tau_local(complete_graph(2), VertexSet(2, {0, 1})).value, 1);
  EXPECT_EQ(tau_local(Graph(4), VertexSet(4, {0, 1, 2})).value, 0);
  EXPECT_THROW(tau_local(k5, VertexSet(5, {0})), std::invalid_argument);
  EXPECT_THROW(tau_local(k5, VertexSet(4, {0, 1})), std::invalid_argument);
}

TEST(TauLocalNaiveTest, Examples) {
  EXPECT_EQ(tau_local_naive(complete_graph(4), VertexSet(4, {0, 1, 2})), 1);
  EXPECT_EQ(tau_local_naive(path_graph(4), VertexSet(4, {0, 1, 3})), 0);
  const Graph k23 = complete_bipartite(2, 3);
  const VertexSet s(5, {0, 1, 2});
  EXPECT_EQ(tau_local_naive(k23, s), tau_local(k23, s).value);
}

// Exhaustive agreement of the three tau implementations on small graphs,
// every terminal set of every size.
TEST(TauLocalTest, MatchesNaiveAndBruteForceExhaustively) {
  for (const auto& g : connected_up_to(5)) {
    const int n = g.order();
    for (int k = 2; k <= n; ++k) {
      for (auto s : detail::k_subsets(n, k)) {
        const auto r = tau_local(g, vs(g, s));
        const int expect = brute::tau_local(g, s);
        ASSERT_EQ(r.value, expect) << format_graph6(g) << " S=" << s;
        ASSERT_EQ(tau_local_naive(g, vs(g, s)), expect) << format_graph6(g) << " S=" << s;
        ASSERT_TRUE(r.exhausted);
        ASSERT_EQ(r.witness.size(), r.value);
        const auto v = verify_packing(g, vs(g, s), r.witness);
        ASSERT_TRUE(v.ok) << v.diagnostic;
      }
    }
  }
}

TEST(TauLocalTest, MatchesNaiveOnSeededRandomInstances) {
  std::mt19937_64 rng(2026);
  for (int i = 0; i < 100; ++i) {
    const int n = 4 + i % 4;
    const Graph g = brute::sample(rng, n, 0.6);
    const std::uint64_t s = brute::random_subset(rng, n, 3 + i % 2);
    EXPECT_EQ(tau_local(g, vs(g, s)).value, tau_local_naive(g, vs(g, s)))
        << format_graph6(g) << " S=" << s;
  }
}

TEST(TauLocalTest, CappedSearchStopsAtCap) {
  const Graph k7 = complete_graph(7);
  const auto r = detail::tau_local_capped(k7, VertexSet(7, {0, 1, 2}), 2, kDefaultNodeBudget);
  EXPECT_EQ(r.value, 2);
  EXPECT_FALSE(r.exhausted);
  EXPECT_TRUE(verify_packing(k7, VertexSet(7, {0, 1, 2}), r.witness).ok);
}

TEST(TauKTest, Examples) {
  EXPECT_EQ(tau_k(complete_graph(6), 3), 3);
  EXPECT_EQ(tau_k(star(5), 3), 0);
  EXPECT_EQ(tau_k(complete_bipartite(4, 5), 4), 1);
  EXPECT_EQ(tau_k(Graph(5), 3), 0);
  EXPECT_THROW(tau_k(complete_graph(4), 5), std::invalid_argument);
  EXPECT_THROW(tau_k(complete_graph(4), 1), std::invalid_argument);
}

TEST(TauKTest, MatchesBruteMinimumAndReportsFirstMinimiser) {
  for (const auto& g : connected_up_to(5)) {
    const int n = g.order();
    for (int k = 2; k <= n; ++k) {
      const auto r = tau_k_with_witness(g, k);
      ASSERT_EQ(r.value, brute::global_min(g, k, brute::tau_local)) << format_graph6(g);
      std::uint64_t first = 0;
      for (auto s : detail::k_subsets(n, k)) {
        if (brute::tau_local(g, s) == r.value) {
          first = s;
          break;
        }
      }
      EXPECT_EQ(r.terminals.mask(), first) << format_graph6(g) << " k=" << k;
      EXPECT_TRUE(verify_packing(g, r.terminals, r.local.witness).ok);
    }
  }
}

TEST(TauKTest, ResultIndependentOfJobs) {
  std::mt19937_64 rng(77);
  for (int i = 0; i < 12; ++i) {
    const Graph g = brute::sample_connected(rng, 7, 0.7);
    const auto a = tau_k_with_witness(g, 3, {kDefaultNodeBudget, 1});
    const auto b = tau_k_with_witness(g, 3, {kDefaultNodeBudget, 3});
    EXPECT_EQ(a.value, b.value);
    EXPECT_EQ(a.terminals.mask(), b.terminals.mask());
    EXPECT_EQ(a.local.witness.trees, b.local.witness.trees);
  }
}

TEST(TauKTest, BudgetIsAHardError) {
  EXPECT_THROW(tau_k(rook_graph(4, 4), 3, {10, 1}), BudgetExceeded);
  EXPECT_THROW(tau_k(rook_graph(4, 4), 3, {10, 2}), BudgetExceeded);
  EXPECT_THROW(mu_k(rook_graph(3, 3), 3, {10, 1}), BudgetExceeded);
  EXPECT_THROW(kappa_k(rook_graph(3, 3), 3, {10, 1}), BudgetExceeded);
}

TEST(MuLocalTest, Examples) {
  const Graph k5 = complete_graph(5);
  for (auto s : detail::k_subsets(5, 3)) EXPECT_EQ(mu_local(k5, vs(k5, s)).value, 2);
  EXPECT_EQ(mu_k(cycle_graph(4), 2), 2);
  // Complement K_{1,2} + 2K_1 on five vertices: the centre 0 sees only 3
  // and 4, so S = {0, 3, 4} leaves no way to attach 0 through a non-terminal.
  const Graph g = complete_minus(5, std::vector<Edge>{{0, 1}, {0, 2}});
  EXPECT_EQ(mu_local(g, VertexSet(5, {0, 3, 4})).value, 0);
  EXPECT_EQ(brute::mu_local(g, 0b11001), 0);
  EXPECT_EQ(mu_k(g, 3), 0);
}

TEST(MuLocalTest, MatchesUnrestrictedBruteForceExhaustively) {
  for (const auto& g : connected_up_to(5)) {
    const int n = g.order();
    for (int k = 2; k <= n; ++k) {
      for (auto s : detail::k_subsets(n, k)) {
        const auto r = mu_local(g, vs(g, s));
        ASSERT_EQ(r.value, brute::mu_local(g, s)) << format_graph6(g) << " S=" << s;
        ASSERT_EQ(r.witness.size(), r.value);
        ASSERT_EQ(r.witness.mode, PackingMode::kEdge);
        const auto v = verify_packing(g, vs(g, s), r.witness);
        ASSERT_TRUE(v.ok) << v.diagnostic;
      }
    }
  }
}

TEST(MuKTest, Examples) {
  EXPECT_EQ(mu_k(complete_graph(6), 3), 3);
  EXPECT_EQ(mu_k(complete_graph(5), 4), 1);
  std::mt19937_64 rng(5);
  for (int i = 0; i < 10; ++i) {
    const Graph g = brute::sample(rng, 3 + i % 4, 0.8);
    EXPECT_EQ(mu_k(g, g.order()), 0);
  }
}

TEST(MuKTest, TwoTerminalsGiveEdgeConnectivity) {
  std::mt19937_64 rng(6);
  for (int i = 0; i < 30; ++i) {
    const Graph g = brute::sample(rng, 2 + i % 6, 0.6);
    EXPECT_EQ(mu_k(g, 2), edge_connectivity(g)) << format_graph6(g);
  }
}

TEST(KappaTest, Examples) {
  EXPECT_EQ(kappa_k(h1(), 3), 1);
  EXPECT_EQ(kappa_k(complete_graph(4), 3), 2);
  EXPECT_EQ(kappa_k(Graph(4), 3), 0);
}

TEST(KappaTest, TwoTerminalsGiveVertexConnectivity) {
  for (const auto& g : connected_up_to(6)) {
    EXPECT_EQ(kappa_k(g, 2), vertex_connectivity(g)) << format_graph6(g);
  }
}

TEST(KappaTest, MatchesBruteForceExhaustively) {
  for (const auto& g : connected_up_to(5)) {
    const int n = g.order();
    for (int k = 2; k <= n; ++k) {
      for (auto s : detail::k_subsets(n, k)) {
        const auto r = kappa_local(g, vs(g, s));
        ASSERT_EQ(r.value, brute::kappa_local(g, s)) << format_graph6(g) << " S=" << s;
        ASSERT_EQ(r.witness.size(), r.value);
        const auto v = verify_steiner_packing(g, vs(g, s), r.witness);
        ASSERT_TRUE(v.ok) << v.diagnostic;
      }
    }
  }
}

}  // namespace
}  // namespace ptc
