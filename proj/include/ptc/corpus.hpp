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

#ifndef PTC_CORPUS_HPP
#define PTC_CORPUS_HPP

#include <algorithm>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "ptc/audit.hpp"
#include "ptc/closed_forms.hpp"
#include "ptc/enumerate.hpp"
#include "ptc/random.hpp"
#include "ptc/transforms.hpp"

namespace ptc {

/// Which graphs to audit and which relations to check on them.
///
/// generator:
///   enumerate  all connected graphs with n_min <= n <= n_max (n <= 7)
///   random     `count` connected G(n, edge_prob) samples, n cycling
///              through random_sizes, sample i seeded with seed + i
///   family     complete, bipartite, rook, complete_minus_matching (see
///              family_checks)
///   none       no graphs; only graph-free checks such as "structure"
///
/// checks: graph, edge_deletion, line, high_order, mu_maximum, tau_split,
/// structure.
struct CorpusConfig {
  std::string generator = "enumerate";
  int n_min = 3;
  int n_max = 6;
  int max_edges = -1;
  std::vector<int> ks{3};
  int count = 200;
  std::uint64_t seed = 1;
  Rational edge_prob{1, 2};
  std::vector<int> random_sizes{7, 8, 9};
  std::vector<std::string> families;
  std::vector<std::string> checks{"graph"};
  std::vector<int> structure_sizes{4, 5, 6, 7, 9};
  LineGates gates;
  SearchOptions search;
};

struct CheckTotals {
  int pass = 0;
  int fail = 0;
  int skip = 0;
};

struct AuditReport {
  CorpusConfig config;
  int graphs = 0;
  std::vector<BoundCheck> checks;

  std::vector<BoundCheck> counterexamples() const {
    std::vector<BoundCheck> out;
    for (const auto& c : checks) {
      if (c.status == CheckStatus::kFail) out.push_back(c);
    }
    return out;
  }

  std::map<std::string, CheckTotals> totals() const {
    std::map<std::string, CheckTotals> t;
    for (const auto& c : checks) {
      auto& x = t[c.name];
      switch (c.status) {
        case CheckStatus::kPass:
          ++x.pass;
          break;
        case CheckStatus::kFail:
          ++x.fail;
          break;
        case CheckStatus::kSkip:
          ++x.skip;
          break;
      }
    }
    return t;
  }

  int failures() const {
    return static_cast<int>(std::count_if(checks.begin(), checks.end(), [](auto& c) {
      return c.status == CheckStatus::kFail;
    }));
  }
};

namespace detail {

inline bool has(const std::vector<std::string>& v, const std::string& x) {
  return std::find(v.begin(), v.end(), x) != v.end();
}

inline std::vector<Graph> corpus_graphs(const CorpusConfig& cfg) {
  std::vector<Graph> out;
  if (cfg.generator == "enumerate") {
    for (int n = std::max(cfg.n_min, 1); n <= cfg.n_max; ++n) {
      for (auto& g : enumerate_graphs(n, true)) {
        if (cfg.max_edges < 0 || g.size() <= cfg.max_edges) out.push_back(std::move(g));
      }
    }
  } else if (cfg.generator == "random") {
    require(!cfg.random_sizes.empty(), "random corpus needs sizes");
    const std::int64_t max_draws = 1000 * static_cast<std::int64_t>(cfg.count) + 1000;
    for (std::int64_t i = 0; static_cast<int>(out.size()) < cfg.count; ++i) {
      if (i >= max_draws) throw std::runtime_error("too few connected samples");
      const int n = cfg.random_sizes[i % cfg.random_sizes.size()];
      auto g = random_graph(n, cfg.edge_prob, cfg.seed + static_cast<std::uint64_t>(i));
      if (is_connected(g)) out.push_back(std::move(g));
    }
  } else if (cfg.generator != "family" && cfg.generator != "none") {
    throw std::invalid_argument("unknown generator '" + cfg.generator + "'");
  }
  return out;
}

// Closed-form values on named families against the oracle.
inline void family_checks(const CorpusConfig& cfg, const Oracles& oracle,
                          AuditReport& report) {
  auto equal = [&](const char* name, const std::string& id, int k,
                   std::optional<int> value, int formula, const std::string& note) {
    if (!value) {
      report.checks.push_back(skipped_check(name, id, k, kBudgetNote));
    } else {
      report.checks.push_back(
          make_check(name, id, k, Rational(*value), Relation::kEq, Rational(formula), note));
    }
  };
  for (const auto& fam : cfg.families) {
    if (fam == "complete") {
      for (int n = std::max(cfg.n_min, 3); n <= cfg.n_max; ++n) {
        const auto g = complete_graph(n);
        ++report.graphs;
        const auto id = "K_" + std::to_string(n);
        for (int k = 3; k <= n; ++k) {
          equal("Lem1.3", id, k, oracle.tau(g, k), tau_complete(n, k), "tau_k(K_n) = n-k");
          equal("Prop2.3", id, k, oracle.mu(g, k), mu_complete(n, k), "mu_k(K_n) = n-k");
        }
      }
    } else if (fam == "bipartite") {
      for (int a = 1; a <= cfg.n_max; ++a) {
        for (int b = a; b <= cfg.n_max; ++b) {
          const auto g = complete_bipartite(a, b);
          ++report.graphs;
          const auto id = "K_{" + std::to_string(a) + "," + std::to_string(b) + "}";
          for (int k : cfg.ks) {
            if (k < 3 || k > a + b) continue;
            const auto tau = oracle.tau(g, k);
            if (k == 3 && a >= 2) {
              equal("Cor4.1", id, k, tau, a - 2, "tau_3(K_{a,b}) = a-2");
            }
            equal("Lem4.1", id, k, tau, tau_complete_bipartite(a, b, k),
                  "tau_k(K_{a,b}) = max(min(a-k+1, b-k+1), 0)");
          }
        }
      }
    } else if (fam == "rook") {
      for (int r = 3; r <= cfg.n_max; ++r) {
        for (int s = r; s <= cfg.n_max; ++s) {
          if (r * s > 16) continue;
          const auto g = rook_graph(r, s);
          ++report.graphs;
          const auto id = "K_" + std::to_string(r) + "xK_" + std::to_string(s);
          equal("Lem4.4", id, 3, oracle.tau(g, 3), tau_rook(r, s),
                "tau_3(K_r x K_s) = r+s-4");
        }
      }
    } else if (fam == "complete_minus_matching") {
      for (int n = std::max(cfg.n_min, 5); n <= cfg.n_max; ++n) {
        for (int m = 0; 2 * m <= n; ++m) {
          std::vector<Edge> matching;
          for (int i = 0; i < m; ++i) matching.push_back({2 * i, 2 * i + 1});
          const auto g = complete_minus(n, matching);
          ++report.graphs;
          for (auto& c : audit_tau_n_minus_2_split(g, oracle)) {
            c.note += "; |M| = " + std::to_string(m);
            report.checks.push_back(std::move(c));
          }
        }
      }
    } else {
      throw std::invalid_argument("unknown family '" + fam + "'");
    }
  }
}

}  // namespace detail

/// Runs every configured check; the result depends only on the config.
inline AuditReport audit_corpus(const CorpusConfig& cfg) {
  AuditReport report;
  report.config = cfg;
  const Oracles oracle(cfg.search);
  const auto& want = cfg.checks;
  using detail::has;
  if (cfg.generator == "family") detail::family_checks(cfg, oracle, report);
  auto graphs = detail::corpus_graphs(cfg);
  // Canonical id order; equal ids keep their draw order.
  std::vector<std::pair<std::string, std::size_t>> order;
  for (std::size_t i = 0; i < graphs.size(); ++i) order.emplace_back(graph_id(graphs[i]), i);
  std::stable_sort(order.begin(), order.end(),
                   [](auto& a, auto& b) { return a.first < b.first; });
  for (const auto& [id, i] : order) {
    const auto& g = graphs[i];
    const int n = g.order();
    ++report.graphs;
    auto append = [&report](std::vector<BoundCheck> v) {
      for (auto& c : v) report.checks.push_back(std::move(c));
    };
    for (int k : cfg.ks) {
      if (k < 3 || k > n) continue;
      if (has(want, "graph")) append(audit_graph(g, k, oracle));
      if (has(want, "edge_deletion")) append(audit_edge_deletion(g, k, oracle));
      if (has(want, "mu_maximum")) append(audit_mu_maximum(g, k, oracle));
    }
    if (has(want, "line") && g.size() >= 2) append(audit_line(g, oracle, cfg.gates));
    if (has(want, "high_order") && n >= 4) append(audit_high_order(g, oracle));
    if (has(want, "tau_split") && n >= 5) append(audit_tau_n_minus_2_split(g, oracle));
  }
  if (has(want, "structure")) {
    for (int n : cfg.structure_sizes) {
      for (auto& c : check_LKn_structure(n)) report.checks.push_back(std::move(c));
    }
  }
  return report;
}

}  // namespace ptc

#endif  // PTC_CORPUS_HPP
