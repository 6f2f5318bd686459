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

#ifndef PTC_AUDIT_HPP
#define PTC_AUDIT_HPP

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ptc/closed_forms.hpp"
#include "ptc/connectivity.hpp"
#include "ptc/enumerate.hpp"
#include "ptc/graph.hpp"
#include "ptc/kappa.hpp"
#include "ptc/mu.hpp"
#include "ptc/rational.hpp"
#include "ptc/search.hpp"
#include "ptc/tau.hpp"
#include "ptc/transforms.hpp"

namespace ptc {

enum class Relation { kLe, kGe, kEq };
enum class CheckStatus { kPass, kFail, kSkip };

inline const char* to_string(Relation r) {
  switch (r) {
    case Relation::kLe:
      return "<=";
    case Relation::kGe:
      return ">=";
    case Relation::kEq:
      break;
  }
  return "==";
}

inline const char* to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::kPass:
      return "pass";
    case CheckStatus::kFail:
      return "fail";
    case CheckStatus::kSkip:
      break;
  }
  return "skip";
}

/// One instantiated relation "lhs REL rhs" on one graph.
struct BoundCheck {
  std::string name;
  std::string graph_id;
  int k = 0;
  Rational lhs;
  Relation relation = Relation::kLe;
  Rational rhs;
  CheckStatus status = CheckStatus::kSkip;
  std::string note;

  bool pass() const { return status == CheckStatus::kPass; }
};

inline BoundCheck make_check(std::string name, std::string id, int k, Rational lhs,
                             Relation rel, Rational rhs, std::string note = {}) {
  bool ok = false;
  switch (rel) {
    case Relation::kLe:
      ok = lhs <= rhs;
      break;
    case Relation::kGe:
      ok = lhs >= rhs;
      break;
    case Relation::kEq:
      ok = lhs == rhs;
      break;
  }
  return {std::move(name), std::move(id), k, lhs, rel, rhs,
          ok ? CheckStatus::kPass : CheckStatus::kFail, std::move(note)};
}

inline BoundCheck skipped_check(std::string name, std::string id, int k,
                                std::string why) {
  BoundCheck c;
  c.name = std::move(name);
  c.graph_id = std::move(id);
  c.k = k;
  c.status = CheckStatus::kSkip;
  c.note = std::move(why);
  return c;
}

/// Oracle calls that turn a blown budget into an empty value.
class Oracles {
 public:
  explicit Oracles(SearchOptions opt = {}) : opt_(opt) {}

  std::optional<int> tau(const Graph& g, int k) const {
    return guard([&] { return tau_k(g, k, opt_); });
  }
  std::optional<int> mu(const Graph& g, int k) const {
    return guard([&] { return mu_k(g, k, opt_); });
  }
  std::optional<int> kappa(const Graph& g, int k) const {
    return guard([&] { return kappa_k(g, k, opt_); });
  }
  const SearchOptions& options() const { return opt_; }

 private:
  template <class F>
  static std::optional<int> guard(F&& f) {
    try {
      return f();
    } catch (const BudgetExceeded&) {
      return std::nullopt;
    }
  }

  SearchOptions opt_;
};

namespace detail {

inline constexpr const char* kBudgetNote = "oracle budget exceeded";

// Appends "lhs REL rhs" when every input is known, a skip otherwise.
class CheckSink {
 public:
  CheckSink(std::vector<BoundCheck>& out, std::string id, int k)
      : out_(out), id_(std::move(id)), k_(k) {}

  void add(const std::string& name, std::optional<Rational> lhs, Relation rel,
           std::optional<Rational> rhs, const std::string& note) {
    if (!lhs || !rhs) {
      out_.push_back(skipped_check(name, id_, k_, std::string(kBudgetNote) + "; " + note));
    } else {
      out_.push_back(make_check(name, id_, k_, *lhs, rel, *rhs, note));
    }
  }

  void skip(const std::string& name, const std::string& why) {
    out_.push_back(skipped_check(name, id_, k_, why));
  }

  void set_k(int k) { k_ = k; }

 private:
  std::vector<BoundCheck>& out_;
  std::string id_;
  int k_;
};

inline std::optional<Rational> lift(std::optional<int> v) {
  if (!v) return std::nullopt;
  return Rational(*v);
}

template <class F>
std::optional<Rational> lift_with(std::optional<int> v, F&& f) {
  if (!v) return std::nullopt;
  return Rational(f(*v));
}

}  // namespace detail

/// Every single-graph relation at (G, k) for connected G and 3 <= k <= n.
inline std::vector<BoundCheck> audit_graph(const Graph& g, int k,
                                           const Oracles& oracle = Oracles{}) {
  detail::check_k(g, k);
  detail::require(k >= 3, "need k >= 3");
  detail::require(is_connected(g), "audit needs a connected graph");
  const int n = g.order();
  const auto id = graph_id(g);
  const int kap = vertex_connectivity(g);
  const int delta = g.min_degree();
  const auto tau = oracle.tau(g, k);
  const auto mu = oracle.mu(g, k);
  const auto kap_k = oracle.kappa(g, k);
  std::vector<BoundCheck> out;
  detail::CheckSink sink(out, id, k);
  using detail::lift;
  sink.add("Obs1.1", lift(tau), Relation::kLe, lift(mu), "tau_k <= mu_k");
  sink.add("Obs1.1", lift(mu), Relation::kLe, Rational(delta), "mu_k <= delta");
  sink.add("Lem1.1", lift(tau), Relation::kLe, Rational(std::max(0, delta - k + 1)),
           "tau_k <= max(0, delta-k+1)");
  sink.add("Lem1.2", lift(tau), Relation::kLe, Rational(std::max(0, kap - k + 2)),
           "tau_k <= max(0, kappa-k+2)");
  if (k + 1 <= n) {
    sink.add("Lem2.1", lift(tau), Relation::kGe, lift(oracle.tau(g, k + 1)),
             "tau_k >= tau_{k+1}");
  }
  sink.add("tau<=kappa_k", lift(tau), Relation::kLe, lift(kap_k), "tau_k <= kappa_k");
  for (const auto& iv : bound_report(g, k)) {
    const auto value = iv.target == "tau" ? tau : mu;
    if (iv.lower) {
      sink.add(iv.name, lift(value), Relation::kGe, *iv.lower,
               iv.target + "_k >= lower bound");
    }
    if (iv.upper) {
      sink.add(iv.name, lift(value), Relation::kLe, *iv.upper,
               iv.target + "_k <= upper bound");
    }
  }
  return out;
}

/// Deleting one edge never increases tau_k or mu_k.
inline std::vector<BoundCheck> audit_edge_deletion(const Graph& g, int k,
                                                   const Oracles& oracle = Oracles{}) {
  detail::check_k(g, k);
  const auto id = graph_id(g);
  const auto tau = oracle.tau(g, k);
  const auto mu = oracle.mu(g, k);
  std::vector<BoundCheck> out;
  detail::CheckSink sink(out, id, k);
  for (const auto& e : g.edges()) {
    const auto h = remove_edge(g, e);
    const auto note = "without " + std::to_string(e.u) + "-" + std::to_string(e.v);
    sink.add("Obs1.2", detail::lift(oracle.tau(h, k)), Relation::kLe,
             detail::lift(tau), "tau_k " + note);
    sink.add("Obs1.2", detail::lift(oracle.mu(h, k)), Relation::kLe,
             detail::lift(mu), "mu_k " + note);
  }
  return out;
}

/// Limits on which graphs the line-graph audit hands to the exact oracles.
struct LineGates {
  int max_base_edges = 12;  // oracle checks on L(G) need e(G) <= this
  int max_line_edges = 12;  // oracle checks on L(L(G)) need e(L(G)) <= this
};

/// Relations between G, L(G) and L(L(G)) for connected G with e(G) >= 2.
/// Checks whose hypotheses fail are left out; checks beyond a gate are
/// reported as skipped.
inline std::vector<BoundCheck> audit_line(const Graph& g,
                                          const Oracles& oracle = Oracles{},
                                          const LineGates& gates = LineGates{}) {
  detail::require(is_connected(g), "audit needs a connected graph");
  detail::require(g.size() >= 2, "line-graph audit needs e(G) >= 2");
  const int n = g.order();
  const int m = g.size();
  const auto id = graph_id(g);
  const int kap = vertex_connectivity(g);
  const int lam = edge_connectivity(g);
  const Graph l = line_graph(g).graph;
  const int kap_l = vertex_connectivity(l);
  const int lam_l = edge_connectivity(l);
  const bool has_ll = l.size() >= 1;
  const std::optional<Graph> ll =
      has_ll ? std::optional<Graph>(line_graph(l).graph) : std::nullopt;
  const bool gate_l = m <= gates.max_base_edges;
  const bool gate_ll = has_ll && l.size() <= gates.max_line_edges;
  const std::string l_gate = "gate: e(G) > " + std::to_string(gates.max_base_edges);
  const std::string ll_gate =
      "gate: e(L(G)) > " + std::to_string(gates.max_line_edges);

  std::vector<BoundCheck> out;
  detail::CheckSink sink(out, id, 0);
  using detail::lift;

  // Classical connectivities.
  if (lam >= 2) {
    sink.add("Thm1.1(1)", Rational(kap_l), Relation::kGe, Rational(lam),
             "kappa(L) >= lambda(G)");
  }
  sink.add("Thm1.1(2)", Rational(lam_l), Relation::kGe, Rational(2 * lam - 2),
           "lambda(L) >= 2 lambda(G) - 2");
  if (ll) {
    sink.add("Thm1.1(3)", Rational(vertex_connectivity(*ll)), Relation::kGe,
             Rational(2 * kap - 2), "kappa(L(L)) >= 2 kappa(G) - 2");
  }
  // G is lambda-edge-connected; "L(G) is lambda-connected" needs more than
  // lambda vertices in L(G).
  if (lam >= 1 && m >= lam + 1) {
    sink.add("Lem2.7", Rational(kap_l), Relation::kGe, Rational(lam),
             "L(G) is lambda(G)-connected");
  }
  if (lam >= 1) {
    sink.add("Lem2.7", Rational(lam_l), Relation::kGe, Rational(2 * lam - 2),
             "L(G) is (2 lambda(G) - 2)-edge-connected");
  }

  // Rounded log2 for the integer form of the logarithmic bounds.
  auto log_check = [&](const std::string& name, int k, std::optional<int> small,
                       std::optional<int> big, int shift, const std::string& note) {
    sink.set_k(k);
    if (!small || !big) {
      sink.add(name, std::nullopt, Relation::kGe, std::nullopt, note);
    } else if (*big - shift <= 0) {
      sink.skip(name, "log undefined: argument " + std::to_string(*big - shift));
    } else {
      sink.add(name, Rational((k + 1) * *small), Relation::kGe,
               Rational((shift ? 1 : 0) + ceil_log2(*big - shift)), note);
    }
  };

  // k = 3.
  if (n >= 3) {
    sink.set_k(3);
    const auto mu_g = oracle.mu(g, 3);
    const auto tau_g = oracle.tau(g, 3);
    if (!gate_l) {
      for (auto name : {"Thm3.1(1)", "Thm3.1(2)", "Prop3.1(1)", "Prop3.1(2)"}) {
        sink.skip(name, l_gate);
      }
    } else if (m >= 3) {
      const auto tau_l = oracle.tau(l, 3);
      const auto mu_l = oracle.mu(l, 3);
      sink.add("Thm3.1(1)", lift(mu_g), Relation::kLe, lift(tau_l),
               "mu_3(G) <= tau_3(L)");
      sink.add("Thm3.1(2)", lift(mu_l), Relation::kGe,
               mu_g ? std::optional<Rational>(Rational(*mu_g, 12) - Rational(1, 2))
                    : std::nullopt,
               "mu_3(L) >= mu_3(G)/12 - 1/2");
      log_check("Prop3.1(1)", 3, tau_l, mu_g, 0, "4 tau_3(L) >= log2 mu_3(G)");
      log_check("Prop3.1(2)", 3, mu_l, mu_g, 0, "4 mu_3(L) >= log2 mu_3(G)");
    }
    if (ll && ll->order() >= 3) {
      if (!gate_ll) {
        sink.skip("Thm3.1(3)", ll_gate);
        sink.skip("Prop3.1(3)", ll_gate);
      } else {
        const auto tau_ll = oracle.tau(*ll, 3);
        sink.add("Thm3.1(3)", lift(tau_ll), Relation::kGe,
                 tau_g ? std::optional<Rational>(Rational(*tau_g, 4) - Rational(2, 3))
                       : std::nullopt,
                 "tau_3(L(L)) >= tau_3(G)/4 - 2/3");
        log_check("Prop3.1(3)", 3, tau_ll, tau_g, 1,
                  "4 tau_3(L(L)) >= 1 + log2(tau_3(G) - 1)");
      }
    }
  }

  // k = n.
  if (n >= 3 && m >= n) {
    sink.set_k(n);
    const auto mu_g = oracle.mu(g, n);
    const auto tau_g = oracle.tau(g, n);
    if (!gate_l) {
      sink.skip("Prop3.2(1)", l_gate);
      sink.skip("Prop3.2(2)", l_gate);
    } else {
      sink.add("Prop3.2(1)", lift(mu_g), Relation::kLe, lift(oracle.tau(l, n)),
               "mu_n(G) <= tau_n(L)");
      sink.add("Prop3.2(2)", lift(oracle.mu(l, n)), Relation::kGe, lift(mu_g),
               "mu_n(L) >= mu_n(G)");
    }
    if (ll && ll->order() >= n) {
      if (!gate_ll) {
        sink.skip("Prop3.2(3)", ll_gate);
      } else {
        sink.add("Prop3.2(3)", lift(oracle.tau(*ll, n)), Relation::kGe, lift(tau_g),
                 "tau_n(L(L)) >= tau_n(G)");
      }
    }
  }

  // k = n-1 and k = n-2, for 2-edge-connected G.
  auto floor_of = [](std::optional<int> v, auto f) -> std::optional<Rational> {
    if (!v) return std::nullopt;
    return Rational(f(*v).floor());
  };
  if (lam >= 2 && n >= 4) {
    const int k = n - 1;
    sink.set_k(k);
    const auto mu_g = oracle.mu(g, k);
    const auto tau_g = oracle.tau(g, k);
    const Rational den((n + 1) * (n - 2));
    if (!gate_l) {
      sink.skip("Prop3.3a(1)", l_gate);
      sink.skip("Prop3.3a(2)", l_gate);
    } else if (m >= k) {
      sink.add("Prop3.3a(1)", lift(oracle.tau(l, k)), Relation::kGe,
               mu_g ? std::optional<Rational>(Rational(Rational(2 * *mu_g, n).ceil() - 1))
                    : std::nullopt,
               "tau_{n-1}(L) >= ceil(2 mu_{n-1}(G)/n) - 1");
      sink.add("Prop3.3a(2)", lift(oracle.mu(l, k)), Relation::kGe,
               floor_of(mu_g, [&](int v) { return Rational(4 * v - 4) / den; }),
               "mu_{n-1}(L) >= floor((4 mu_{n-1}(G) - 4)/((n+1)(n-2)))");
    }
    if (ll && ll->order() >= k) {
      if (!gate_ll) {
        sink.skip("Prop3.3a(3)", ll_gate);
      } else {
        sink.add("Prop3.3a(3)", lift(oracle.tau(*ll, k)), Relation::kGe,
                 floor_of(tau_g, [&](int v) { return Rational(4 * v - 4) / den; }),
                 "tau_{n-1}(L(L)) >= floor((4 tau_{n-1}(G) - 4)/((n+1)(n-2)))");
      }
    }
  }
  if (lam >= 2 && n >= 5) {
    const int k = n - 2;
    sink.set_k(k);
    const auto mu_g = oracle.mu(g, k);
    const auto tau_g = oracle.tau(g, k);
    const Rational den(n * n - n - 4);
    if (!gate_l) {
      sink.skip("Prop3.3b(1)", l_gate);
      sink.skip("Prop3.3b(2)", l_gate);
    } else if (m >= k) {
      sink.add("Prop3.3b(1)", lift(oracle.tau(l, k)), Relation::kGe,
               floor_of(mu_g, [&](int v) { return Rational(2 * v) / den; }),
               "tau_{n-2}(L) >= floor(2 mu_{n-2}(G)/(n^2-n-4))");
      sink.add("Prop3.3b(2)", lift(oracle.mu(l, k)), Relation::kGe,
               floor_of(mu_g, [&](int v) { return Rational(4 * v - 4) / den; }),
               "mu_{n-2}(L) >= floor((4 mu_{n-2}(G) - 4)/(n^2-n-4))");
    }
    if (ll && ll->order() >= k) {
      if (!gate_ll) {
        sink.skip("Prop3.3b(3)", ll_gate);
      } else {
        sink.add("Prop3.3b(3)", lift(oracle.tau(*ll, k)), Relation::kGe,
                 floor_of(tau_g, [&](int v) { return Rational(4 * v - 4) / den; }),
                 "tau_{n-2}(L(L)) >= floor((4 tau_{n-2}(G) - 4)/(n^2-n-4))");
      }
    }
  }
  return out;
}

/// Order, regularity and common-neighbour counts of L(K_n), n >= 4.
inline std::vector<BoundCheck> check_LKn_structure(int n) {
  detail::require(n >= 4, "need n >= 4");
  const Graph l = line_graph(complete_graph(n)).graph;
  const auto id = "L(K_" + std::to_string(n) + ")";
  const std::string caveat =
      n == 8 ? "; n = 8: these counts do not single out L(K_8)" : "";
  std::vector<BoundCheck> out;
  auto add = [&](const std::string& what, int lhs, int rhs) {
    out.push_back(make_check("Lem2.6", id, 0, Rational(lhs), Relation::kEq,
                             Rational(rhs), what + caveat));
  };
  add("order", l.order(), n * (n - 1) / 2);
  int dmin = l.order(), dmax = 0;
  for (Vertex v = 0; v < l.order(); ++v) {
    dmin = std::min(dmin, l.degree(v));
    dmax = std::max(dmax, l.degree(v));
  }
  add("min degree", dmin, 2 * n - 4);
  add("max degree", dmax, 2 * n - 4);
  int adj_min = l.order(), adj_max = -1, non_min = l.order(), non_max = -1;
  for (Vertex u = 0; u < l.order(); ++u) {
    for (Vertex v = u + 1; v < l.order(); ++v) {
      int common = 0;
      for (Vertex w = 0; w < l.order(); ++w) {
        common += l.has_edge(u, w) && l.has_edge(v, w);
      }
      if (l.has_edge(u, v)) {
        adj_min = std::min(adj_min, common);
        adj_max = std::max(adj_max, common);
      } else {
        non_min = std::min(non_min, common);
        non_max = std::max(non_max, common);
      }
    }
  }
  add("min common neighbours, adjacent", adj_min, n - 2);
  add("max common neighbours, adjacent", adj_max, n - 2);
  add("min common neighbours, nonadjacent", non_min, 4);
  add("max common neighbours, nonadjacent", non_max, 4);
  return out;
}

/// Closed forms and characterisations for k = n-1 and k = n-2 against the
/// oracle, on connected G with n >= 4 (k = n-2 needs n >= 5).
inline std::vector<BoundCheck> audit_high_order(const Graph& g,
                                                const Oracles& oracle = Oracles{}) {
  detail::require(is_connected(g), "audit needs a connected graph");
  const int n = g.order();
  detail::require(n >= 4, "need n >= 4");
  const auto id = graph_id(g);
  std::vector<BoundCheck> out;
  detail::CheckSink sink(out, id, n - 1);
  using detail::lift;
  const auto tau1 = oracle.tau(g, n - 1);
  const auto mu1 = oracle.mu(g, n - 1);
  sink.add("Lem2.11", lift(tau1), Relation::kEq, Rational(tau_high_order(g, n - 1)),
           "tau_{n-1} = floor(kappa/(n-1))");
  sink.add("Prop2.6", lift(mu1), Relation::kEq, Rational(mu_high_order(g, n - 1)),
           "mu_{n-1} = floor(lambda/(n-1))");
  sink.add("Lem2.4", lift(tau1), Relation::kEq, Rational(tau_n_minus_1_by_shape(g)),
           "tau_{n-1} = 1 iff complete, else 0");
  sink.add("Cor2.2", lift(mu1), Relation::kEq, Rational(mu_n_minus_1_by_shape(g)),
           "mu_{n-1} = 1 iff complete, else 0");
  if (n >= 5) {
    sink.set_k(n - 2);
    const auto tau2 = oracle.tau(g, n - 2);
    const auto mu2 = oracle.mu(g, n - 2);
    const auto shape = to_string(recognize_complement_shape(g));
    sink.add("Lem2.10", lift(tau2), Relation::kEq, Rational(tau_high_order(g, n - 2)),
             "tau_{n-2} piecewise in kappa; complement " + shape);
    sink.add("Prop2.8", lift(mu2), Relation::kEq, Rational(mu_high_order(g, n - 2)),
             "mu_{n-2} piecewise in lambda; complement " + shape);
    sink.add("Prop2.7", lift(mu2), Relation::kEq, Rational(mu_n_minus_2_by_shape(g)),
             "mu_{n-2} by complement shape; complement " + shape);
  }
  return out;
}

/// tau_{n-2} against the three-way split by complement shape (K_n, K_n minus
/// a matching of 1 or 2 edges, other).
inline std::vector<BoundCheck> audit_tau_n_minus_2_split(
    const Graph& g, const Oracles& oracle = Oracles{}) {
  detail::require(is_connected(g) && g.order() >= 5, "need connected G, n >= 5");
  std::vector<BoundCheck> out;
  detail::CheckSink sink(out, graph_id(g), g.order() - 2);
  sink.add("Lem2.5", detail::lift(oracle.tau(g, g.order() - 2)), Relation::kEq,
           Rational(tau_n_minus_2_by_shape(g)),
           "complement " + to_string(recognize_complement_shape(g)));
  return out;
}

/// mu_k = n-k exactly when G is complete; lhs and rhs are 0/1 flags.
inline std::vector<BoundCheck> audit_mu_maximum(const Graph& g, int k,
                                                const Oracles& oracle = Oracles{}) {
  detail::check_k(g, k);
  const int n = g.order();
  std::vector<BoundCheck> out;
  detail::CheckSink sink(out, graph_id(g), k);
  const auto mu = oracle.mu(g, k);
  const bool complete = g.size() == n * (n - 1) / 2;
  sink.add("Prop2.5", detail::lift_with(mu, [&](int v) { return v == n - k ? 1 : 0; }),
           Relation::kEq, Rational(complete ? 1 : 0),
           "[mu_k = n-k] == [G complete]");
  return out;
}

}  // namespace ptc

#endif  // PTC_AUDIT_HPP
