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

// Command-line front end. `run` takes the argument vector and streams so the
// tests can drive it in-process; tools/ptc.cpp only forwards main().

#ifndef PTC_TOOLS_CLI_APP_HPP
#define PTC_TOOLS_CLI_APP_HPP

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "ptc/ptc.hpp"

namespace ptc::cli {

enum ExitCode : int {
  kOk = 0,
  kFailed = 1,
  kUsage = 2,
  kBudget = 3,
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

namespace detail {

inline std::string slurp(const std::string& path, std::istream& in) {
  std::ostringstream ss;
  if (path.empty() || path == "-") {
    ss << in.rdbuf();
  } else {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw UsageError("cannot open '" + path + "'");
    ss << f.rdbuf();
  }
  return ss.str();
}

inline GraphFormat format_of(const std::string& s) {
  return s == "graph6" ? GraphFormat::kGraph6 : GraphFormat::kEdgeList;
}

inline std::string emit(const Graph& g, GraphFormat f) {
  return f == GraphFormat::kGraph6 ? format_graph6(g) + "\n" : format_edge_list(g);
}

inline std::vector<Vertex> parse_list(const std::string& s) {
  std::vector<Vertex> out;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(tok, &used);
    } catch (const std::logic_error&) {
      used = 0;
    }
    if (used == 0 || used != tok.size()) throw UsageError("bad terminal '" + tok + "'");
    out.push_back(v);
  }
  if (out.empty()) throw UsageError("empty terminal list");
  return out;
}

inline VertexSet terminals_or_prefix(const std::string& list, int n, int k) {
  if (!list.empty()) return VertexSet(n, parse_list(list));
  if (k < 1 || k > n) throw UsageError("k out of range");
  std::vector<Vertex> v(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) v[static_cast<std::size_t>(i)] = i;
  return VertexSet(n, std::move(v));
}

struct FamilyArgs {
  std::string family;
  std::string part = "line";
  int n = 0, a = 0, b = 0, r = 0, s = 0, p = 0, q = 0, k = 3;
  std::string terminals;
};

inline void add_family_flags(CLI::App* cmd, FamilyArgs& f, bool required) {
  auto* fam = cmd->add_option("--family", f.family, "complete|bipartite|rook|theorem41")
                  ->check(CLI::IsMember({"complete", "bipartite", "rook", "theorem41"}));
  if (required) fam->required();
  cmd->add_option("-n", f.n, "order of K_n");
  cmd->add_option("-a", f.a, "smaller side of K_{a,b}");
  cmd->add_option("-b", f.b, "larger side of K_{a,b}");
  cmd->add_option("-r", f.r, "rows of the rook's graph");
  cmd->add_option("-s", f.s, "columns of the rook's graph");
  cmd->add_option("-p", f.p, "prescribed tau_3 of the base graph");
  cmd->add_option("-q", f.q, "prescribed tau_3 of the line graph");
  cmd->add_option("--part", f.part, "theorem41 half to emit")
      ->check(CLI::IsMember({"base", "line"}));
}

inline void require_positive(int v, const char* flag) {
  if (v <= 0) throw UsageError(std::string(flag) + " must be given and positive");
}

inline InstanceCertificate build_family(const FamilyArgs& f) {
  if (f.family == "complete") {
    require_positive(f.n, "-n");
    return complete_instance(f.n, terminals_or_prefix(f.terminals, f.n, f.k));
  }
  if (f.family == "bipartite") {
    require_positive(f.a, "-a");
    require_positive(f.b, "-b");
    return bipartite_instance(f.a, f.b, terminals_or_prefix(f.terminals, f.a + f.b, 3));
  }
  if (f.family == "rook") {
    require_positive(f.r, "-r");
    require_positive(f.s, "-s");
    return rook_instance(f.r, f.s, terminals_or_prefix(f.terminals, f.r * f.s, 3));
  }
  require_positive(f.p, "-p");
  require_positive(f.q, "-q");
  auto [base, line] = theorem41_instance(f.p, f.q);
  return f.part == "base" ? base : line;
}


}  // namespace detail

inline int run(const std::vector<std::string>& args, std::istream& in,
               std::ostream& out, std::ostream& err) {
  CLI::App app{"Pendant-tree connectivity of small graphs and line graphs", "ptc"};
  app.require_subcommand(1);

  std::string input;
  std::string format = "edgelist";
  std::uint64_t budget = kDefaultNodeBudget;
  int jobs = 1;
  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--budget", budget, "search-node ceiling per terminal set")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--jobs", jobs, "worker threads")->check(CLI::PositiveNumber);
  };
  auto add_format = [&](CLI::App* cmd) {
    cmd->add_option("--format", format, "graph encoding")
        ->check(CLI::IsMember({"edgelist", "graph6"}));
  };

  // compute
  auto* compute = app.add_subcommand("compute", "tau_k, mu_k or kappa_k of a graph");
  std::string param = "tau";
  int k = 3;
  bool witness = false;
  std::string terminals;
  compute->add_option("graph", input, "graph file (default: stdin)");
  auto* param_opt = compute->add_option("--param", param, "tau|mu|kappa")
                        ->check(CLI::IsMember({"tau", "mu", "kappa"}));
  std::string compute_mode;
  compute
      ->add_option("--mode", compute_mode, "internal (tau) or edge (mu) disjointness")
      ->check(CLI::IsMember({"internal", "edge"}))
      ->excludes(param_opt);
  auto* k_opt = compute->add_option("-k", k, "terminal count (minimum over all sets)");
  compute->add_flag("--witness", witness, "also print an optimal packing");
  compute->add_option("--terminals", terminals, "fixed terminal set, e.g. 0,4,8")
      ->excludes(k_opt);
  add_format(compute);
  add_common(compute);

  // construct
  auto* construct = app.add_subcommand("construct", "certificate packing for a family");
  detail::FamilyArgs fam;
  std::string graph_out;
  detail::add_family_flags(construct, fam, true);
  construct->add_option("-k", fam.k, "terminal count for complete graphs");
  construct->add_option("--terminals", fam.terminals, "terminal set");
  construct->add_option("--graph-out", graph_out, "also write the host graph here");
  add_format(construct);

  // verify
  auto* verify = app.add_subcommand("verify", "check a certificate against a graph");
  detail::FamilyArgs vfam;
  std::string cert_path;
  verify->add_option("graph", input, "graph file (default: stdin)");
  verify->add_option("--cert", cert_path, "certificate file")->required();
  std::string verify_mode;
  verify->add_option("--mode", verify_mode, "require this disjointness mode")
      ->check(CLI::IsMember({"internal", "edge"}));
  detail::add_family_flags(verify, vfam, false);
  add_format(verify);

  // transform
  auto* transform = app.add_subcommand("transform", "line graph, complement, product");
  bool to_line = false, to_complement = false;
  std::string product_with;
  transform->add_option("graph", input, "graph file (default: stdin)");
  auto* line_flag = transform->add_flag("--line", to_line, "line graph");
  auto* comp_flag = transform->add_flag("--complement", to_complement, "complement");
  auto* prod_flag =
      transform->add_option("--product", product_with, "Cartesian product with this graph");
  line_flag->excludes(comp_flag)->excludes(prod_flag);
  comp_flag->excludes(prod_flag);
  add_format(transform);

  // audit
  auto* audit = app.add_subcommand("audit", "check bounds over a graph corpus");
  std::string config_path, report_path;
  CorpusConfig cfg;
  std::string edge_prob;
  audit->add_option("--config", config_path, "JSON corpus config");
  audit->add_option("--report", report_path, "write the JSON Lines report here");
  auto* o_gen = audit->add_option("--generator", cfg.generator, "enumerate|random|family|none")
                    ->check(CLI::IsMember({"enumerate", "random", "family", "none"}));
  auto* o_nmin = audit->add_option("--n-min", cfg.n_min);
  auto* o_nmax = audit->add_option("--n-max", cfg.n_max);
  auto* o_emax = audit->add_option("--max-edges", cfg.max_edges);
  auto* o_ks = audit->add_option("-k", cfg.ks, "terminal counts")->delimiter(',');
  auto* o_count = audit->add_option("--count", cfg.count, "random sample size");
  auto* o_seed = audit->add_option("--seed", cfg.seed);
  auto* o_prob = audit->add_option("--edge-prob", edge_prob, "e.g. 1/2");
  auto* o_sizes = audit->add_option("--random-sizes", cfg.random_sizes)->delimiter(',');
  auto* o_fams = audit->add_option("--families", cfg.families)->delimiter(',');
  auto* o_checks = audit->add_option("--checks", cfg.checks)->delimiter(',');
  add_common(audit);

  // enumerate
  auto* enumerate = app.add_subcommand("enumerate", "one graph per isomorphism class");
  int order = 0;
  bool connected = false;
  std::string enum_format = "graph6";
  enumerate->add_option("-n", order, "order (at most 7)")->required();
  enumerate->add_flag("--connected", connected, "connected graphs only");
  enumerate->add_option("--format", enum_format, "output encoding")
      ->check(CLI::IsMember({"edgelist", "graph6"}));

  std::vector<const char*> argv{"ptc"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  const SearchOptions opt{budget, jobs};
  const auto fmt = detail::format_of(format);
  try {
    if (*compute) {
      if (!compute_mode.empty()) param = compute_mode == "edge" ? "mu" : "tau";
      const Graph g = parse_graph(detail::slurp(input, in), fmt);
      if (witness && param == "kappa") {
        throw UsageError("--witness is available for tau and mu only");
      }
      auto local = [&](const VertexSet& s) {
        if (param == "tau") return tau_local(g, s, opt);
        if (param == "mu") return mu_local(g, s, opt);
        return kappa_local(g, s, opt);
      };
      LocalResult r;
      if (!terminals.empty()) {
        r = local(VertexSet(g.order(), detail::parse_list(terminals)));
      } else {
        if (k < 2 || k > g.order()) throw UsageError("-k must satisfy 2 <= k <= n");
        GlobalResult gr = param == "tau"  ? tau_k_with_witness(g, k, opt)
                          : param == "mu" ? mu_k_with_witness(g, k, opt)
                                          : kappa_k_with_witness(g, k, opt);
        r = std::move(gr.local);
      }
      out << r.value << "\n";
      if (witness) out << format_certificate(r.witness, "exact search, " + param);
      return kOk;
    }

    if (*construct) {
      const auto inst = detail::build_family(fam);
      if (!graph_out.empty()) {
        std::ofstream f(graph_out, std::ios::binary);
        if (!f) throw UsageError("cannot write '" + graph_out + "'");
        f << detail::emit(inst.graph, fmt);
      }
      out << format_certificate(inst.packing, inst.provenance);
      return kOk;
    }

    if (*verify) {
      const Graph g = vfam.family.empty()
                          ? parse_graph(detail::slurp(input, in), fmt)
                          : detail::build_family(vfam).graph;
      const auto cert = parse_certificate(detail::slurp(cert_path, in), g.order());
      auto res = verify_packing(g, cert.packing.terminals, cert.packing);
      const std::string mode(to_string(cert.packing.mode));
      if (res.ok && !verify_mode.empty() && verify_mode != mode) {
        res = {false, "certificate mode is " + mode + ", expected " + verify_mode};
      }
      if (!res.ok) {
        err << "invalid: " << res.diagnostic << "\n";
        return kFailed;
      }
      out << "ok: " << cert.packing.size() << " trees\n";
      return kOk;
    }

    if (*transform) {
      const Graph g = parse_graph(detail::slurp(input, in), fmt);
      if (to_line) {
        out << format_edge_list(line_graph(g).graph);
      } else if (to_complement) {
        out << format_edge_list(complement(g));
      } else if (!product_with.empty()) {
        const Graph h = parse_graph(detail::slurp(product_with, in), fmt);
        out << format_edge_list(cartesian_product(g, h));
      } else {
        throw UsageError("transform needs --line, --complement or --product");
      }
      return kOk;
    }

    if (*audit) {
      CorpusConfig c;
      if (!config_path.empty()) {
        c = config_from_json(Json::parse(detail::slurp(config_path, in)));
      }
      if (o_gen->count()) c.generator = cfg.generator;
      if (o_nmin->count()) c.n_min = cfg.n_min;
      if (o_nmax->count()) c.n_max = cfg.n_max;
      if (o_emax->count()) c.max_edges = cfg.max_edges;
      if (o_ks->count()) c.ks = cfg.ks;
      if (o_count->count()) c.count = cfg.count;
      if (o_seed->count()) c.seed = cfg.seed;
      if (o_prob->count()) c.edge_prob = parse_rational(edge_prob);
      if (o_sizes->count()) c.random_sizes = cfg.random_sizes;
      if (o_fams->count()) c.families = cfg.families;
      if (o_checks->count()) c.checks = cfg.checks;
      if (audit->get_option("--budget")->count()) c.search.node_budget = budget;
      c.search.jobs = jobs;
      const auto report = audit_corpus(c);
      if (!report_path.empty()) {
        std::ofstream f(report_path, std::ios::binary);
        if (!f) throw UsageError("cannot write '" + report_path + "'");
        f << format_report_jsonl(report);
      }
      out << format_report_table(report);
      return report.failures() == 0 ? kOk : kFailed;
    }

    if (*enumerate) {
      const auto f = detail::format_of(enum_format);
      bool first = true;
      for (const auto& g : enumerate_graphs(order, connected)) {
        if (f == GraphFormat::kEdgeList && !first) out << "\n";
        out << detail::emit(g, f);
        first = false;
      }
      return kOk;
    }
  } catch (const BudgetExceeded& e) {
    err << "budget exceeded: " << e.what() << "\n";
    return kBudget;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return kUsage;
  } catch (const Json::exception& e) {
    err << "config error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}

}  // namespace ptc::cli

#endif  // PTC_TOOLS_CLI_APP_HPP
