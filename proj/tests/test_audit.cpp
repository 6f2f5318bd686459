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

#include <sstream>

#include "ptc/audit.hpp"
#include "ptc/corpus.hpp"
#include "ptc/report.hpp"
#include "ptc/transforms.hpp"

namespace ptc {
namespace {

const BoundCheck* find(const std::vector<BoundCheck>& v, const std::string& name,
                       const std::string& note_prefix = "") {
  for (const auto& c : v) {
    if (c.name == name && c.note.rfind(note_prefix, 0) == 0) return &c;
  }
  return nullptr;
}

int count_status(const std::vector<BoundCheck>& v, CheckStatus s) {
  return static_cast<int>(
      std::count_if(v.begin(), v.end(), [s](const auto& c) { return c.status == s; }));
}

TEST(MakeCheckTest, Relations) {
  EXPECT_TRUE(make_check("x", "id", 3, Rational(1), Relation::kLe, Rational(2), "").pass());
  EXPECT_FALSE(make_check("x", "id", 3, Rational(3), Relation::kLe, Rational(2), "").pass());
  EXPECT_TRUE(make_check("x", "id", 3, Rational(3), Relation::kGe, Rational(5, 2), "").pass());
  EXPECT_TRUE(make_check("x", "id", 3, Rational(2), Relation::kEq, Rational(2), "").pass());
  const auto s = skipped_check("x", "id", 3, "why");
  EXPECT_EQ(s.status, CheckStatus::kSkip);
  EXPECT_FALSE(s.pass());
  EXPECT_EQ(s.note, "why");
}

TEST(AuditGraphTest, CompleteGraph) {
  const auto checks = audit_graph(complete_graph(6), 3);
  EXPECT_EQ(count_status(checks, CheckStatus::kFail), 0);
  EXPECT_EQ(count_status(checks, CheckStatus::kSkip), 0);
  const auto* obs = find(checks, "Obs1.1", "tau_k <= mu_k");
  ASSERT_NE(obs, nullptr);
  EXPECT_EQ(obs->lhs, Rational(3));
  EXPECT_EQ(obs->rhs, Rational(3));
  EXPECT_EQ(obs->graph_id, graph_id(complete_graph(6)));
  for (const char* name : {"Lem1.1", "Lem1.2", "Lem2.1", "Lem2.2", "Lem2.9", "Lem4.2",
                           "Obs2.2", "Prop2.1", "Prop2.4", "tau<=kappa_k"}) {
    EXPECT_NE(find(checks, name), nullptr) << name;
  }
  EXPECT_EQ(find(checks, "Cor2.3"), nullptr);  // only at k = n-2
  EXPECT_NE(find(audit_graph(complete_graph(5), 3), "Cor2.3"), nullptr);
}

TEST(AuditGraphTest, SparseExamples) {
  const auto c5 = audit_graph(cycle_graph(5), 3);
  const auto* p = find(c5, "Prop2.1");
  ASSERT_NE(p, nullptr);
  EXPECT_EQ(p->lhs, Rational(0));
  EXPECT_TRUE(p->pass());
  const auto star5 = audit_graph(star(5), 3);
  const auto* l = find(star5, "Lem1.1");
  ASSERT_NE(l, nullptr);
  EXPECT_TRUE(l->pass());
  EXPECT_EQ(l->lhs, Rational(0));
  EXPECT_EQ(count_status(star5, CheckStatus::kFail), 0);
  EXPECT_THROW(audit_graph(Graph(5), 3), std::invalid_argument);
  EXPECT_THROW(audit_graph(cycle_graph(5), 2), std::invalid_argument);
}

TEST(AuditGraphTest, LogLowerBoundCounterexampleIsReported) {
  const auto c4 = audit_graph(cycle_graph(4), 3);
  const auto* lem = find(c4, "Lem2.2", "tau_k >= lower");
  ASSERT_NE(lem, nullptr);
  EXPECT_EQ(lem->status, CheckStatus::kFail);
  EXPECT_EQ(lem->lhs, Rational(0));
  EXPECT_EQ(lem->rhs, Rational(1));
}

TEST(AuditGraphTest, BudgetExhaustionBecomesSkip) {
  const Oracles tiny(SearchOptions{10, 1});
  const auto checks = audit_graph(rook_graph(4, 4), 3, tiny);
  EXPECT_GT(count_status(checks, CheckStatus::kSkip), 0);
  EXPECT_EQ(count_status(checks, CheckStatus::kFail), 0);
  for (const auto& c : checks) {
    if (c.status == CheckStatus::kSkip) {
      EXPECT_EQ(c.note.rfind(detail::kBudgetNote, 0), 0u);
    }
  }
}

TEST(AuditEdgeDeletionTest, MonotoneOnSmallGraphs) {
  for (int n = 3; n <= 5; ++n) {
    for (const auto& g : enumerate_graphs(n, true)) {
      const auto checks = audit_edge_deletion(g, 3);
      EXPECT_EQ(static_cast<int>(checks.size()), 2 * g.size());
      EXPECT_EQ(count_status(checks, CheckStatus::kFail), 0);
    }
  }
}

TEST(AuditLineTest, Examples) {
  const auto k4 = audit_line(complete_graph(4));
  const auto* t = find(k4, "Thm3.1(1)");
  ASSERT_NE(t, nullptr);
  EXPECT_TRUE(t->pass());
  EXPECT_EQ(t->lhs, Rational(1));
  const auto c5 = audit_line(cycle_graph(5));
  const auto* w = find(c5, "Thm1.1(1)");
  ASSERT_NE(w, nullptr);
  EXPECT_EQ(w->lhs, Rational(2));
  EXPECT_TRUE(w->pass());
  const auto st = audit_line(star(5));
  const auto* s = find(st, "Thm3.1(1)");
  ASSERT_NE(s, nullptr);
  EXPECT_EQ(s->lhs, Rational(0));
  EXPECT_EQ(s->rhs, Rational(2));
  EXPECT_EQ(find(st, "Thm1.1(1)"), nullptr);  // lambda = 1: hypothesis fails
}

TEST(AuditLineTest, GatesProduceNamedSkips) {
  const auto checks = audit_line(complete_graph(6));  // e = 15 > 12
  const auto* t = find(checks, "Thm3.1(1)");
  ASSERT_NE(t, nullptr);
  EXPECT_EQ(t->status, CheckStatus::kSkip);
  EXPECT_NE(t->note.find("gate"), std::string::npos);
  EXPECT_TRUE(find(checks, "Thm1.1(1)")->pass());
}

TEST(AuditLineTest, NoFailuresOnSmallConnectedGraphs) {
  for (int n = 2; n <= 5; ++n) {
    for (const auto& g : enumerate_graphs(n, true)) {
      if (g.size() < 2 || g.size() > 8) continue;
      const auto checks = audit_line(g);
      for (const auto& c : checks) {
        EXPECT_NE(c.status, CheckStatus::kFail)
            << c.name << " " << c.graph_id << " " << c.lhs.str() << " vs " << c.rhs.str();
      }
    }
  }
}

TEST(LineStructureTest, LineGraphsOfCompleteGraphs) {
  for (int n : {4, 5, 6, 7, 9}) {
    const auto checks = check_LKn_structure(n);
    EXPECT_EQ(count_status(checks, CheckStatus::kPass), static_cast<int>(checks.size()));
  }
  const auto five = check_LKn_structure(5);
  EXPECT_EQ(find(five, "Lem2.6", "order")->lhs, Rational(10));
  EXPECT_EQ(find(five, "Lem2.6", "min degree")->lhs, Rational(6));
  EXPECT_EQ(find(five, "Lem2.6", "min common neighbours, adjacent")->lhs, Rational(3));
  const auto nine = check_LKn_structure(9);
  EXPECT_EQ(find(nine, "Lem2.6", "max degree")->lhs, Rational(14));
  EXPECT_EQ(find(nine, "Lem2.6", "order")->lhs, Rational(36));
  const auto eight = check_LKn_structure(8);
  EXPECT_NE(eight.front().note.find("n = 8"), std::string::npos);
  EXPECT_THROW(check_LKn_structure(3), std::invalid_argument);
}

TEST(AuditHighOrderTest, CharacterisationChecks) {
  const auto k5 = audit_high_order(complete_graph(5));
  EXPECT_EQ(count_status(k5, CheckStatus::kFail), 0);
  // Complement K_{1,3} + K_1: the star rule predicts 1, the value is 0.
  const Graph g = complete_minus(5, std::vector<Edge>{{0, 1}, {0, 2}, {0, 3}});
  const auto checks = audit_high_order(g);
  EXPECT_EQ(find(checks, "Prop2.7")->status, CheckStatus::kFail);
  EXPECT_EQ(find(checks, "Lem2.10")->status, CheckStatus::kPass);
  EXPECT_EQ(find(checks, "Lem2.11")->status, CheckStatus::kPass);
}

TEST(AuditCorpusTest, FamilyClosedForms) {
  CorpusConfig cfg;
  cfg.generator = "family";
  cfg.families = {"complete", "bipartite"};
  cfg.n_min = 4;
  cfg.n_max = 5;
  cfg.ks = {3, 4};
  const auto report = audit_corpus(cfg);
  EXPECT_EQ(report.failures(), 0);
  EXPECT_GT(report.totals().at("Lem1.3").pass, 0);
  EXPECT_GT(report.totals().at("Cor4.1").pass, 0);
  EXPECT_GT(report.totals().at("Lem4.1").pass, 0);
}

TEST(AuditCorpusTest, DeterministicAndIndependentOfJobs) {
  CorpusConfig cfg;
  cfg.generator = "random";
  cfg.count = 12;
  cfg.random_sizes = {6, 7};
  cfg.seed = 99;
  cfg.checks = {"graph", "mu_maximum"};
  const auto a = format_report_jsonl(audit_corpus(cfg));
  const auto b = format_report_jsonl(audit_corpus(cfg));
  cfg.search.jobs = 3;
  const auto c = format_report_jsonl(audit_corpus(cfg));
  EXPECT_EQ(a, b);
  EXPECT_EQ(a, c);
}

TEST(AuditCorpusTest, EnumeratedCorpusSortedById) {
  CorpusConfig cfg;
  cfg.n_max = 5;
  cfg.checks = {"mu_maximum"};
  const auto report = audit_corpus(cfg);
  EXPECT_EQ(report.graphs, 1 + 2 + 6 + 21 - 1);  // n = 3..5
  std::vector<std::string> ids;
  for (const auto& c : report.checks) ids.push_back(c.graph_id);
  EXPECT_TRUE(std::is_sorted(ids.begin(), ids.end()));
  // At k = n every graph has mu_n = 0 = n-k, so the path P3 breaks the
  // biconditional; nothing else does.
  ASSERT_EQ(report.failures(), 1);
  EXPECT_EQ(report.counterexamples().front().graph_id, graph_id(path_graph(3)));
}

TEST(ReportTest, JsonLinesAndTotals) {
  CorpusConfig cfg;
  cfg.n_max = 4;
  cfg.checks = {"graph", "structure"};
  cfg.structure_sizes = {4, 5};
  const auto report = audit_corpus(cfg);
  std::istringstream in(format_report_jsonl(report));
  std::string line;
  std::vector<Json> rows;
  while (std::getline(in, line)) rows.push_back(Json::parse(line));
  ASSERT_EQ(rows.size(), report.checks.size() + 1);
  for (std::size_t i = 0; i < report.checks.size(); ++i) {
    const auto& r = rows[i];
    EXPECT_EQ(r.at("name"), report.checks[i].name);
    EXPECT_TRUE(r.contains("graph_id") && r.contains("k") && r.contains("lhs") &&
                r.contains("rhs"));
    EXPECT_TRUE(r.at("status") == "pass" || r.at("status") == "fail" ||
                r.at("status") == "skip");
  }
  const auto& summary = rows.back().at("summary");
  EXPECT_EQ(summary.at("checks"), report.checks.size());
  int pass = 0, fail = 0, skip = 0;
  for (const auto& [name, t] : report.totals()) {
    EXPECT_EQ(summary.at("totals").at(name).at("pass"), t.pass);
    pass += t.pass;
    fail += t.fail;
    skip += t.skip;
  }
  EXPECT_EQ(pass + fail + skip, static_cast<int>(report.checks.size()));
  EXPECT_EQ(summary.at("fail"), fail);
  EXPECT_EQ(summary.at("corpus").at("generator"), "enumerate");
  const auto table = format_report_table(report);
  EXPECT_NE(table.find("Lem2.6"), std::string::npos);
  EXPECT_NE(table.find("failures: " + std::to_string(fail)), std::string::npos);
}

TEST(ReportTest, ConfigRoundTripAndErrors) {
  CorpusConfig cfg;
  cfg.generator = "random";
  cfg.edge_prob = Rational(2, 5);
  cfg.ks = {3, 4};
  cfg.checks = {"graph", "line"};
  const auto back = config_from_json(to_json(cfg));
  EXPECT_EQ(to_json(back), to_json(cfg));
  EXPECT_EQ(back.edge_prob, Rational(2, 5));
  EXPECT_THROW(config_from_json(Json{{"colour", "red"}}), std::invalid_argument);
  EXPECT_THROW(config_from_json(Json::array()), std::invalid_argument);
  EXPECT_THROW(parse_rational("1/x"), std::invalid_argument);
  CorpusConfig bad;
  bad.generator = "magic";
  EXPECT_THROW(audit_corpus(bad), std::invalid_argument);
}

}  // namespace
}  // namespace ptc
