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

#ifndef PTC_REPORT_HPP
#define PTC_REPORT_HPP

#include <cstdio>
#include <sstream>
#include <stdexcept>
#include <string>

#include "json.hpp"
#include "ptc/corpus.hpp"

namespace ptc {

using Json = nlohmann::ordered_json;

inline Rational parse_rational(const std::string& s) {
  const auto slash = s.find('/');
  try {
    if (slash == std::string::npos) return Rational(std::stoll(s));
    return Rational(std::stoll(s.substr(0, slash)), std::stoll(s.substr(slash + 1)));
  } catch (const std::logic_error&) {
    throw std::invalid_argument("bad rational '" + s + "'");
  }
}

inline Json to_json(const CorpusConfig& c) {
  return Json{{"generator", c.generator},
              {"n_min", c.n_min},
              {"n_max", c.n_max},
              {"max_edges", c.max_edges},
              {"ks", c.ks},
              {"count", c.count},
              {"seed", c.seed},
              {"edge_prob", c.edge_prob.str()},
              {"random_sizes", c.random_sizes},
              {"families", c.families},
              {"checks", c.checks},
              {"structure_sizes", c.structure_sizes},
              {"max_base_edges", c.gates.max_base_edges},
              {"max_line_edges", c.gates.max_line_edges},
              {"budget", c.search.node_budget}};
}

/// Reads a config; absent keys keep their defaults, unknown keys are errors.
inline CorpusConfig config_from_json(const Json& j) {
  if (!j.is_object()) throw std::invalid_argument("audit config must be a JSON object");
  CorpusConfig c;
  for (const auto& [key, v] : j.items()) {
    if (key == "generator") v.get_to(c.generator);
    else if (key == "n_min") v.get_to(c.n_min);
    else if (key == "n_max") v.get_to(c.n_max);
    else if (key == "max_edges") v.get_to(c.max_edges);
    else if (key == "ks") v.get_to(c.ks);
    else if (key == "count") v.get_to(c.count);
    else if (key == "seed") v.get_to(c.seed);
    else if (key == "edge_prob") c.edge_prob = parse_rational(v.get<std::string>());
    else if (key == "random_sizes") v.get_to(c.random_sizes);
    else if (key == "families") v.get_to(c.families);
    else if (key == "checks") v.get_to(c.checks);
    else if (key == "structure_sizes") v.get_to(c.structure_sizes);
    else if (key == "max_base_edges") v.get_to(c.gates.max_base_edges);
    else if (key == "max_line_edges") v.get_to(c.gates.max_line_edges);
    else if (key == "budget") v.get_to(c.search.node_budget);
    else throw std::invalid_argument("unknown audit config key '" + key + "'");
  }
  return c;
}

inline Json to_json(const BoundCheck& c) {
  return Json{{"name", c.name},         {"graph_id", c.graph_id},
              {"k", c.k},               {"lhs", c.lhs.str()},
              {"relation", to_string(c.relation)}, {"rhs", c.rhs.str()},
              {"status", to_string(c.status)},     {"note", c.note}};
}

/// One JSON object per check, then a summary line.
inline std::string format_report_jsonl(const AuditReport& r) {
  std::string out;
  for (const auto& c : r.checks) out += to_json(c).dump() + "\n";
  Json totals = Json::object();
  int pass = 0, fail = 0, skip = 0;
  for (const auto& [name, t] : r.totals()) {
    totals[name] = Json{{"pass", t.pass}, {"fail", t.fail}, {"skip", t.skip}};
    pass += t.pass;
    fail += t.fail;
    skip += t.skip;
  }
  Json summary{{"summary",
                Json{{"corpus", to_json(r.config)},
                     {"graphs", r.graphs},
                     {"checks", r.checks.size()},
                     {"pass", pass},
                     {"fail", fail},
                     {"skip", skip},
                     {"totals", totals}}}};
  out += summary.dump() + "\n";
  return out;
}

/// Per-name totals followed by every failed check.
inline std::string format_report_table(const AuditReport& r) {
  std::ostringstream os;
  char line[160];
  std::snprintf(line, sizeof line, "%-16s %8s %8s %8s\n", "check", "pass", "fail", "skip");
  os << line;
  for (const auto& [name, t] : r.totals()) {
    std::snprintf(line, sizeof line, "%-16s %8d %8d %8d\n", name.c_str(), t.pass, t.fail,
                  t.skip);
    os << line;
  }
  const auto bad = r.counterexamples();
  os << "graphs: " << r.graphs << ", checks: " << r.checks.size()
     << ", failures: " << bad.size() << "\n";
  for (const auto& c : bad) {
    os << "FAIL " << c.name << " " << c.graph_id << " k=" << c.k << ": " << c.lhs.str()
       << " " << to_string(c.relation) << " " << c.rhs.str() << " (" << c.note << ")\n";
  }
  return os.str();
}

}  // namespace ptc

#endif  // PTC_REPORT_HPP
