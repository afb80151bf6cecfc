// Copyright 2026 The gaclab Authors
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

// Command-line front end. Four commands:
//
//   question   answer one of the five questions on an instance file
//   propagate  run a specialized propagator and report the filtered domains
//   gadget     build a reduction gadget from a source problem, optionally
//              verifying it against the exhaustive source oracle
//   suite      run a differential suite, streaming one record per case
//
// Exit codes: 0 computed answer, 1 suite failures, 2 parse or usage error,
// 3 budget exhausted, 4 unsupported instance.

#include <algorithm>
#include <chrono>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "gaclab/core.hpp"
#include "gaclab/engine.hpp"
#include "gaclab/gadgets.hpp"
#include "gaclab/io.hpp"
#include "gaclab/propagators.hpp"
#include "gaclab/sources.hpp"
#include "gaclab/suites.hpp"
#include "json.hpp"

using nlohmann::json;
using namespace gaclab;

namespace {

struct CommonFlags {
  long long budget = 10'000'000;
  unsigned long seed = 7;
  std::string format = "json";
};

struct QuestionArgs {
  std::string instance_path;
  std::string question;
  std::string engine = "direct";
  std::string var;
  int value = 0;
  std::string candidate_path;
};

struct PropagateArgs {
  std::string instance_path;
  std::string prop;
};

struct GadgetArgs {
  std::string family;
  std::string source_path;
  std::string source2_path;
  std::string out_path;
  bool verify = false;
  int cardinality = 2;
  long long target = 1;
};

struct SuiteArgs {
  std::string name;
  std::string scale = "full";
  int count = 0;
};

struct Timer {
  std::chrono::steady_clock::time_point start =
      std::chrono::steady_clock::now();
  long long ms() const {
    return std::chrono::duration_cast<std::chrono::milliseconds>(
               std::chrono::steady_clock::now() - start)
        .count();
  }
};

void add_common(CLI::App* cmd, CommonFlags& flags) {
  cmd->add_option("--budget", flags.budget,
                  "Search budget in value placements")
      ->capture_default_str();
  cmd->add_option("--seed", flags.seed, "Seed for the random corpora")
      ->capture_default_str();
  cmd->add_option("--format", flags.format, "Report format")
      ->check(CLI::IsMember({"json", "text"}))
      ->capture_default_str();
}

// One record per line in json mode; "key: value" lines in text mode.
void emit(const CommonFlags& flags, const json& record) {
  if (flags.format == "json") {
    std::cout << record.dump() << "\n";
    return;
  }
  for (const auto& [key, value] : record.items())
    std::cout << key << ": "
              << (value.is_string() ? value.get<std::string>() : value.dump())
              << "\n";
}

int usage_error(const std::string& msg) {
  std::cerr << "gaclab: " << msg << "\n";
  return 2;
}

int run_question(const CommonFlags& flags, const CLI::App* cmd,
                 const QuestionArgs& a, const std::string& echo) {
  const auto kind = question_kind_from_name(a.question);
  if (!kind) return usage_error("unknown question '" + a.question + "'");
  const bool has_var = cmd->count("--var") > 0;
  const bool has_value = cmd->count("--value") > 0;
  if (*kind == QuestionKind::GacSupport && !(has_var && has_value))
    return usage_error("gac-support needs --var and --value");
  if (*kind == QuestionKind::MaxGac && a.candidate_path.empty())
    return usage_error("max-gac needs --candidate");

  const Instance inst = load_instance_file(a.instance_path);
  DomainMap candidate;
  if (!a.candidate_path.empty())
    candidate = load_domain_map_file(a.candidate_path);

  const SearchBudget budget{flags.budget};
  using K = QuestionKind;
  QuestionResult result;
  Timer timer;
  try {
    if (a.engine == "direct") {
      result = answer_question(inst, {*kind, a.var, a.value, candidate},
                               budget);
    } else if (a.engine == "via-wipeout" && *kind == K::GacSupport) {
      result = gac_support_via_wipeout(inst, a.var, a.value, budget);
    } else if (a.engine == "via-domain" && *kind == K::GacSupport) {
      result = gac_support_via_domain(inst, a.var, a.value, budget);
    } else if (a.engine == "via-support" && *kind == K::NoGacWipeOut) {
      result = no_gac_wipeout_via_support(inst, budget);
    } else if (a.engine == "via-support" && *kind == K::GacDomain) {
      result = gac_domain_via_support(inst, budget);
    } else if (a.engine == "via-support" && *kind == K::MaxGac) {
      result = max_gac_via_support(inst, candidate, budget);
    } else if (a.engine == "via-maxgac" && *kind == K::IsItGac) {
      result = is_it_gac_via_maxgac(inst, budget);
    } else {
      return usage_error("engine '" + a.engine + "' does not answer " +
                         a.question);
    }
  } catch (const BudgetExhaustedError& e) {
    emit(flags, {{"command", echo},
                 {"error", "budget-exhausted"},
                 {"explored", e.explored()},
                 {"budget", e.budget()}});
    return 3;
  }
  const long long ms = timer.ms();

  json rec;
  rec["command"] = echo;
  rec["instance"] = a.instance_path;
  rec["question"] = a.question;
  rec["engine"] = a.engine == "direct" ? std::string("generic") : a.engine;
  rec["answer"] = result.answer;
  if (result.witness) {
    json w = json::object();
    for (const auto& [id, v] : *result.witness) w[id] = v;
    rec["witness"] = std::move(w);
  }
  if (result.domain_witness)
    rec["domains"] = domain_map_to_json(*result.domain_witness);
  rec["tuplesExplored"] = result.tuples_explored;
  rec["elapsedMs"] = ms;
  emit(flags, rec);
  return 0;
}

int run_propagate(const CommonFlags& flags, const PropagateArgs& a,
                  const std::string& echo) {
  const std::string prop =
      a.prop == "cardpath" ? std::string("cardpath-dp") : a.prop;
  const Instance inst = load_instance_file(a.instance_path);

  PropagationOutcome out;
  Timer timer;
  try {
    if (prop == "alldifferent") {
      out = alldifferent_gac(inst);
    } else if (prop == "among") {
      out = among_const_gac(inst);
    } else if (prop == "gcc") {
      out = gcc_fixed_gac(inst);
    } else {
      out = cardpath_dp_gac(inst);
    }
  } catch (const UnsupportedInstanceError& e) {
    emit(flags, {{"command", echo},
                 {"error", "unsupported-instance"},
                 {"detail", e.what()}});
    return 4;
  } catch (const ScaleLimitError& e) {
    emit(flags, {{"command", echo},
                 {"error", "unsupported-instance"},
                 {"detail", e.what()}});
    return 4;
  }
  const long long ms = timer.ms();

  json removed = json::array();
  for (const auto& [id, v] : out.removed)
    removed.push_back({{"var", id}, {"value", v}});
  json rec;
  rec["command"] = echo;
  rec["instance"] = a.instance_path;
  rec["engine"] = prop;
  rec["answer"] = !out.wipeout;
  rec["wipeout"] = out.wipeout;
  rec["domains"] = domain_map_to_json(out.domains);
  rec["removed"] = std::move(removed);
  rec["removedCount"] = out.removed.size();
  rec["elapsedMs"] = ms;
  emit(flags, rec);
  return 0;
}

SourceProblem load_source(const GadgetArgs& a) {
  const std::string text = read_text_file(a.source_path);
  if (a.family == "isitgac" || a.family == "cardpath-3col")
    return source_three_col(parse_graph(text));
  if (a.family == "maxgac")
    return source_three_col_pair(parse_graph(text),
                                 parse_graph(read_text_file(a.source2_path)));
  if (a.family == "cardpath-max2sat")
    return source_max2sat(parse_max2sat(text));
  if (a.family == "scalarproduct") return source_one_in_three(parse_cnf3(text));
  return source_sat3(parse_cnf3(text));
}

int run_gadget(const CommonFlags& flags, const GadgetArgs& a,
               const std::string& echo) {
  const auto families = gadget_family_names();
  if (std::find(families.begin(), families.end(), a.family) == families.end())
    return usage_error("unknown family '" + a.family + "'");
  if (!a.source2_path.empty() && a.family != "maxgac")
    return usage_error("--source2 only applies to family maxgac");
  if (a.family == "maxgac" && a.source2_path.empty())
    return usage_error("family maxgac needs --source2 with the second graph");

  const SourceProblem src = load_source(a);
  GadgetParams params;
  params.cardinality = a.cardinality;
  params.target = a.target;
  const GadgetOutput g = build_gadget(a.family, src, params);

  json rec;
  rec["command"] = echo;
  rec["family"] = a.family;
  rec["meta"] = gadget_meta_json(g);
  rec["variables"] = g.instance.variables.size();
  if (!a.out_path.empty()) {
    save_instance_file(g.instance, a.out_path);
    const std::string meta_path = a.out_path + ".meta.json";
    write_text_file(meta_path, gadget_meta_json(g).dump(2) + "\n");
    rec["instanceFile"] = a.out_path;
    rec["metaFile"] = meta_path;
  }

  int code = 0;
  if (a.verify) {
    Timer timer;
    const VerificationReport vr = verify_gadget(g, src, {flags.budget});
    const long long ms = timer.ms();
    json v;
    v["oracleAnswer"] = vr.oracle_answer;
    if (vr.engine_answer.has_value()) v["engineAnswer"] = *vr.engine_answer;
    if (vr.agree.has_value()) v["agree"] = *vr.agree;
    if (vr.certificate_ok.has_value()) v["certificateOk"] = *vr.certificate_ok;
    v["tuplesExplored"] = vr.tuples_explored;
    v["oversized"] = vr.oversized;
    rec["verification"] = std::move(v);
    rec["elapsedMs"] = ms;
    if (vr.oversized) code = 3;
  }
  emit(flags, rec);
  return code;
}

int run_suite_cmd(const CommonFlags& flags, const SuiteArgs& a) {
  SuiteConfig cfg;
  cfg.seed = flags.seed;
  cfg.count = a.count;
  cfg.scale = a.scale == "full" ? std::string() : a.scale;
  cfg.budget = SearchBudget{flags.budget};
  const SuiteReport rep = run_suite(a.name, cfg);

  if (flags.format == "json") {
    for (const auto& c : rep.case_reports) std::cout << c.record.dump() << "\n";
    std::cout << rep.summary_json().dump() << "\n";
  } else {
    for (const auto& f : rep.failures) std::cout << "FAIL " << f << "\n";
    std::cout << "suite " << rep.suite << ": " << rep.passed << "/"
              << rep.cases << " passed, " << rep.failed << " failed\n";
  }
  return rep.ok() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "gaclab: arc-consistency questions, specialized propagators, "
      "hardness gadgets, and differential suites"};
  app.require_subcommand(1);

  CommonFlags flags;
  add_common(&app, flags);

  QuestionArgs qa;
  CLI::App* q = app.add_subcommand(
      "question", "Answer one of the five questions on an instance file");
  add_common(q, flags);
  q->add_option("instance", qa.instance_path, "Instance file")->required();
  q->add_option("--q", qa.question,
                "gac-support, is-it-gac, no-gac-wipeout, gac-domain, max-gac")
      ->required();
  q->add_option("--engine", qa.engine,
                "direct, via-support, via-wipeout, via-domain, via-maxgac")
      ->check(CLI::IsMember(
          {"direct", "via-support", "via-wipeout", "via-domain", "via-maxgac"}))
      ->capture_default_str();
  q->add_option("--var", qa.var, "Scope variable (gac-support)");
  q->add_option("--value", qa.value, "Value (gac-support)");
  q->add_option("--candidate", qa.candidate_path,
                "Candidate domain-map file (max-gac)");

  PropagateArgs pa;
  CLI::App* p =
      app.add_subcommand("propagate", "Run a specialized propagator");
  add_common(p, flags);
  p->add_option("instance", pa.instance_path, "Instance file")->required();
  p->add_option("--prop", pa.prop,
                "alldifferent, among, gcc, cardpath-dp")
      ->required()
      ->check(CLI::IsMember(
          {"alldifferent", "among", "gcc", "cardpath-dp", "cardpath"}));

  GadgetArgs ga;
  CLI::App* g = app.add_subcommand(
      "gadget", "Build a reduction gadget from a source problem");
  add_common(g, flags);
  g->add_option("source", ga.source_path, "Source problem file")->required();
  g->add_option("--family", ga.family, "Gadget family name")->required();
  g->add_option("--source2", ga.source2_path,
                "Second graph file (maxgac pair)");
  g->add_option("--out", ga.out_path,
                "Write the instance here plus <out>.meta.json");
  g->add_flag("--verify", ga.verify,
              "Compare the gadget answer against the source oracle");
  g->add_option("--cardinality", ga.cardinality, "atMost1 set cardinality")
      ->capture_default_str();
  g->add_option("--target", ga.target, "scalarProduct target")
      ->capture_default_str();

  SuiteArgs sa;
  CLI::App* s = app.add_subcommand("suite", "Run a differential suite");
  add_common(s, flags);
  s->add_option("name", sa.name,
                "reducers, propagators, gadgets, paper-examples, smoke")
      ->required();
  s->add_option("--scale", sa.scale, "full or small")
      ->check(CLI::IsMember({"full", "small"}))
      ->capture_default_str();
  s->add_option("--count", sa.count, "Override the per-suite case count");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  std::string echo;
  for (int i = 1; i < argc; ++i) {
    if (i > 1) echo += ' ';
    echo += argv[i];
  }

  try {
    if (app.got_subcommand(q)) return run_question(flags, q, qa, echo);
    if (app.got_subcommand(p)) return run_propagate(flags, pa, echo);
    if (app.got_subcommand(g)) return run_gadget(flags, ga, echo);
    if (app.got_subcommand(s)) return run_suite_cmd(flags, sa);
  } catch (const BudgetExhaustedError& e) {
    std::cerr << "gaclab: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "gaclab: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
