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

#include "gaclab/suites.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <sstream>

#include "gaclab/corpus.hpp"
#include "gaclab/fixtures.hpp"
#include "gaclab/gadgets.hpp"
#include "gaclab/io.hpp"
#include "gaclab/propagators.hpp"

namespace gaclab {

nlohmann::json SuiteReport::summary_json() const {
  return {{"suite", suite},
          {"cases", cases},
          {"passed", passed},
          {"failed", failed},
          {"failures", failures}};
}

namespace {

std::string pad_index(int i) {
  std::string s = std::to_string(i);
  while (s.size() < 5) s.insert(s.begin(), '0');
  return s;
}

void push_case(SuiteReport& rep, std::string id, bool ok, std::string detail,
               nlohmann::json extra = nlohmann::json::object()) {
  SuiteCase c;
  c.id = std::move(id);
  c.ok = ok;
  c.detail = std::move(detail);
  c.record = std::move(extra);
  c.record["case"] = c.id;
  c.record["ok"] = c.ok;
  if (!c.detail.empty()) c.record["detail"] = c.detail;
  rep.cases += 1;
  (ok ? rep.passed : rep.failed) += 1;
  if (!ok) rep.failures.push_back(c.id + ": " + c.detail);
  rep.case_reports.push_back(std::move(c));
}

int default_count(const SuiteConfig& cfg, int dflt) {
  int c = cfg.count > 0 ? cfg.count : dflt;
  if (cfg.scale == "small") c = std::max(1, c / 10);
  return c;
}

Instance with_domains(const Instance& inst, const DomainMap& doms) {
  Instance out = inst;
  for (size_t i = 0; i < out.variables.size(); ++i) {
    auto it = doms.find(out.variables[i]);
    if (it != doms.end()) out.domains[i] = it->second;
  }
  return out;
}

bool tuple_accepted(const Checker& ch, const Tuple& t) {
  std::vector<Value> by_var(static_cast<size_t>(ch.num_vars()));
  for (int i = 0; i < ch.num_vars(); ++i) {
    auto it = t.find(ch.vars()[static_cast<size_t>(i)]);
    if (it == t.end()) return false;
    by_var[static_cast<size_t>(i)] = it->second;
  }
  return ch.complete(by_var);
}

// Exhaustive support sets: for every variable the values that occur in some
// satisfying tuple within the given domains. The independent reference for
// gac_domain and the superset sweep.
DomainMap brute_support_sets(const Instance& inst) {
  Checker checker(inst.constraint);
  const size_t n = inst.variables.size();
  std::map<VarId, std::set<Value>> seen;
  std::vector<size_t> idx(n, 0);
  bool any_empty = false;
  for (const auto& d : inst.domains) any_empty = any_empty || d.empty();
  if (!any_empty) {
    std::vector<Value> vals(n);
    while (true) {
      for (size_t i = 0; i < n; ++i) vals[i] = inst.domains[i][idx[i]];
      Tuple t;
      for (size_t i = 0; i < n; ++i) t[inst.variables[i]] = vals[i];
      if (tuple_accepted(checker, t))
        for (size_t i = 0; i < n; ++i) seen[inst.variables[i]].insert(vals[i]);
      size_t i = n;
      while (i > 0 && ++idx[i - 1] == inst.domains[i - 1].size()) idx[--i] = 0;
      if (i == 0) break;
    }
  }
  DomainMap out;
  for (size_t i = 0; i < n; ++i) {
    const auto& s = seen[inst.variables[i]];
    out[inst.variables[i]] = Domain(s.begin(), s.end());
  }
  return out;
}

std::string domain_map_str(const DomainMap& m) {
  return domain_map_to_json(m).dump();
}

// ---------------------------------------------------------------------------
// paper-examples
// ---------------------------------------------------------------------------

void micro_example(SuiteReport& rep, const std::string& id,
                   const Instance& inst, const DomainMap& expected,
                   const std::function<PropagationOutcome(const Instance&)>&
                       propagator = nullptr) {
  QuestionResult qr = gac_domain(inst);
  const DomainMap& got = *qr.domain_witness;
  if (got != expected) {
    push_case(rep, id, false,
              "gac_domain disagrees with the pinned filtering: got " +
                  domain_map_str(got) + " want " + domain_map_str(expected),
              {{"instance", instance_to_json(inst)}});
    return;
  }
  if (propagator) {
    DomainMap prop = propagator(inst).domains;
    if (prop != expected) {
      push_case(rep, id, false,
                "specialized propagator disagrees with gac_domain: got " +
                    domain_map_str(prop) + " want " + domain_map_str(expected),
                {{"instance", instance_to_json(inst)}});
      return;
    }
  }
  push_case(rep, id, true, "");
}

SuiteReport paper_examples_suite(const SuiteConfig&) {
  SuiteReport rep;
  rep.suite = "paper-examples";

  // the worked disjoint filtering
  {
    Instance inst = disjoint_worked_example();
    QuestionResult qr = gac_domain(inst);
    const DomainMap& got = *qr.domain_witness;
    DomainMap original = inst.domain_map();
    DomainMap brute = brute_support_sets(inst);
    auto removed = [&](const VarId& id, Value v) {
      const Domain& d = got.at(id);
      return !std::binary_search(d.begin(), d.end(), v);
    };
    bool listed = removed("X2", 3) && removed("Y1", 1) && removed("Y2", 1);
    if (!listed) {
      push_case(rep, "paper-examples/disjoint-prunings", false,
                "gac_domain missed a listed pruning: got " +
                    domain_map_str(got),
                {{"instance", instance_to_json(inst)}});
    } else if (got != brute) {
      push_case(rep, "paper-examples/disjoint-prunings", false,
                "gac_domain fixpoint differs from exhaustive enumeration: " +
                    domain_map_str(got) + " vs " + domain_map_str(brute),
                {{"instance", instance_to_json(inst)}});
    } else {
      push_case(rep, "paper-examples/disjoint-prunings", true, "",
                {{"filtered", domain_map_to_json(got)}});
    }

    // pairwise decomposition: run plain arc consistency over the X!=Y
    // pairs; it must remove nothing
    DomainMap doms = original;
    bool changed = true;
    while (changed) {
      changed = false;
      for (const VarId x : {VarId("X1"), VarId("X2")})
        for (const VarId y : {VarId("Y1"), VarId("Y2"), VarId("Y3")})
          for (int dir = 0; dir < 2; ++dir) {
            const VarId& a = dir == 0 ? x : y;
            const VarId& b = dir == 0 ? y : x;
            Domain kept;
            for (Value va : doms[a])
              for (Value vb : doms[b])
                if (vb != va) {
                  kept.push_back(va);
                  break;
                }
            if (kept != doms[a]) {
              doms[a] = kept;
              changed = true;
            }
          }
    }
    push_case(rep, "paper-examples/disjoint-decomposition-ac",
              doms == original,
              doms == original
                  ? ""
                  : "pairwise arc consistency pruned a value but should be "
                    "at fixpoint already: " +
                        domain_map_str(doms));
  }

  // pinned one-constraint filterings, each checked against its specialized
  // propagator as well
  {
    Instance inst;
    inst.variables = {"X1", "X2", "X3"};
    inst.domains = {{1, 2}, {1, 2}, {1, 2, 3}};
    inst.constraint.kind = Kind::AllDifferent;
    inst.constraint.scope = {"X1", "X2", "X3"};
    micro_example(rep, "paper-examples/alldifferent-hall", inst,
                  {{"X1", {1, 2}}, {"X2", {1, 2}}, {"X3", {3}}},
                  alldifferent_gac);
  }
  {
    Instance inst;
    inst.variables = {"N", "X1", "X2"};
    inst.domains = {{1}, {1}, {1, 3}};
    inst.constraint.kind = Kind::AmongConst;
    inst.constraint.value_set = {1};
    inst.constraint.scope = {"N", "X1", "X2"};
    micro_example(rep, "paper-examples/among-count", inst,
                  {{"N", {1}}, {"X1", {1}}, {"X2", {3}}}, among_const_gac);
  }
  {
    Instance inst;
    inst.variables = {"X1", "X2"};
    inst.domains = {{1, 2}, {1}};
    inst.constraint.kind = Kind::Gcc;
    inst.constraint.scope = {"X1", "X2"};
    inst.constraint.occ[1] = {1, 1};
    inst.constraint.occ[2] = {1, 1};
    micro_example(rep, "paper-examples/gcc-capacity", inst,
                  {{"X1", {2}}, {"X2", {1}}}, gcc_fixed_gac);
  }
  {
    Instance inst;
    inst.variables = {"N", "s1", "s2", "s3"};
    inst.domains = {{0}, {1}, {1, 2}, {1}};
    ConstraintSpec tpl;
    tpl.kind = Kind::Table;
    tpl.scope = {"t1", "t2"};
    for (Value x = 1; x <= 3; ++x)
      for (Value y = 1; y <= 3; ++y)
        if (x != y) tpl.tuples.push_back({x, y});
    inst.constraint.kind = Kind::Cardpath;
    inst.constraint.children.push_back(std::move(tpl));
    inst.constraint.scope = {"N", "s1", "s2", "s3"};
    micro_example(rep, "paper-examples/cardpath-chain", inst,
                  {{"N", {0}}, {"s1", {1}}, {"s2", {1}}, {"s3", {1}}},
                  [](const Instance& i) { return cardpath_dp_gac(i); });
  }
  return rep;
}

// ---------------------------------------------------------------------------
// reducers
// ---------------------------------------------------------------------------

SuiteReport reducers_suite(const SuiteConfig& cfg) {
  SuiteReport rep;
  rep.suite = "reducers";
  std::mt19937 rng(static_cast<unsigned>(cfg.seed));
  const int count = default_count(cfg, 500);
  for (int i = 0; i < count; ++i) {
    Instance inst = random_engine_instance(rng);
    size_t vi = rng() % inst.variables.size();
    const VarId x = inst.variables[vi];
    const Value v = inst.domains[vi][rng() % inst.domains[vi].size()];
    std::string bad;

    auto check = [&](const char* name, bool direct, bool via) {
      if (bad.empty() && direct != via)
        bad = std::string(name) + ": direct=" + (direct ? "yes" : "no") +
              " via=" + (via ? "yes" : "no");
    };
    QuestionResult dom = gac_domain(inst, cfg.budget);
    check("gac-support/via-wipeout", gac_support(inst, x, v, cfg.budget).answer,
          gac_support_via_wipeout(inst, x, v, cfg.budget).answer);
    check("no-gac-wipeout/via-support", no_gac_wipeout(inst, cfg.budget).answer,
          no_gac_wipeout_via_support(inst, cfg.budget).answer);
    check("gac-support/via-domain", gac_support(inst, x, v, cfg.budget).answer,
          gac_support_via_domain(inst, x, v, cfg.budget).answer);
    if (bad.empty()) {
      QuestionResult via = gac_domain_via_support(inst, cfg.budget);
      if (*dom.domain_witness != *via.domain_witness)
        bad = "gac-domain/via-support: direct=" +
              domain_map_str(*dom.domain_witness) +
              " via=" + domain_map_str(*via.domain_witness);
    }
    // candidate: the fixpoint itself on even cases, a dented copy on odd
    DomainMap cand = *dom.domain_witness;
    if (i % 2 == 1) {
      for (auto& [id, d] : cand)
        if (!d.empty()) {
          d.erase(d.begin() + static_cast<long>(rng() % d.size()));
          break;
        }
    }
    check("max-gac/via-support", max_gac(inst, cand, cfg.budget).answer,
          max_gac_via_support(inst, cand, cfg.budget).answer);
    check("is-it-gac/via-maxgac", is_it_gac(inst, cfg.budget).answer,
          is_it_gac_via_maxgac(inst, cfg.budget).answer);

    nlohmann::json extra;
    if (!bad.empty()) extra["instance"] = instance_to_json(inst);
    push_case(rep, "reducers/" + pad_index(i), bad.empty(), bad,
              std::move(extra));
  }
  return rep;
}

// ---------------------------------------------------------------------------
// propagators
// ---------------------------------------------------------------------------

SuiteReport propagators_suite(const SuiteConfig& cfg) {
  SuiteReport rep;
  rep.suite = "propagators";
  const int per = default_count(cfg, 300);
  struct Prop {
    const char* name;
    Instance (*gen)(std::mt19937&);
    PropagationOutcome (*run)(const Instance&);
  };
  const Prop props[] = {
      {"alldifferent", random_alldifferent_instance,
       [](const Instance& i) { return alldifferent_gac(i); }},
      {"among", random_among_instance,
       [](const Instance& i) { return among_const_gac(i); }},
      {"gcc", random_gcc_instance,
       [](const Instance& i) { return gcc_fixed_gac(i); }},
      {"cardpath", random_cardpath_instance,
       [](const Instance& i) { return cardpath_dp_gac(i); }},
  };
  for (const Prop& p : props) {
    std::mt19937 rng(static_cast<unsigned>(cfg.seed) ^
                     std::mt19937(std::hash<std::string>{}(p.name))());
    for (int i = 0; i < per; ++i) {
      Instance inst = p.gen(rng);
      PropagationOutcome out = p.run(inst);
      DomainMap ref = *gac_domain(inst, cfg.budget).domain_witness;
      bool ok = out.domains == ref;
      bool wipe_ref = false;
      for (const auto& [id, d] : ref) wipe_ref = wipe_ref || d.empty();
      ok = ok && out.wipeout == wipe_ref;
      nlohmann::json extra;
      std::string detail;
      if (!ok) {
        detail = std::string(p.name) + " propagator vs gac_domain: got " +
                 domain_map_str(out.domains) + " want " + domain_map_str(ref);
        extra["instance"] = instance_to_json(inst);
      }
      push_case(rep,
                std::string("propagators/") + p.name + "/" + pad_index(i), ok,
                detail, std::move(extra));
    }
  }
  return rep;
}

// ---------------------------------------------------------------------------
// gadgets
// ---------------------------------------------------------------------------

std::string source_text(const SourceProblem& src) {
  switch (src.tag) {
    case SourceProblem::Tag::Sat3:
    case SourceProblem::Tag::OneInThree:
      return write_cnf3(src.cnf);
    case SourceProblem::Tag::ThreeCol:
      return write_graph(src.graph);
    case SourceProblem::Tag::ThreeColPair:
      return write_graph(src.graph) + write_graph(src.graph2);
    case SourceProblem::Tag::Max2Sat:
      return write_max2sat(src.max2sat);
  }
  return "";
}

void gadget_case(SuiteReport& rep, const std::string& id,
                 const std::string& family, const SourceProblem& src,
                 const SuiteConfig& cfg) {
  GadgetOutput g;
  try {
    g = build_gadget(family, src);
  } catch (const Error& e) {
    push_case(rep, id, false, std::string("builder error: ") + e.what(),
              {{"source", source_text(src)}});
    return;
  }
  VerificationReport vr = verify_gadget(g, src, cfg.budget);
  nlohmann::json extra{{"family", family},
                       {"oracle", vr.oracle_answer},
                       {"tuplesExplored", vr.tuples_explored}};
  if (vr.oversized) {
    // transparently reported: the instance outgrew the search budget, so
    // there is no engine answer to compare
    extra["oversized"] = true;
    push_case(rep, id, true, "", std::move(extra));
    return;
  }
  extra["engine"] = *vr.engine_answer;
  bool ok = vr.agree == true;
  std::string detail;
  if (!ok) {
    detail = "engine=" + std::string(*vr.engine_answer ? "yes" : "no") +
             " oracle=" + std::string(vr.oracle_answer ? "yes" : "no");
  } else if (vr.certificate_ok == false) {
    ok = false;
    detail = "decoded certificate failed source revalidation";
  }
  if (vr.certificate_ok.has_value()) extra["certificateOk"] = *vr.certificate_ok;
  if (!ok) extra["source"] = source_text(src);
  push_case(rep, id, ok, detail, std::move(extra));
}

SuiteReport gadgets_suite(const SuiteConfig& cfg) {
  SuiteReport rep;
  rep.suite = "gadgets";
  const int per = default_count(cfg, 200);

  const std::vector<std::string> cnf_families = {
      "support", "nvalue", "among-var", "common",
      "disjoint", "gcc-repeat", "atmost1"};
  for (const auto& fam : cnf_families) {
    gadget_case(rep, "gadgets/" + fam + "/F1", fam, source_sat3(fixture_f1()),
                cfg);
    gadget_case(rep, "gadgets/" + fam + "/P1", fam, source_sat3(fixture_p1()),
                cfg);
    gadget_case(rep, "gadgets/" + fam + "/F2", fam, source_sat3(fixture_f2()),
                cfg);
  }
  gadget_case(rep, "gadgets/card/F1", "card", source_sat3(fixture_f1()), cfg);
  gadget_case(rep, "gadgets/card/P1", "card", source_sat3(fixture_p1()), cfg);
  {
    // F2 violates the occurrence precondition; the builder must refuse it
    bool refused = false;
    try {
      build_gadget("card", source_sat3(fixture_f2()));
    } catch (const UnsupportedInstanceError&) {
      refused = true;
    }
    push_case(rep, "gadgets/card/F2-precondition", refused,
              refused ? "" : "builder accepted an out-of-bounds formula");
  }
  gadget_case(rep, "gadgets/scalarproduct/P1", "scalarproduct",
              source_one_in_three(fixture_p1()), cfg);
  gadget_case(rep, "gadgets/scalarproduct/P-dup", "scalarproduct",
              source_one_in_three(fixture_p_dup()), cfg);
  gadget_case(rep, "gadgets/scalarproduct/P-unsat", "scalarproduct",
              source_one_in_three(fixture_p_unsat()), cfg);
  gadget_case(rep, "gadgets/isitgac/K3", "isitgac",
              source_three_col(fixture_k3()), cfg);
  gadget_case(rep, "gadgets/isitgac/K4", "isitgac",
              source_three_col(fixture_k4()), cfg);
  gadget_case(rep, "gadgets/cardpath-3col/K3", "cardpath-3col",
              source_three_col(fixture_k3()), cfg);
  gadget_case(rep, "gadgets/cardpath-3col/K4", "cardpath-3col",
              source_three_col(fixture_k4()), cfg);
  gadget_case(rep, "gadgets/maxgac/K3K4", "maxgac",
              source_three_col_pair(fixture_k3_padded(), fixture_k4()), cfg);
  gadget_case(rep, "gadgets/maxgac/K4K3", "maxgac",
              source_three_col_pair(fixture_k4(), fixture_k3_padded()), cfg);
  gadget_case(rep, "gadgets/maxgac/K3K3", "maxgac",
              source_three_col_pair(fixture_k3_padded(), fixture_k3_padded()),
              cfg);
  gadget_case(rep, "gadgets/cardpath-max2sat/W1", "cardpath-max2sat",
              source_max2sat(fixture_w1()), cfg);
  gadget_case(rep, "gadgets/cardpath-max2sat/W2k0", "cardpath-max2sat",
              source_max2sat(fixture_w2(0)), cfg);
  gadget_case(rep, "gadgets/cardpath-max2sat/W2k1", "cardpath-max2sat",
              source_max2sat(fixture_w2(1)), cfg);
  gadget_case(rep, "gadgets/cardpath-max2sat/W2k2", "cardpath-max2sat",
              source_max2sat(fixture_w2(2)), cfg);

  for (const auto& fam : gadget_family_names()) {
    std::mt19937 rng(static_cast<unsigned>(cfg.seed) ^
                     std::mt19937(std::hash<std::string>{}(fam))());
    for (int i = 0; i < per; ++i) {
      SourceProblem src = random_source(fam, rng);
      gadget_case(rep, "gadgets/" + fam + "/" + pad_index(i), fam, src, cfg);
    }
  }
  return rep;
}

// ---------------------------------------------------------------------------
// smoke
// ---------------------------------------------------------------------------

Instance big_alldifferent(int n) {
  Instance inst;
  Domain full;
  for (Value v = 1; v <= n; ++v) full.push_back(v);
  for (int i = 1; i <= n; ++i) {
    inst.variables.push_back("x" + std::to_string(i));
    inst.domains.push_back(full);
    inst.constraint.scope.push_back("x" + std::to_string(i));
  }
  inst.constraint.kind = Kind::AllDifferent;
  return inst;
}

SuiteReport smoke_suite(const SuiteConfig& cfg) {
  SuiteReport rep;
  rep.suite = "smoke";
  Instance inst = big_alldifferent(200);
  {
    auto t0 = std::chrono::steady_clock::now();
    PropagationOutcome out = alldifferent_gac(inst);
    auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                  std::chrono::steady_clock::now() - t0)
                  .count();
    bool ok = out.removed.empty() && !out.wipeout;
    push_case(rep, "smoke/alldifferent-200", ok,
              ok ? "" : "specialized filter removed values from a tight "
                        "permutation instance",
              {{"elapsedMs", ms}});
  }
  {
    SearchBudget budget = cfg.budget;
    bool exhausted = false;
    long long explored = 0;
    try {
      gac_domain(inst, budget);
    } catch (const BudgetExhaustedError& e) {
      exhausted = true;
      explored = e.explored();
    }
    push_case(rep, "smoke/generic-budget", exhausted,
              exhausted ? ""
                        : "generic search finished a 200x200 instance inside "
                          "the tuple budget",
              {{"explored", explored}, {"budget", budget.max_tuples_explored}});
  }
  return rep;
}

}  // namespace

// ---------------------------------------------------------------------------
// public entry points
// ---------------------------------------------------------------------------

std::vector<std::string> suite_names() {
  return {"reducers", "propagators", "gadgets", "paper-examples", "smoke"};
}

SuiteReport run_suite(const std::string& name, const SuiteConfig& cfg) {
  if (name == "reducers") return reducers_suite(cfg);
  if (name == "propagators") return propagators_suite(cfg);
  if (name == "gadgets") return gadgets_suite(cfg);
  if (name == "paper-examples") return paper_examples_suite(cfg);
  if (name == "smoke") return smoke_suite(cfg);
  throw InvariantError("unknown suite: " + name);
}

SuiteReport maxgac_sweep_check(const SuiteConfig& cfg) {
  SuiteReport rep;
  rep.suite = "maxgac-sweep";
  std::mt19937 rng(static_cast<unsigned>(cfg.seed));
  const int count = default_count(cfg, 500);
  for (int i = 0; i < count; ++i) {
    Instance inst = random_engine_instance(rng);
    DomainMap d0 = inst.domain_map();
    DomainMap fix = *gac_domain(inst, cfg.budget).domain_witness;
    std::vector<std::pair<VarId, Value>> removed;
    for (const auto& [id, dom] : d0)
      for (Value v : dom)
        if (!std::binary_search(fix[id].begin(), fix[id].end(), v))
          removed.push_back({id, v});
    if (removed.size() > 6) {
      push_case(rep, "maxgac-sweep/" + pad_index(i), true,
                "not applicable: " + std::to_string(removed.size()) +
                    " values removed");
      continue;
    }
    // independent reference: single-pass support sets are already closed
    DomainMap lit_max = brute_support_sets(inst);
    std::string bad;
    const size_t n_removed = removed.size();
    for (unsigned long long mask = 0; mask < (1ULL << n_removed); ++mask) {
      DomainMap cand = fix;
      for (size_t b = 0; b < n_removed; ++b)
        if (mask & (1ULL << b)) {
          Domain& dom = cand[removed[b].first];
          dom.insert(
              std::upper_bound(dom.begin(), dom.end(), removed[b].second),
              removed[b].second);
        }
      bool want = cand == lit_max;
      bool got = max_gac(inst, cand, cfg.budget).answer;
      if (want != got) {
        bad = "literal sweep=" + std::string(want ? "yes" : "no") +
              " max_gac=" + std::string(got ? "yes" : "no") +
              " candidate=" + domain_map_str(cand);
        break;
      }
    }
    nlohmann::json extra;
    if (!bad.empty()) extra["instance"] = instance_to_json(inst);
    push_case(rep, "maxgac-sweep/" + pad_index(i), bad.empty(), bad,
              std::move(extra));
  }
  return rep;
}

SuiteReport structural_checks() {
  SuiteReport rep;
  rep.suite = "structural";
  auto expect = [&](const std::string& id, long long got, long long want) {
    push_case(rep, "structural/" + id, got == want,
              got == want ? ""
                          : "got " + std::to_string(got) + " want " +
                                std::to_string(want));
  };
  {
    Cnf3 f = fixture_f1();  // n=3, m=2
    GadgetOutput g = build_nvalue_gadget(f);
    expect("nvalue-f1-vars", static_cast<long long>(g.instance.variables.size()),
           3 + 2 + 1);
    GadgetOutput h = build_nvalue_gadget(fixture_card_unsat());  // n=1, m=2
    expect("nvalue-card-unsat-vars",
           static_cast<long long>(h.instance.variables.size()), 1 + 2 + 1);
  }
  {
    Cnf3 f = fixture_p1();  // n=3, m=1
    GadgetOutput g = build_scalarproduct_gadget(f, 1);
    expect("scalarproduct-p1-grid",
           static_cast<long long>(g.instance.variables.size()),
           (4 * 1 + 1) * (3 * 1 + 3));
    expect("scalarproduct-p1-rows", g.instance.constraint.rows, 4 * 1 + 1);
    GadgetOutput h = build_scalarproduct_gadget(fixture_p_dup(), 1);  // m=2
    long long hm = static_cast<long long>(h.instance.constraint.rows - 1) / 4;
    expect("scalarproduct-p-dup-grid",
           static_cast<long long>(h.instance.variables.size()),
           (4 * hm + 1) * (3 * hm + 3));
  }
  {
    Cnf3 f = fixture_f1();  // n=3, m=2
    GadgetOutput g = build_gcc_repeat_gadget(f);
    expect("gcc-repeat-f1-scope",
           static_cast<long long>(g.instance.constraint.scope.size()),
           2 + 3 * 2);
    GadgetOutput h = build_gcc_repeat_gadget(fixture_card_unsat());
    expect("gcc-repeat-card-unsat-scope",
           static_cast<long long>(h.instance.constraint.scope.size()),
           2 + 1 * 2);
  }
  {
    Cnf3 f = fixture_f1();  // m=2
    GadgetOutput g = build_card_gadget(f);
    expect("card-f1-children",
           static_cast<long long>(g.instance.constraint.children.size()),
           5 * 2);
    expect("card-f1-vars",
           static_cast<long long>(g.instance.variables.size()) - 1, 3 * 2 + 3);
    GadgetOutput h = build_card_gadget(fixture_card_unsat());  // n=1, m=2
    expect("card-card-unsat-children",
           static_cast<long long>(h.instance.constraint.children.size()),
           5 * 2);
  }
  return rep;
}

SuiteReport engine_law_checks(const SuiteConfig& cfg) {
  SuiteReport rep;
  rep.suite = "engine-laws";
  std::mt19937 rng(static_cast<unsigned>(cfg.seed));
  const int count = default_count(cfg, 500);
  for (int i = 0; i < count; ++i) {
    Instance inst = random_engine_instance(rng);
    DomainMap d0 = inst.domain_map();
    std::string bad;
    DomainMap d1 = *gac_domain(inst, cfg.budget).domain_witness;
    for (const auto& [id, dom] : d1) {
      const Domain& orig = d0[id];
      if (!std::includes(orig.begin(), orig.end(), dom.begin(), dom.end())) {
        bad = "contractance: filtered " + id + " is not a subset";
        break;
      }
    }
    Instance filtered = with_domains(inst, d1);
    if (bad.empty()) {
      DomainMap d2 = *gac_domain(filtered, cfg.budget).domain_witness;
      if (d2 != d1)
        bad = "idempotence: second pass changed " + domain_map_str(d1) +
              " to " + domain_map_str(d2);
    }
    if (bad.empty()) {
      // single pass suffices: every surviving value already has support
      // inside the filtered domains
      for (size_t vi = 0; vi < filtered.variables.size() && bad.empty(); ++vi)
        for (Value v : filtered.domains[vi]) {
          QuestionResult qr =
              gac_support(filtered, filtered.variables[vi], v, cfg.budget);
          if (!qr.answer) {
            bad = "single-pass: surviving value " + filtered.variables[vi] +
                  "=" + std::to_string(v) + " lost its support";
            break;
          }
          const Tuple& w = *qr.witness;
          if (w.at(filtered.variables[vi]) != v) {
            bad = "witness soundness: witness misses the probed assignment";
            break;
          }
          Checker checker(inst.constraint);
          if (!tuple_accepted(checker, w)) {
            bad = "witness soundness: witness rejected by the checker";
            break;
          }
          for (const auto& [wid, wv] : w) {
            const Domain& dom = d0[wid];
            if (!std::binary_search(dom.begin(), dom.end(), wv)) {
              bad = "witness soundness: witness leaves the domain box";
              break;
            }
          }
        }
    }
    nlohmann::json extra;
    if (!bad.empty()) extra["instance"] = instance_to_json(inst);
    push_case(rep, "engine-laws/" + pad_index(i), bad.empty(), bad,
              std::move(extra));
  }
  return rep;
}

}  // namespace gaclab
