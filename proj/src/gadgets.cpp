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

#include "gaclab/gadgets.hpp"

#include <algorithm>
#include <array>
#include <queue>
#include <set>
#include <span>
#include <utility>

#include "gaclab/oracles.hpp"

namespace gaclab {

namespace {

std::string num(long long v) { return std::to_string(v); }

void add_var(Instance& inst, VarId id, Domain dom) {
  inst.variables.push_back(std::move(id));
  inst.domains.push_back(std::move(dom));
}

// Distinct literal codes of one clause, ascending.
Domain clause_codes(const std::array<int, 3>& cl) {
  std::set<Value> s(cl.begin(), cl.end());
  return Domain(s.begin(), s.end());
}

Value tuple_value(const Tuple& t, const VarId& id, Value fallback) {
  auto it = t.find(id);
  return it == t.end() ? fallback : it->second;
}

void require_clauses(const Cnf3& f, const char* family) {
  if (f.num_vars < 1 || f.clauses.empty())
    throw InvariantError(std::string(family) +
                         " gadget needs at least one variable and one clause");
}

constexpr const char* kSatMeaning = "yes iff the formula is satisfiable";

}  // namespace

// ---------------------------------------------------------------------------
// Question kinds
// ---------------------------------------------------------------------------

const char* question_kind_name(QuestionKind k) {
  switch (k) {
    case QuestionKind::GacSupport: return "gac-support";
    case QuestionKind::IsItGac: return "is-it-gac";
    case QuestionKind::NoGacWipeOut: return "no-gac-wipeout";
    case QuestionKind::GacDomain: return "gac-domain";
    case QuestionKind::MaxGac: return "max-gac";
  }
  return "?";
}

std::optional<QuestionKind> question_kind_from_name(const std::string& name) {
  for (QuestionKind k : {QuestionKind::GacSupport, QuestionKind::IsItGac,
                         QuestionKind::NoGacWipeOut, QuestionKind::GacDomain,
                         QuestionKind::MaxGac})
    if (name == question_kind_name(k)) return k;
  return std::nullopt;
}

QuestionResult answer_question(const Instance& inst, const Question& q,
                               const SearchBudget& budget) {
  switch (q.kind) {
    case QuestionKind::GacSupport:
      return gac_support(inst, q.var, q.value, budget);
    case QuestionKind::IsItGac:
      return is_it_gac(inst, budget);
    case QuestionKind::NoGacWipeOut:
      return no_gac_wipeout(inst, budget);
    case QuestionKind::GacDomain:
      return gac_domain(inst, budget);
    case QuestionKind::MaxGac:
      return max_gac(inst, q.candidate, budget);
  }
  throw InvariantError("unknown question kind");
}

// ---------------------------------------------------------------------------
// Sources
// ---------------------------------------------------------------------------

SourceProblem source_sat3(Cnf3 f) {
  SourceProblem s;
  s.tag = SourceProblem::Tag::Sat3;
  s.cnf = std::move(f);
  return s;
}

SourceProblem source_one_in_three(Cnf3 f) {
  SourceProblem s;
  s.tag = SourceProblem::Tag::OneInThree;
  s.cnf = std::move(f);
  return s;
}

SourceProblem source_three_col(Graph g) {
  SourceProblem s;
  s.tag = SourceProblem::Tag::ThreeCol;
  s.graph = std::move(g);
  return s;
}

SourceProblem source_three_col_pair(Graph yes_graph, Graph no_graph) {
  SourceProblem s;
  s.tag = SourceProblem::Tag::ThreeColPair;
  s.graph = std::move(yes_graph);
  s.graph2 = std::move(no_graph);
  return s;
}

SourceProblem source_max2sat(Max2SatInput w) {
  SourceProblem s;
  s.tag = SourceProblem::Tag::Max2Sat;
  s.max2sat = std::move(w);
  return s;
}

bool source_oracle_answer(const SourceProblem& src) {
  switch (src.tag) {
    case SourceProblem::Tag::Sat3:
      return sat3_solve(src.cnf).has_value();
    case SourceProblem::Tag::OneInThree:
      return one_in_three_solve(src.cnf).has_value();
    case SourceProblem::Tag::ThreeCol:
      return three_color(src.graph).has_value();
    case SourceProblem::Tag::ThreeColPair:
      return three_color(src.graph).has_value() &&
             !three_color(src.graph2).has_value();
    case SourceProblem::Tag::Max2Sat:
      return max2sat_solve(src.max2sat).has_value();
  }
  throw InvariantError("unknown source tag");
}

bool source_certificate_ok(const SourceProblem& src,
                           const SourceCertificate& cert) {
  switch (src.tag) {
    case SourceProblem::Tag::Sat3:
      return cnf3_satisfied(src.cnf, cert.model);
    case SourceProblem::Tag::OneInThree:
      return one_in_three_satisfied(src.cnf, cert.model);
    case SourceProblem::Tag::ThreeCol:
      return coloring_ok(src.graph, cert.coloring);
    case SourceProblem::Tag::ThreeColPair:
      return coloring_ok(src.graph, cert.coloring);
    case SourceProblem::Tag::Max2Sat:
      return static_cast<int>(cert.model.size()) == src.max2sat.num_vars &&
             max2sat_violations(src.max2sat, cert.model) <=
                 src.max2sat.max_violations;
  }
  throw InvariantError("unknown source tag");
}

// ---------------------------------------------------------------------------
// Formula families
// ---------------------------------------------------------------------------

GadgetOutput build_support_gadget(const Cnf3& f) {
  validate_cnf3(f);
  GadgetOutput out;
  out.family = "support";
  Instance inst;
  ConstraintSpec spec;
  spec.kind = Kind::ImpliesCnf;
  add_var(inst, "X", {0, 1});
  spec.scope.push_back("X");
  for (int i = 1; i <= f.num_vars; ++i) {
    VarId id = "x" + num(i);
    add_var(inst, id, {0, 1});
    spec.scope.push_back(id);
  }
  for (const auto& cl : f.clauses) spec.cnf.push_back({cl[0], cl[1], cl[2]});
  inst.constraint = std::move(spec);
  validate_instance(inst);
  out.instance = std::move(inst);
  out.question.kind = QuestionKind::GacSupport;
  out.question.var = "X";
  out.question.value = 1;
  out.source_answer_meaning = kSatMeaning;
  const int n = f.num_vars;
  out.decode = [n](const Tuple& t) {
    SourceCertificate c;
    c.model.assign(n, false);
    for (int i = 1; i <= n; ++i)
      if (tuple_value(t, "x" + num(i), 0) == 1) c.model[i - 1] = true;
    return c;
  };
  return out;
}

GadgetOutput build_nvalue_gadget(const Cnf3& f) {
  validate_cnf3(f);
  require_clauses(f, "nvalue");
  const int n = f.num_vars, m = static_cast<int>(f.clauses.size());
  GadgetOutput out;
  out.family = "nvalue";
  Instance inst;
  ConstraintSpec spec;
  spec.kind = Kind::NValue;
  for (int i = 1; i <= n; ++i) {
    VarId id = "X" + num(i);
    add_var(inst, id, {-i, i});
    spec.scope.push_back(id);
  }
  for (int j = 1; j <= m; ++j) {
    VarId id = "X" + num(n + j);
    add_var(inst, id, clause_codes(f.clauses[j - 1]));
    spec.scope.push_back(id);
  }
  add_var(inst, "N", {n});
  spec.scope.push_back("N");
  inst.constraint = std::move(spec);
  validate_instance(inst);
  out.instance = std::move(inst);
  out.question.kind = QuestionKind::NoGacWipeOut;
  out.source_answer_meaning = kSatMeaning;
  out.decode = [n](const Tuple& t) {
    SourceCertificate c;
    c.model.assign(n, false);
    for (int i = 1; i <= n; ++i)
      if (tuple_value(t, "X" + num(i), -i) == i) c.model[i - 1] = true;
    return c;
  };
  return out;
}

GadgetOutput build_among_var_gadget(const Cnf3& f) {
  validate_cnf3(f);
  require_clauses(f, "among-var");
  const int n = f.num_vars, m = static_cast<int>(f.clauses.size());
  GadgetOutput out;
  out.family = "among-var";
  Instance inst;
  ConstraintSpec spec;
  spec.kind = Kind::AmongVar;
  spec.split = m;
  add_var(inst, "N", {m});
  spec.scope.push_back("N");
  for (int j = 1; j <= m; ++j) {
    VarId id = "C" + num(j);
    add_var(inst, id, clause_codes(f.clauses[j - 1]));
    spec.scope.push_back(id);
  }
  for (int i = 1; i <= n; ++i) {
    VarId id = "D" + num(i);
    add_var(inst, id, {-i, i});
    spec.scope.push_back(id);
  }
  inst.constraint = std::move(spec);
  validate_instance(inst);
  out.instance = std::move(inst);
  out.question.kind = QuestionKind::NoGacWipeOut;
  out.source_answer_meaning = kSatMeaning;
  out.decode = [n](const Tuple& t) {
    SourceCertificate c;
    c.model.assign(n, false);
    for (int i = 1; i <= n; ++i)
      if (tuple_value(t, "D" + num(i), -i) == i) c.model[i - 1] = true;
    return c;
  };
  return out;
}

GadgetOutput build_common_gadget(const Cnf3& f) {
  validate_cnf3(f);
  require_clauses(f, "common");
  const int n = f.num_vars, m = static_cast<int>(f.clauses.size());
  GadgetOutput out;
  out.family = "common";
  Instance inst;
  ConstraintSpec spec;
  spec.kind = Kind::Common;
  spec.split = m;
  add_var(inst, "N", {m});
  spec.scope.push_back("N");
  Domain all_counts;
  for (int i = 0; i <= n; ++i) all_counts.push_back(i);
  add_var(inst, "M", all_counts);
  spec.scope.push_back("M");
  for (int j = 1; j <= m; ++j) {
    VarId id = "C" + num(j);
    add_var(inst, id, clause_codes(f.clauses[j - 1]));
    spec.scope.push_back(id);
  }
  for (int i = 1; i <= n; ++i) {
    VarId id = "D" + num(i);
    add_var(inst, id, {-i, i});
    spec.scope.push_back(id);
  }
  inst.constraint = std::move(spec);
  validate_instance(inst);
  out.instance = std::move(inst);
  out.question.kind = QuestionKind::NoGacWipeOut;
  out.source_answer_meaning = kSatMeaning;
  out.decode = [n](const Tuple& t) {
    SourceCertificate c;
    c.model.assign(n, false);
    for (int i = 1; i <= n; ++i)
      if (tuple_value(t, "D" + num(i), -i) == i) c.model[i - 1] = true;
    return c;
  };
  return out;
}

GadgetOutput build_disjoint_gadget(const Cnf3& f) {
  validate_cnf3(f);
  require_clauses(f, "disjoint");
  const int n = f.num_vars, m = static_cast<int>(f.clauses.size());
  GadgetOutput out;
  out.family = "disjoint";
  Instance inst;
  ConstraintSpec spec;
  spec.kind = Kind::Disjoint;
  spec.split = n;
  for (int i = 1; i <= n; ++i) {
    VarId id = "X" + num(i);
    add_var(inst, id, {-i, i});
    spec.scope.push_back(id);
  }
  for (int j = 1; j <= m; ++j) {
    VarId id = "Y" + num(j);
    add_var(inst, id, clause_codes(f.clauses[j - 1]));
    spec.scope.push_back(id);
  }
  inst.constraint = std::move(spec);
  validate_instance(inst);
  out.instance = std::move(inst);
  out.question.kind = QuestionKind::NoGacWipeOut;
  out.source_answer_meaning = kSatMeaning;
  // X variables hold the falsified literal, so x_i is true when X_i = -i.
  out.decode = [n](const Tuple& t) {
    SourceCertificate c;
    c.model.assign(n, false);
    for (int i = 1; i <= n; ++i)
      if (tuple_value(t, "X" + num(i), i) == -i) c.model[i - 1] = true;
    return c;
  };
  return out;
}

GadgetOutput build_gcc_repeat_gadget(const Cnf3& f) {
  validate_cnf3(f);
  require_clauses(f, "gcc-repeat");
  const int n = f.num_vars, m = static_cast<int>(f.clauses.size());
  GadgetOutput out;
  out.family = "gcc-repeat";
  Instance inst;
  ConstraintSpec spec;
  spec.kind = Kind::Gcc;
  for (int j = 1; j <= m; ++j) {
    VarId id = "Yc" + num(j);
    add_var(inst, id, clause_codes(f.clauses[j - 1]));
    spec.scope.push_back(id);
  }
  for (int i = 1; i <= n; ++i) add_var(inst, "Yl" + num(i), {-i, i});
  // m copies of each literal variable fill the capacity of whichever code
  // it takes, locking clause variables out of falsified literals
  for (int i = 1; i <= n; ++i)
    for (int r = 0; r < m; ++r) spec.scope.push_back("Yl" + num(i));
  for (int i = 1; i <= n; ++i) {
    spec.occ[i] = {0, m};
    spec.occ[-i] = {0, m};
  }
  inst.constraint = std::move(spec);
  validate_instance(inst);
  out.instance = std::move(inst);
  out.question.kind = QuestionKind::NoGacWipeOut;
  out.source_answer_meaning = kSatMeaning;
  out.decode = [n](const Tuple& t) {
    SourceCertificate c;
    c.model.assign(n, false);
    for (int i = 1; i <= n; ++i)
      if (tuple_value(t, "Yl" + num(i), i) == -i) c.model[i - 1] = true;
    return c;
  };
  return out;
}

// ---------------------------------------------------------------------------
// Card
// ---------------------------------------------------------------------------

GadgetOutput build_card_gadget(const Cnf3& f) {
  validate_cnf3(f);
  require_clauses(f, "card");
  if (max_clause_occurrences(f) > 3)
    throw UnsupportedInstanceError(
        "card gadget needs every variable in at most three clauses");
  const int n = f.num_vars, m = static_cast<int>(f.clauses.size());

  // One shared binary relation: a pattern word against either a 0/1 value
  // (its positional bit) or another pattern word (same low three bits).
  std::vector<std::vector<Value>> rows;
  for (Value a = 8; a < 32; ++a) {
    Value bit = a < 16 ? (a % 8) / 4 : a < 24 ? (a % 4) / 2 : a % 2;
    rows.push_back({a, bit});
  }
  for (Value a = 8; a < 32; ++a)
    for (Value b = 8; b < 32; ++b)
      if (a % 8 == b % 8) rows.push_back({a, b});

  GadgetOutput out;
  out.family = "card";
  Instance inst;
  add_var(inst, "N", {5 * m});
  for (int i = 1; i <= n; ++i) add_var(inst, "x" + num(i), {0, 1});

  ConstraintSpec spec;
  spec.kind = Kind::CardMeta;
  spec.scope.push_back("N");
  std::set<VarId> seen;
  auto scope_add = [&](const VarId& id) {
    if (seen.insert(id).second) spec.scope.push_back(id);
  };
  auto child = [&rows](VarId a, VarId b) {
    ConstraintSpec c;
    c.kind = Kind::Table;
    c.scope = {std::move(a), std::move(b)};
    c.tuples = rows;
    return c;
  };
  for (int j = 1; j <= m; ++j) {
    const auto& cl = f.clauses[j - 1];
    // word domains exclude exactly the falsifying pattern of the clause
    Value enc = 4 * (cl[0] < 0) + 2 * (cl[1] < 0) + (cl[2] < 0);
    Domain u, v, w;
    for (Value p = 0; p < 8; ++p) {
      if (p == enc) continue;
      u.push_back(8 + p);
      v.push_back(16 + p);
      w.push_back(24 + p);
    }
    VarId uj = "U" + num(j), vj = "V" + num(j), wj = "W" + num(j);
    add_var(inst, uj, u);
    add_var(inst, vj, v);
    add_var(inst, wj, w);
    VarId xa = "x" + num(std::abs(cl[0]));
    VarId xb = "x" + num(std::abs(cl[1]));
    VarId xc = "x" + num(std::abs(cl[2]));
    spec.children.push_back(child(uj, xa));
    spec.children.push_back(child(vj, xb));
    spec.children.push_back(child(wj, xc));
    spec.children.push_back(child(uj, vj));
    spec.children.push_back(child(vj, wj));
    scope_add(uj);
    scope_add(xa);
    scope_add(vj);
    scope_add(xb);
    scope_add(wj);
    scope_add(xc);
  }
  inst.constraint = std::move(spec);
  validate_instance(inst);
  out.instance = std::move(inst);
  out.question.kind = QuestionKind::NoGacWipeOut;
  out.source_answer_meaning = kSatMeaning;
  out.decode = [n](const Tuple& t) {
    SourceCertificate c;
    c.model.assign(n, false);
    for (int i = 1; i <= n; ++i)
      if (tuple_value(t, "x" + num(i), 0) == 1) c.model[i - 1] = true;
    return c;
  };
  return out;
}

// ---------------------------------------------------------------------------
// ScalarProduct
// ---------------------------------------------------------------------------

GadgetOutput build_scalarproduct_gadget(const Cnf3& f, long long target) {
  validate_cnf3(f);
  require_clauses(f, "scalarproduct");
  if (!is_positive(f))
    throw InvariantError("scalarproduct gadget needs a positive formula");
  if (target < 1) throw InvariantError("scalarproduct target must be >= 1");
  const int n = f.num_vars, m = static_cast<int>(f.clauses.size());
  const int extra = static_cast<int>(target - 1);
  const int rows = 4 * m + 1;
  const int base_cols = 3 * m + n;
  const int cols = base_cols + extra;

  // row-major singleton grids; only row 1 is free on the base columns
  std::vector<std::vector<Value>> fixed(rows, std::vector<Value>(cols, 0));
  std::vector<std::vector<bool>> free_cell(rows, std::vector<bool>(cols, false));
  for (int c = 0; c < base_cols; ++c) free_cell[0][c] = true;
  for (int r = 0; r < rows; ++r)
    for (int c = base_cols; c < cols; ++c) fixed[r][c] = 1;
  for (int j = 1; j <= m; ++j) {
    int cr = j;  // clause row index (0-based)
    for (int k = 0; k < 3; ++k) fixed[cr][3 * (j - 1) + k] = 1;
    for (int k = 0; k < 3; ++k) {
      int orow = m + 3 * (j - 1) + k + 1;
      int i = f.clauses[j - 1][k];
      fixed[orow][3 * (j - 1) + k] = 1;
      fixed[orow][3 * m + (i - 1)] = 1;
    }
  }

  GadgetOutput out;
  out.family = "scalarproduct";
  Instance inst;
  ConstraintSpec spec;
  spec.kind = Kind::ScalarProduct;
  spec.rows = rows;
  spec.target = target;
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c) {
      VarId id = "r" + num(r + 1) + "c" + num(c + 1);
      if (free_cell[r][c])
        add_var(inst, id, {0, 1});
      else
        add_var(inst, id, {fixed[r][c]});
      spec.scope.push_back(id);
    }
  inst.constraint = std::move(spec);
  validate_instance(inst);
  out.instance = std::move(inst);
  out.question.kind = QuestionKind::NoGacWipeOut;
  out.source_answer_meaning =
      "yes iff some assignment makes exactly one literal of every clause true";
  // negation columns of the model row carry the complement of each variable
  out.decode = [n, m](const Tuple& t) {
    SourceCertificate c;
    c.model.assign(n, false);
    for (int i = 1; i <= n; ++i)
      if (tuple_value(t, "r1c" + num(3 * m + i), 1) == 0) c.model[i - 1] = true;
    return c;
  };
  return out;
}

// ---------------------------------------------------------------------------
// AtMost1
// ---------------------------------------------------------------------------

// Pair blocking never admits a spurious solution. It can reject a
// satisfiable formula when some literal must satisfy two clauses while its
// complement occurs elsewhere; the bundled generators stay inside the
// reliable regime (every variable all-positive, all-negative, or with a
// single occurrence per sign).
GadgetOutput build_atmost1_gadget(const Cnf3& f, int cardinality) {
  validate_cnf3(f);
  require_clauses(f, "atmost1");
  if (cardinality < 2) throw InvariantError("atmost1 cardinality must be >= 2");
  const Cnf3& g = f;
  const int m = static_cast<int>(g.clauses.size());

  // elements: one marker per clause plus its distinct literal occurrences
  auto lit_elem = [](int lit, int j) {
    return (lit > 0 ? "p" : "n") + num(std::abs(lit)) + "c" + num(j);
  };
  std::vector<std::string> universe;
  std::vector<std::vector<int>> clause_lits(m);  // distinct, slot order
  for (int j = 1; j <= m; ++j) {
    universe.push_back("m" + num(j));
    for (int lit : g.clauses[j - 1]) {
      auto& lits = clause_lits[j - 1];
      if (std::find(lits.begin(), lits.end(), lit) == lits.end()) {
        lits.push_back(lit);
        universe.push_back(lit_elem(lit, j));
      }
    }
  }

  struct SetDef {
    std::vector<std::string> required;
    std::vector<std::string> optional;
  };
  std::vector<SetDef> sets;
  for (int j = 1; j <= m; ++j) {
    SetDef s;
    s.required.push_back("m" + num(j));
    for (int lit : clause_lits[j - 1]) s.optional.push_back(lit_elem(lit, j));
    sets.push_back(std::move(s));
  }
  // blocking pair per positive occurrence against each complementary one
  for (int sj = 1; sj <= m; ++sj)
    for (int lit : clause_lits[sj - 1]) {
      if (lit <= 0) continue;
      for (int tj = 1; tj <= m; ++tj) {
        if (tj == sj) continue;
        const auto& tl = clause_lits[tj - 1];
        if (std::find(tl.begin(), tl.end(), -lit) == tl.end()) continue;
        SetDef y;
        y.required.push_back("m" + num(sj));
        y.optional.push_back(lit_elem(lit, sj));
        y.optional.push_back(lit_elem(-lit, tj));
        sets.push_back(std::move(y));
        SetDef z;
        z.required.push_back(lit_elem(-lit, tj));
        z.optional.push_back("m" + num(sj));
        z.optional.push_back("m" + num(tj));
        sets.push_back(std::move(z));
      }
    }
  if (cardinality > 2)
    for (size_t si = 0; si < sets.size(); ++si)
      for (int t = 1; t <= cardinality - 2; ++t) {
        std::string e = "pad" + num(si) + "_" + num(t);
        universe.push_back(e);
        sets[si].required.push_back(e);
      }

  GadgetOutput out;
  out.family = "atmost1";
  Instance inst;
  ConstraintSpec spec;
  spec.kind = Kind::AtMost1;
  spec.universe = universe;
  spec.cardinality = cardinality;
  for (size_t si = 0; si < sets.size(); ++si) {
    const auto& s = sets[si];
    for (const auto& e : universe) {
      VarId id = "S" + num(si) + "_" + e;
      bool req = std::find(s.required.begin(), s.required.end(), e) !=
                 s.required.end();
      bool opt = std::find(s.optional.begin(), s.optional.end(), e) !=
                 s.optional.end();
      add_var(inst, id, req ? Domain{1} : opt ? Domain{0, 1} : Domain{0});
      spec.scope.push_back(id);
    }
  }
  inst.constraint = std::move(spec);
  validate_instance(inst);
  out.instance = std::move(inst);
  out.question.kind = QuestionKind::NoGacWipeOut;
  out.source_answer_meaning = kSatMeaning;

  // a variable is true exactly when some clause set picked its positive
  // element as the satisfier
  std::vector<std::vector<VarId>> positive_sites(g.num_vars + 1);
  for (int j = 1; j <= m; ++j)
    for (int lit : clause_lits[j - 1])
      if (lit > 0)
        positive_sites[lit].push_back("S" + num(j - 1) + "_" + lit_elem(lit, j));
  out.decode = [positive_sites, nv = g.num_vars](const Tuple& t) {
    SourceCertificate c;
    c.model.assign(nv, false);
    for (int v = 1; v <= nv; ++v)
      for (const auto& site : positive_sites[v])
        if (tuple_value(t, site, 0) == 1) c.model[v - 1] = true;
    return c;
  };
  return out;
}

// ---------------------------------------------------------------------------
// Graph families
// ---------------------------------------------------------------------------

GadgetOutput build_isitgac_gadget(const Graph& g) {
  validate_graph(g);
  if (g.num_vertices < 1)
    throw InvariantError("isitgac gadget needs a vertex");
  GadgetOutput out;
  out.family = "isitgac";
  Instance inst;
  ConstraintSpec spec;
  spec.kind = Kind::BinaryNetwork;
  for (int v = 0; v < g.num_vertices; ++v) {
    VarId id = "v" + num(v + 1);
    add_var(inst, id, {0, 1, 2});
    spec.scope.push_back(id);
  }
  std::set<std::pair<int, int>> edges;
  for (auto [u, v] : g.edges)
    edges.insert({std::min(u, v), std::max(u, v)});
  for (int a = 0; a < g.num_vertices; ++a)
    for (int b = a + 1; b < g.num_vertices; ++b) {
      PairRelation rel;
      rel.i = a;
      rel.j = b;
      bool edge = edges.count({a, b}) > 0;
      for (Value x = 0; x < 3; ++x)
        for (Value y = 0; y < 3; ++y)
          if (!edge || x != y) rel.allowed.push_back({x, y});
      spec.relations.push_back(std::move(rel));
    }
  inst.constraint = std::move(spec);
  validate_instance(inst);
  out.instance = std::move(inst);
  out.question.kind = QuestionKind::IsItGac;
  out.source_answer_meaning = "yes iff the graph is 3-colourable";
  const int nv = g.num_vertices;
  out.decode = [nv](const Tuple& t) {
    SourceCertificate c;
    c.coloring.assign(nv, 0);
    for (int v = 0; v < nv; ++v)
      c.coloring[v] = tuple_value(t, "v" + num(v + 1), 0);
    return c;
  };
  return out;
}

GadgetOutput build_maxgac_gadget(const Graph& yes_graph, const Graph& no_graph) {
  validate_graph(yes_graph);
  validate_graph(no_graph);
  if (yes_graph.num_vertices != no_graph.num_vertices)
    throw InvariantError("maxgac gadget: vertex-set mismatch");
  if (yes_graph.num_vertices < 1)
    throw InvariantError("maxgac gadget needs a vertex");
  const int nv = yes_graph.num_vertices;
  auto edge_set = [](const Graph& g) {
    std::set<std::pair<int, int>> s;
    for (auto [u, v] : g.edges) s.insert({std::min(u, v), std::max(u, v)});
    return s;
  };
  std::set<std::pair<int, int>> e1 = edge_set(yes_graph);
  std::set<std::pair<int, int>> e2 = edge_set(no_graph);

  GadgetOutput out;
  out.family = "maxgac";
  Instance inst;
  ConstraintSpec spec;
  spec.kind = Kind::BinaryNetwork;
  for (int v = 0; v < nv; ++v) {
    VarId id = "v" + num(v + 1);
    add_var(inst, id, {0, 1, 2, 3, 4, 5});
    spec.scope.push_back(id);
  }
  // values 0..2 colour the first graph, 3..5 the second; worlds never mix
  for (int a = 0; a < nv; ++a)
    for (int b = a + 1; b < nv; ++b) {
      bool in1 = e1.count({a, b}) > 0, in2 = e2.count({a, b}) > 0;
      PairRelation rel;
      rel.i = a;
      rel.j = b;
      for (Value x = 0; x < 6; ++x)
        for (Value y = 0; y < 6; ++y) {
          bool w1 = x < 3 && y < 3, w2 = x >= 3 && y >= 3;
          if (!w1 && !w2) continue;
          if ((w1 ? in1 : in2) && x == y) continue;
          rel.allowed.push_back({x, y});
        }
      spec.relations.push_back(std::move(rel));
    }
  inst.constraint = std::move(spec);
  validate_instance(inst);
  out.instance = std::move(inst);
  out.question.kind = QuestionKind::MaxGac;
  for (int v = 0; v < nv; ++v)
    out.question.candidate["v" + num(v + 1)] = {0, 1, 2};
  out.source_answer_meaning =
      "yes iff the first graph is 3-colourable and the second is not";
  out.decode = [nv](const Tuple& t) {
    SourceCertificate c;
    c.coloring.assign(nv, 0);
    for (int v = 0; v < nv; ++v)
      c.coloring[v] = tuple_value(t, "v" + num(v + 1), 0) % 3;
    return c;
  };
  return out;
}

// ---------------------------------------------------------------------------
// Cardpath from graph colouring
// ---------------------------------------------------------------------------

namespace {

std::vector<int> bfs_path(const std::vector<std::vector<int>>& adj, int from,
                          int to) {
  if (from == to) return {from};
  std::vector<int> prev(adj.size(), -1);
  std::queue<int> q;
  q.push(from);
  prev[from] = from;
  while (!q.empty()) {
    int u = q.front();
    q.pop();
    for (int v : adj[u]) {
      if (prev[v] >= 0) continue;
      prev[v] = u;
      if (v == to) {
        std::vector<int> path{to};
        for (int w = to; w != from; w = prev[w]) path.push_back(prev[w]);
        std::reverse(path.begin(), path.end());
        return path;
      }
      q.push(v);
    }
  }
  throw InvariantError("bfs on a disconnected graph");
}

}  // namespace

GadgetOutput build_cardpath_3col_gadget(const Graph& g) {
  validate_graph(g);
  if (g.edges.empty())
    throw UnsupportedInstanceError("cardpath-3col gadget needs an edge");
  if (!is_connected(g))
    throw UnsupportedInstanceError("cardpath-3col gadget needs a connected graph");
  auto adj = adjacency(g);

  // one continuous walk covering every edge: extend from the current end to
  // the next uncovered edge along shortest paths, lowest vertices first
  std::set<std::pair<int, int>> todo;
  for (auto [u, v] : g.edges) todo.insert({std::min(u, v), std::max(u, v)});
  std::set<std::pair<int, int>> covered;
  auto cover = [&covered](int u, int v) {
    covered.insert({std::min(u, v), std::max(u, v)});
  };
  std::vector<int> walk{0};
  int cur = 0;
  for (auto [u, v] : todo) {
    if (covered.count({u, v})) continue;
    std::vector<int> path = bfs_path(adj, cur, u);
    for (size_t t = 1; t < path.size(); ++t) {
      cover(path[t - 1], path[t]);
      walk.push_back(path[t]);
    }
    cover(u, v);
    walk.push_back(v);
    cur = v;
  }

  GadgetOutput out;
  out.family = "cardpath-3col";
  Instance inst;
  const long long windows = static_cast<long long>(walk.size()) - 1;
  add_var(inst, "N", {static_cast<Value>(windows)});
  for (int v = 0; v < g.num_vertices; ++v)
    add_var(inst, "v" + num(v + 1), {0, 1, 2});

  ConstraintSpec tpl;
  tpl.kind = Kind::Table;
  tpl.scope = {"t1", "t2"};
  for (Value x = 0; x < 3; ++x)
    for (Value y = 0; y < 3; ++y)
      if (x != y) tpl.tuples.push_back({x, y});

  ConstraintSpec spec;
  spec.kind = Kind::Cardpath;
  spec.children.push_back(std::move(tpl));
  spec.scope.push_back("N");
  for (int v : walk) spec.scope.push_back("v" + num(v + 1));
  inst.constraint = std::move(spec);
  validate_instance(inst);
  out.instance = std::move(inst);
  out.question.kind = QuestionKind::NoGacWipeOut;
  out.source_answer_meaning = "yes iff the graph is 3-colourable";
  const int nv = g.num_vertices;
  out.decode = [nv](const Tuple& t) {
    SourceCertificate c;
    c.coloring.assign(nv, 0);
    for (int v = 0; v < nv; ++v)
      c.coloring[v] = tuple_value(t, "v" + num(v + 1), 0);
    return c;
  };
  return out;
}

// ---------------------------------------------------------------------------
// Cardpath from bounded-violation 2-SAT
// ---------------------------------------------------------------------------

GadgetOutput build_cardpath_max2sat_gadget(const Max2SatInput& w) {
  validate_max2sat(w);
  const int n = w.num_vars, m = static_cast<int>(w.clauses.size());
  const int k = w.max_violations;
  if (n < 1 || m < 1)
    throw InvariantError(
        "cardpath-max2sat gadget needs at least one variable and one clause");
  const int B = (k + 1) + n + 2;
  const Value dummy = n + 1;

  // one alternation per clause, then enough dummies that the last clause
  // still heads a full window
  std::vector<std::pair<VarId, Domain>> seq;
  for (int j = 1; j <= m; ++j) {
    for (int t = 1; t <= k + 1; ++t)
      seq.push_back({"d" + num(j) + "_" + num(t), {dummy}});
    for (int i = 1; i <= n; ++i)
      seq.push_back({"b" + num(j) + "_" + num(i), {0, 1}});
    seq.push_back({"q" + num(j) + "a", {w.clauses[j - 1][0]}});
    seq.push_back({"q" + num(j) + "b", {w.clauses[j - 1][1]}});
  }
  for (int t = 1; t <= B + k + 1; ++t)
    seq.push_back({"dz" + num(t), {dummy}});
  const long long len = static_cast<long long>(seq.size());
  const long long window_count = len - 2 * B + 1;

  // window predicate: out-of-alignment windows hold; a leading dummy prefix
  // asks the two boolean blocks to agree (or the second to be all dummy);
  // alignment on a boolean block start checks the clause values against it
  auto window_ok = [n, B, dummy](std::span<const Value> win) {
    bool d1 = win[0] == dummy, dB = win[B - 1] == dummy;
    if (!d1 && !dB) return true;
    if (d1) {
      int t = 0;
      while (t < B && win[t] == dummy) ++t;
      if (t + B + n > 2 * B) return true;
      bool all_dummy = true, equal = true;
      for (int i = 0; i < n; ++i) {
        if (win[t + B + i] != dummy) all_dummy = false;
        if (win[t + i] != win[t + B + i]) equal = false;
      }
      return all_dummy || equal;
    }
    auto lit_sat = [&](Value l) {
      if (l == dummy) return true;
      return l > 0 ? win[l - 1] == 1 : win[-l - 1] == 0;
    };
    return lit_sat(win[n]) || lit_sat(win[n + 1]);
  };

  // template rows: every realizable window content that satisfies the
  // predicate, enumerated over the free boolean positions
  std::set<std::vector<Value>> rows;
  for (long long p = 0; p + 2 * B <= len; ++p) {
    std::vector<int> free_pos;
    std::vector<Value> win(2 * B);
    for (int q = 0; q < 2 * B; ++q) {
      const Domain& d = seq[p + q].second;
      win[q] = d[0];
      if (d.size() > 1) free_pos.push_back(q);
    }
    if (free_pos.size() > 22)
      throw ScaleLimitError("cardpath-max2sat template enumeration too wide");
    for (long long c = 0; c < (1LL << free_pos.size()); ++c) {
      for (size_t b = 0; b < free_pos.size(); ++b)
        win[free_pos[b]] = seq[p + free_pos[b]].second[(c >> b) & 1];
      if (window_ok(win)) rows.insert(win);
    }
  }

  // calibration: the same layout with tautologous clauses and an all-false
  // reference must satisfy every window
  {
    std::vector<Value> sval;
    for (int j = 1; j <= m; ++j) {
      for (int t = 1; t <= k + 1; ++t) sval.push_back(dummy);
      for (int i = 1; i <= n; ++i) sval.push_back(0);
      sval.push_back(1);
      sval.push_back(-1);
    }
    for (int t = 1; t <= B + k + 1; ++t) sval.push_back(dummy);
    long long sat_windows = 0;
    for (long long p = 0; p + 2 * B <= len; ++p)
      if (window_ok(std::span<const Value>(sval).subspan(p, 2 * B)))
        ++sat_windows;
    if (sat_windows != window_count)
      throw InvariantError("cardpath-max2sat window calibration failed");
  }

  GadgetOutput out;
  out.family = "cardpath-max2sat";
  Instance inst;
  Domain counts;
  for (long long c = window_count - k; c <= window_count; ++c)
    counts.push_back(static_cast<Value>(c));
  add_var(inst, "N", counts);
  for (auto& [id, dom] : seq) add_var(inst, id, dom);

  ConstraintSpec tpl;
  tpl.kind = Kind::Table;
  for (int q = 1; q <= 2 * B; ++q) tpl.scope.push_back("t" + num(q));
  tpl.tuples.assign(rows.begin(), rows.end());

  ConstraintSpec spec;
  spec.kind = Kind::Cardpath;
  spec.children.push_back(std::move(tpl));
  spec.scope.push_back("N");
  for (auto& [id, dom] : seq) spec.scope.push_back(id);
  inst.constraint = std::move(spec);
  validate_instance(inst);
  out.instance = std::move(inst);
  out.question.kind = QuestionKind::NoGacWipeOut;
  out.source_answer_meaning =
      "yes iff some assignment violates at most the allowed number of clauses";
  out.decode = [n](const Tuple& t) {
    SourceCertificate c;
    c.model.assign(n, false);
    for (int i = 1; i <= n; ++i)
      if (tuple_value(t, "b1_" + num(i), 0) == 1) c.model[i - 1] = true;
    return c;
  };
  return out;
}

// ---------------------------------------------------------------------------
// Dispatch
// ---------------------------------------------------------------------------

std::vector<std::string> gadget_family_names() {
  return {"support",   "isitgac",  "maxgac",        "nvalue",
          "among-var", "common",   "disjoint",      "atmost1",
          "scalarproduct", "gcc-repeat", "card",    "cardpath-3col",
          "cardpath-max2sat"};
}

namespace {

const Cnf3& want_cnf(const SourceProblem& src, const std::string& family,
                     SourceProblem::Tag tag, const char* what) {
  if (src.tag != tag)
    throw InvariantError("family " + family + " expects " + what);
  return src.cnf;
}

}  // namespace

GadgetOutput build_gadget(const std::string& family, const SourceProblem& src,
                          const GadgetParams& params) {
  using Tag = SourceProblem::Tag;
  if (family == "support")
    return build_support_gadget(
        want_cnf(src, family, Tag::Sat3, "a 3-cnf source"));
  if (family == "isitgac") {
    if (src.tag != Tag::ThreeCol)
      throw InvariantError("family isitgac expects a graph source");
    return build_isitgac_gadget(src.graph);
  }
  if (family == "maxgac") {
    if (src.tag != Tag::ThreeColPair)
      throw InvariantError("family maxgac expects a graph-pair source");
    return build_maxgac_gadget(src.graph, src.graph2);
  }
  if (family == "nvalue")
    return build_nvalue_gadget(
        want_cnf(src, family, Tag::Sat3, "a 3-cnf source"));
  if (family == "among-var")
    return build_among_var_gadget(
        want_cnf(src, family, Tag::Sat3, "a 3-cnf source"));
  if (family == "common")
    return build_common_gadget(
        want_cnf(src, family, Tag::Sat3, "a 3-cnf source"));
  if (family == "disjoint")
    return build_disjoint_gadget(
        want_cnf(src, family, Tag::Sat3, "a 3-cnf source"));
  if (family == "atmost1")
    return build_atmost1_gadget(
        want_cnf(src, family, Tag::Sat3, "a 3-cnf source"), params.cardinality);
  if (family == "scalarproduct")
    return build_scalarproduct_gadget(
        want_cnf(src, family, Tag::OneInThree, "a positive 3-cnf source"),
        params.target);
  if (family == "gcc-repeat")
    return build_gcc_repeat_gadget(
        want_cnf(src, family, Tag::Sat3, "a 3-cnf source"));
  if (family == "card")
    return build_card_gadget(want_cnf(src, family, Tag::Sat3, "a 3-cnf source"));
  if (family == "cardpath-3col") {
    if (src.tag != Tag::ThreeCol)
      throw InvariantError("family cardpath-3col expects a graph source");
    return build_cardpath_3col_gadget(src.graph);
  }
  if (family == "cardpath-max2sat") {
    if (src.tag != Tag::Max2Sat)
      throw InvariantError("family cardpath-max2sat expects a max2sat source");
    return build_cardpath_max2sat_gadget(src.max2sat);
  }
  throw InvariantError("unknown gadget family: " + family);
}

// ---------------------------------------------------------------------------
// Verification
// ---------------------------------------------------------------------------

VerificationReport verify_gadget(const GadgetOutput& g,
                                 const SourceProblem& src,
                                 const SearchBudget& budget) {
  VerificationReport rep;
  rep.oracle_answer = source_oracle_answer(src);
  QuestionResult qr;
  try {
    qr = answer_question(g.instance, g.question, budget);
  } catch (const BudgetExhaustedError& e) {
    rep.oversized = true;
    rep.tuples_explored = e.explored();
    return rep;
  }
  rep.engine_answer = qr.answer;
  rep.tuples_explored = qr.tuples_explored;
  rep.agree = (qr.answer == rep.oracle_answer);
  if (!(qr.answer && rep.oracle_answer && g.decode)) return rep;

  std::optional<Tuple> wit = qr.witness;
  try {
    if (!wit) {
      if (g.question.kind == QuestionKind::IsItGac) {
        wit = no_gac_wipeout(g.instance, budget).witness;
      } else if (g.question.kind == QuestionKind::MaxGac) {
        Instance restricted = g.instance;
        for (size_t i = 0; i < restricted.variables.size(); ++i) {
          auto it = g.question.candidate.find(restricted.variables[i]);
          if (it != g.question.candidate.end()) restricted.domains[i] = it->second;
        }
        wit = no_gac_wipeout(restricted, budget).witness;
      }
    }
  } catch (const BudgetExhaustedError&) {
    return rep;  // answer stands, certificate unchecked
  }
  if (wit) rep.certificate_ok = source_certificate_ok(src, g.decode(*wit));
  return rep;
}

nlohmann::json gadget_meta_json(const GadgetOutput& g) {
  nlohmann::json args = nlohmann::json::object();
  if (g.question.kind == QuestionKind::GacSupport) {
    args["var"] = g.question.var;
    args["value"] = g.question.value;
  }
  if (g.question.kind == QuestionKind::MaxGac) {
    nlohmann::json cand = nlohmann::json::object();
    for (const auto& [id, dom] : g.question.candidate) cand[id] = dom;
    args["candidate"] = std::move(cand);
  }
  return {{"question", question_kind_name(g.question.kind)},
          {"args", std::move(args)},
          {"sourceAnswerMeaning", g.source_answer_meaning}};
}

}  // namespace gaclab
