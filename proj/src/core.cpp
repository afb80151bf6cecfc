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

#include "gaclab/core.hpp"

#include <algorithm>
#include <unordered_map>

namespace gaclab {

namespace {

constexpr const char* kKindNames[] = {
    "table",      "binaryNetwork", "impliesCnf", "allDifferent", "nvalue",
    "amongConst", "amongVar",      "common",     "gcc",          "gccVar",
    "disjoint",   "scalarProduct", "atMost1",    "card",         "cardpath",
};

void bump(EvalStats* s, long long n = 1) {
  if (s) s->steps += n;
}

bool holds_value(const std::vector<Value>& vs, Value v) {
  return std::find(vs.begin(), vs.end(), v) != vs.end();
}

}  // namespace

const char* kind_name(Kind k) { return kKindNames[static_cast<int>(k)]; }

std::optional<Kind> kind_from_name(const std::string& name) {
  for (int i = 0; i < static_cast<int>(std::size(kKindNames)); ++i) {
    if (name == kKindNames[i]) return static_cast<Kind>(i);
  }
  return std::nullopt;
}

long long spec_size(const ConstraintSpec& spec) {
  long long n = static_cast<long long>(spec.scope.size());
  for (const auto& row : spec.tuples) n += static_cast<long long>(row.size());
  for (const auto& rel : spec.relations)
    n += 2 + 2 * static_cast<long long>(rel.allowed.size());
  for (const auto& cl : spec.cnf) n += static_cast<long long>(cl.size());
  n += static_cast<long long>(spec.value_set.size());
  n += 2 * static_cast<long long>(spec.occ.size());
  n += static_cast<long long>(spec.counted_values.size());
  n += static_cast<long long>(spec.universe.size());
  for (const auto& ch : spec.children) n += spec_size(ch);
  return n;
}

// ---------------------------------------------------------------------------
// Instance
// ---------------------------------------------------------------------------

int Instance::index_of(const VarId& id) const {
  for (int i = 0; i < static_cast<int>(variables.size()); ++i) {
    if (variables[i] == id) return i;
  }
  return -1;
}

const Domain& Instance::domain(const VarId& id) const {
  int i = index_of(id);
  if (i < 0) throw MissingVariableError("unknown variable: " + id);
  return domains[i];
}

DomainMap Instance::domain_map() const {
  DomainMap m;
  for (size_t i = 0; i < variables.size(); ++i) m[variables[i]] = domains[i];
  return m;
}

namespace {

void check_domain_sorted(const VarId& id, const Domain& d) {
  for (size_t i = 1; i < d.size(); ++i) {
    if (d[i - 1] >= d[i]) {
      throw InvariantError("domain of " + id +
                           " must be strictly ascending");
    }
  }
}

}  // namespace

void validate_spec(const ConstraintSpec& spec) {
  if (spec.scope.empty()) throw InvariantError("constraint scope is empty");
  const int len = static_cast<int>(spec.scope.size());
  for (const auto& id : spec.scope) {
    if (id.empty()) throw InvariantError("empty VarId in scope");
  }
  switch (spec.kind) {
    case Kind::Table:
      for (const auto& row : spec.tuples) {
        if (static_cast<int>(row.size()) != len) {
          throw InvariantError("table row arity mismatch");
        }
      }
      break;
    case Kind::BinaryNetwork:
      for (const auto& rel : spec.relations) {
        if (rel.i < 0 || rel.i >= len || rel.j < 0 || rel.j >= len ||
            rel.i == rel.j) {
          throw InvariantError("binary relation positions out of range");
        }
      }
      break;
    case Kind::ImpliesCnf: {
      const int n = len - 1;
      for (const auto& cl : spec.cnf) {
        for (int lit : cl) {
          if (lit == 0 || lit > n || lit < -n) {
            throw InvariantError("cnf literal out of range");
          }
        }
      }
      break;
    }
    case Kind::AllDifferent:
      break;
    case Kind::NValue:
      if (len < 2) throw InvariantError("nvalue needs at least [X, N]");
      break;
    case Kind::AmongConst:
      if (len < 1) throw InvariantError("among needs [N, X..]");
      break;
    case Kind::AmongVar:
      if (spec.split < 0 || spec.split > len - 1) {
        throw InvariantError("amongVar split out of range");
      }
      break;
    case Kind::Common:
      if (len < 2 || spec.split < 0 || spec.split > len - 2) {
        throw InvariantError("common split out of range");
      }
      break;
    case Kind::Gcc:
      for (const auto& [v, iv] : spec.occ) {
        if (iv.lo > iv.hi || iv.lo < 0) {
          throw InvariantError("gcc interval malformed");
        }
      }
      break;
    case Kind::GccVar:
      if (static_cast<int>(spec.counted_values.size()) > len) {
        throw InvariantError("gccVar has more counted values than scope");
      }
      break;
    case Kind::Disjoint:
      if (spec.split <= 0 || spec.split >= len) {
        throw InvariantError("disjoint split must cut the scope in two");
      }
      break;
    case Kind::ScalarProduct:
      if (spec.rows < 2 || len % spec.rows != 0) {
        throw InvariantError("scalarProduct grid shape mismatch");
      }
      if (spec.target < 0) throw InvariantError("scalarProduct target < 0");
      break;
    case Kind::AtMost1: {
      const int u = static_cast<int>(spec.universe.size());
      if (u == 0 || len % u != 0) {
        throw InvariantError("atMost1 scope is not a whole number of sets");
      }
      if (spec.cardinality < 0) throw InvariantError("atMost1 cardinality < 0");
      std::set<std::string> seen(spec.universe.begin(), spec.universe.end());
      if (static_cast<int>(seen.size()) != u) {
        throw InvariantError("atMost1 universe labels repeat");
      }
      break;
    }
    case Kind::CardMeta: {
      if (spec.children.empty()) throw InvariantError("card has no children");
      std::set<VarId> in_scope(spec.scope.begin(), spec.scope.end());
      for (const auto& ch : spec.children) {
        validate_spec(ch);
        for (const auto& v : ch.scope) {
          if (!in_scope.count(v)) {
            throw InvariantError("card child references " + v +
                                 " outside the meta scope");
          }
        }
      }
      break;
    }
    case Kind::Cardpath: {
      if (spec.children.size() != 1) {
        throw InvariantError("cardpath needs exactly one template");
      }
      validate_spec(spec.children[0]);
      const int k = static_cast<int>(spec.children[0].scope.size());
      const int m = len - 1;
      if (k < 1 || k > m) {
        throw InvariantError("cardpath window arity must be in [1, length]");
      }
      break;
    }
  }
}

void validate_instance(const Instance& inst) {
  if (inst.variables.size() != inst.domains.size()) {
    throw InvariantError("variables and domains differ in length");
  }
  std::set<VarId> ids;
  for (size_t i = 0; i < inst.variables.size(); ++i) {
    const VarId& id = inst.variables[i];
    if (id.empty()) throw InvariantError("empty variable id");
    if (!ids.insert(id).second) {
      throw InvariantError("duplicate variable id: " + id);
    }
    check_domain_sorted(id, inst.domains[i]);
  }
  validate_spec(inst.constraint);
  for (const auto& v : inst.constraint.scope) {
    if (!ids.count(v)) {
      throw InvariantError("scope variable " + v + " is not declared");
    }
  }
  if (inst.constraint.kind == Kind::CardMeta) {
    for (const auto& ch : inst.constraint.children) {
      for (const auto& v : ch.scope) {
        if (!ids.count(v)) {
          throw InvariantError("child scope variable " + v +
                               " is not declared");
        }
      }
    }
  }
}

// ---------------------------------------------------------------------------
// Checker
// ---------------------------------------------------------------------------

Checker::Checker(const ConstraintSpec& spec) : spec_(&spec) {
  std::unordered_map<std::string, int> index;
  pos_to_var_.reserve(spec.scope.size());
  for (const auto& id : spec.scope) {
    auto it = index.find(id);
    if (it == index.end()) {
      it = index.emplace(id, static_cast<int>(vars_.size())).first;
      vars_.push_back(id);
    } else {
      has_repeat_ = true;
    }
    pos_to_var_.push_back(it->second);
  }

  switch (spec.kind) {
    case Kind::Table:
      for (const auto& row : spec.tuples) table_.insert(row);
      break;
    case Kind::BinaryNetwork:
      rel_sets_.resize(spec.relations.size());
      var_relations_.resize(vars_.size());
      for (size_t r = 0; r < spec.relations.size(); ++r) {
        for (const auto& pr : spec.relations[r].allowed) {
          rel_sets_[r].insert(pr);
        }
        var_relations_[pos_to_var_[spec.relations[r].i]].push_back(
            static_cast<int>(r));
        var_relations_[pos_to_var_[spec.relations[r].j]].push_back(
            static_cast<int>(r));
      }
      break;
    case Kind::ScalarProduct:
      sp_cols_ = static_cast<int>(spec.scope.size()) / spec.rows;
      break;
    case Kind::CardMeta:
      for (const auto& ch : spec.children) {
        children_.emplace_back(ch);
        std::vector<int> map;
        for (const auto& v : children_.back().vars()) {
          map.push_back(index.at(v));
        }
        child_var_map_.push_back(std::move(map));
      }
      break;
    case Kind::Cardpath:
      children_.emplace_back(spec.children[0]);
      break;
    default:
      break;
  }
}

int Checker::var_index(const VarId& id) const {
  for (int i = 0; i < num_vars(); ++i) {
    if (vars_[i] == id) return i;
  }
  return -1;
}

bool Checker::complete(std::span<const Value> by_var, EvalStats* s) const {
  switch (spec_->kind) {
    case Kind::Table: return check_table(by_var, s);
    case Kind::BinaryNetwork: return check_binary_network(by_var, s);
    case Kind::ImpliesCnf: return check_implies_cnf(by_var, s);
    case Kind::AllDifferent: {
      const auto& p2v = pos_to_var_;
      std::set<Value> seen;
      for (size_t p = 0; p < p2v.size(); ++p) {
        bump(s);
        if (!seen.insert(by_var[p2v[p]]).second) return false;
      }
      return true;
    }
    case Kind::NValue: return check_nvalue(by_var, s);
    case Kind::AmongConst: return check_among_const(by_var, s);
    case Kind::AmongVar: return check_among_var(by_var, s);
    case Kind::Common: return check_common(by_var, s);
    case Kind::Gcc: return check_gcc(by_var, s);
    case Kind::GccVar: return check_gcc_var(by_var, s);
    case Kind::Disjoint: return check_disjoint(by_var, s);
    case Kind::ScalarProduct: return check_scalar_product(by_var, s);
    case Kind::AtMost1: return check_atmost1(by_var, s);
    case Kind::CardMeta: return check_card_meta(by_var, s);
    case Kind::Cardpath: return check_cardpath(by_var, s);
  }
  throw Error("unreachable");
}

bool Checker::check_table(std::span<const Value> v, EvalStats* s) const {
  std::vector<Value> row;
  row.reserve(pos_to_var_.size());
  for (int pv : pos_to_var_) row.push_back(v[pv]);
  bump(s, static_cast<long long>(row.size()));
  return table_.count(row) > 0;
}

bool Checker::check_binary_network(std::span<const Value> v,
                                   EvalStats* s) const {
  for (size_t r = 0; r < spec_->relations.size(); ++r) {
    const auto& rel = spec_->relations[r];
    bump(s);
    if (!rel_sets_[r].count({v[pos_to_var_[rel.i]], v[pos_to_var_[rel.j]]})) {
      return false;
    }
  }
  return true;
}

bool Checker::check_implies_cnf(std::span<const Value> v, EvalStats* s) const {
  if (v[pos_to_var_[0]] != 1) return true;
  for (const auto& cl : spec_->cnf) {
    bool sat = false;
    for (int lit : cl) {
      bump(s);
      Value x = v[pos_to_var_[lit > 0 ? lit : -lit]];
      if ((lit > 0 && x == 1) || (lit < 0 && x == 0)) {
        sat = true;
        break;
      }
    }
    if (!sat) return false;
  }
  return true;
}

bool Checker::check_nvalue(std::span<const Value> v, EvalStats* s) const {
  const int len = static_cast<int>(pos_to_var_.size());
  std::set<Value> seen;
  for (int p = 0; p + 1 < len; ++p) {
    bump(s);
    seen.insert(v[pos_to_var_[p]]);
  }
  return static_cast<Value>(seen.size()) == v[pos_to_var_[len - 1]];
}

bool Checker::check_among_const(std::span<const Value> v, EvalStats* s) const {
  const int len = static_cast<int>(pos_to_var_.size());
  int count = 0;
  for (int p = 1; p < len; ++p) {
    bump(s);
    if (holds_value(spec_->value_set, v[pos_to_var_[p]])) ++count;
  }
  return count == v[pos_to_var_[0]];
}

bool Checker::check_among_var(std::span<const Value> v, EvalStats* s) const {
  const int len = static_cast<int>(pos_to_var_.size());
  const int nx = spec_->split;
  std::set<Value> dvals;
  for (int p = 1 + nx; p < len; ++p) {
    bump(s);
    dvals.insert(v[pos_to_var_[p]]);
  }
  int count = 0;
  for (int p = 1; p <= nx; ++p) {
    bump(s);
    if (dvals.count(v[pos_to_var_[p]])) ++count;
  }
  return count == v[pos_to_var_[0]];
}

bool Checker::check_common(std::span<const Value> v, EvalStats* s) const {
  const int len = static_cast<int>(pos_to_var_.size());
  const int nx = spec_->split;
  std::set<Value> xvals, yvals;
  for (int p = 2; p < 2 + nx; ++p) xvals.insert(v[pos_to_var_[p]]);
  for (int p = 2 + nx; p < len; ++p) yvals.insert(v[pos_to_var_[p]]);
  int n = 0, m = 0;
  for (int p = 2; p < 2 + nx; ++p) {
    bump(s);
    if (yvals.count(v[pos_to_var_[p]])) ++n;
  }
  for (int p = 2 + nx; p < len; ++p) {
    bump(s);
    if (xvals.count(v[pos_to_var_[p]])) ++m;
  }
  return n == v[pos_to_var_[0]] && m == v[pos_to_var_[1]];
}

bool Checker::check_gcc(std::span<const Value> v, EvalStats* s) const {
  std::map<Value, int> counts;
  for (int pv : pos_to_var_) {
    bump(s);
    counts[v[pv]]++;
  }
  for (const auto& [val, iv] : spec_->occ) {
    bump(s);
    auto it = counts.find(val);
    int c = it == counts.end() ? 0 : it->second;
    if (c < iv.lo || c > iv.hi) return false;
  }
  return true;
}

bool Checker::check_gcc_var(std::span<const Value> v, EvalStats* s) const {
  const int len = static_cast<int>(pos_to_var_.size());
  const int m = static_cast<int>(spec_->counted_values.size());
  const int nx = len - m;
  for (int j = 0; j < m; ++j) {
    int c = 0;
    for (int p = 0; p < nx; ++p) {
      bump(s);
      if (v[pos_to_var_[p]] == spec_->counted_values[j]) ++c;
    }
    if (c != v[pos_to_var_[nx + j]]) return false;
  }
  return true;
}

bool Checker::check_disjoint(std::span<const Value> v, EvalStats* s) const {
  const int len = static_cast<int>(pos_to_var_.size());
  std::set<Value> xvals;
  for (int p = 0; p < spec_->split; ++p) {
    bump(s);
    xvals.insert(v[pos_to_var_[p]]);
  }
  for (int p = spec_->split; p < len; ++p) {
    bump(s);
    if (xvals.count(v[pos_to_var_[p]])) return false;
  }
  return true;
}

bool Checker::check_scalar_product(std::span<const Value> v,
                                   EvalStats* s) const {
  const int c = sp_cols_;
  for (int j = 1; j < spec_->rows; ++j) {
    long long dot = 0;
    for (int k = 0; k < c; ++k) {
      bump(s);
      dot += static_cast<long long>(v[pos_to_var_[k]]) *
             static_cast<long long>(v[pos_to_var_[j * c + k]]);
    }
    if (dot != spec_->target) return false;
  }
  return true;
}

bool Checker::check_atmost1(std::span<const Value> v, EvalStats* s) const {
  const int u = static_cast<int>(spec_->universe.size());
  const int nsets = static_cast<int>(pos_to_var_.size()) / u;
  std::vector<std::vector<int>> members(nsets);
  for (int a = 0; a < nsets; ++a) {
    for (int e = 0; e < u; ++e) {
      bump(s);
      if (v[pos_to_var_[a * u + e]] == 1) members[a].push_back(e);
    }
    if (static_cast<int>(members[a].size()) != spec_->cardinality) {
      return false;
    }
  }
  for (int a = 0; a < nsets; ++a) {
    for (int b = a + 1; b < nsets; ++b) {
      int common = 0;
      size_t i = 0, j = 0;
      while (i < members[a].size() && j < members[b].size()) {
        bump(s);
        if (members[a][i] == members[b][j]) {
          ++common;
          ++i;
          ++j;
        } else if (members[a][i] < members[b][j]) {
          ++i;
        } else {
          ++j;
        }
      }
      if (common > 1) return false;
    }
  }
  return true;
}

bool Checker::child_complete(int ci, std::span<const Value> by_var,
                             EvalStats* s) const {
  std::vector<Value> cv(child_var_map_[ci].size());
  for (size_t i = 0; i < cv.size(); ++i) cv[i] = by_var[child_var_map_[ci][i]];
  return children_[ci].complete(cv, s);
}

bool Checker::check_card_meta(std::span<const Value> v, EvalStats* s) const {
  int sat = 0;
  for (size_t ci = 0; ci < children_.size(); ++ci) {
    bump(s);
    if (child_complete(static_cast<int>(ci), v, s)) ++sat;
  }
  return sat == v[pos_to_var_[0]];
}

bool Checker::template_on_window(std::span<const Value> by_var, int start,
                                 EvalStats* s) const {
  const Checker& tpl = children_[0];
  const int k = tpl.num_vars();
  std::vector<Value> w(static_cast<size_t>(k));
  for (int i = 0; i < k; ++i) w[i] = by_var[pos_to_var_[start + i]];
  return tpl.complete(w, s);
}

bool Checker::check_cardpath(std::span<const Value> v, EvalStats* s) const {
  const int k = children_[0].num_vars();
  const int m = static_cast<int>(pos_to_var_.size()) - 1;
  const int windows = m - k + 1;
  int sat = 0;
  for (int w = 0; w < windows; ++w) {
    bump(s);
    if (template_on_window(v, 1 + w, s)) ++sat;
  }
  return sat == v[pos_to_var_[0]];
}

// --------------------------- partial verdicts ------------------------------

namespace {

inline bool lit_sat(int lit, Value x) {
  return (lit > 0 && x == 1) || (lit < 0 && x == 0);
}

}  // namespace

Verdict Checker::partial(std::span<const Value> by_var,
                         std::span<const char> assigned, int just_assigned,
                         EvalStats* s) const {
  const auto& p2v = pos_to_var_;
  const int len = static_cast<int>(p2v.size());
  switch (spec_->kind) {
    case Kind::Table: {
      // A prefix is dead when no allowed row matches the assigned positions.
      for (const auto& row : table_) {
        bool match = true;
        for (int p = 0; p < len; ++p) {
          bump(s);
          if (assigned[p2v[p]] && row[p] != by_var[p2v[p]]) {
            match = false;
            break;
          }
        }
        if (match) return Verdict::Unknown;
      }
      return Verdict::Violated;
    }
    case Kind::BinaryNetwork: {
      for (int r : var_relations_[just_assigned]) {
        const auto& rel = spec_->relations[r];
        bump(s);
        if (assigned[p2v[rel.i]] && assigned[p2v[rel.j]] &&
            !rel_sets_[r].count({by_var[p2v[rel.i]], by_var[p2v[rel.j]]})) {
          return Verdict::Violated;
        }
      }
      return Verdict::Unknown;
    }
    case Kind::ImpliesCnf: {
      if (!assigned[p2v[0]] || by_var[p2v[0]] != 1) return Verdict::Unknown;
      for (const auto& cl : spec_->cnf) {
        bool sat = false, open = false;
        for (int lit : cl) {
          bump(s);
          int pv = p2v[lit > 0 ? lit : -lit];
          if (!assigned[pv]) {
            open = true;
          } else if (lit_sat(lit, by_var[pv])) {
            sat = true;
            break;
          }
        }
        if (!sat && !open) return Verdict::Violated;
      }
      return Verdict::Unknown;
    }
    case Kind::AllDifferent: {
      if (has_repeat_ && len >= 2) return Verdict::Violated;
      Value mine = by_var[just_assigned];
      for (int u = 0; u < num_vars(); ++u) {
        bump(s);
        if (u != just_assigned && assigned[u] && by_var[u] == mine) {
          return Verdict::Violated;
        }
      }
      return Verdict::Unknown;
    }
    case Kind::NValue: {
      if (!assigned[p2v[len - 1]]) return Verdict::Unknown;
      Value n0 = by_var[p2v[len - 1]];
      std::set<Value> seen;
      int open = 0;
      for (int p = 0; p + 1 < len; ++p) {
        bump(s);
        if (assigned[p2v[p]]) {
          seen.insert(by_var[p2v[p]]);
        } else {
          ++open;
        }
      }
      // Open positions of distinct variables can only add values; repeated
      // positions of one open variable add at most one value each.
      int lo = static_cast<int>(seen.size());
      if (lo > n0 || lo + open < n0) return Verdict::Violated;
      return Verdict::Unknown;
    }
    case Kind::AmongConst: {
      if (!assigned[p2v[0]]) return Verdict::Unknown;
      Value n0 = by_var[p2v[0]];
      int in = 0, open = 0;
      for (int p = 1; p < len; ++p) {
        bump(s);
        if (!assigned[p2v[p]]) {
          ++open;
        } else if (holds_value(spec_->value_set, by_var[p2v[p]])) {
          ++in;
        }
      }
      if (in > n0 || in + open < n0) return Verdict::Violated;
      return Verdict::Unknown;
    }
    case Kind::AmongVar: {
      if (!assigned[p2v[0]]) return Verdict::Unknown;
      Value n0 = by_var[p2v[0]];
      const int nx = spec_->split;
      std::set<Value> dvals;
      bool all_d = true;
      for (int p = 1 + nx; p < len; ++p) {
        bump(s);
        if (assigned[p2v[p]]) {
          dvals.insert(by_var[p2v[p]]);
        } else {
          all_d = false;
        }
      }
      int lo = 0, non = 0, open = 0;
      for (int p = 1; p <= nx; ++p) {
        bump(s);
        if (!assigned[p2v[p]]) {
          ++open;
        } else if (dvals.count(by_var[p2v[p]])) {
          ++lo;
        } else {
          ++non;
        }
      }
      int hi = lo + open + (all_d ? 0 : non);
      if (lo > n0 || hi < n0) return Verdict::Violated;
      return Verdict::Unknown;
    }
    case Kind::Common: {
      if (!assigned[p2v[0]] || !assigned[p2v[1]]) return Verdict::Unknown;
      Value n0 = by_var[p2v[0]], m0 = by_var[p2v[1]];
      const int nx = spec_->split;
      const int ny = len - 2 - nx;
      std::set<Value> xa, ya;
      bool all_x = true, all_y = true;
      for (int p = 2; p < 2 + nx; ++p) {
        if (assigned[p2v[p]]) xa.insert(by_var[p2v[p]]);
        else all_x = false;
      }
      for (int p = 2 + nx; p < len; ++p) {
        if (assigned[p2v[p]]) ya.insert(by_var[p2v[p]]);
        else all_y = false;
      }
      int lo_n = 0, non_n = 0, open_n = 0;
      for (int p = 2; p < 2 + nx; ++p) {
        bump(s);
        if (!assigned[p2v[p]]) ++open_n;
        else if (ya.count(by_var[p2v[p]])) ++lo_n;
        else ++non_n;
      }
      int hi_n = lo_n + open_n + (all_y ? 0 : non_n);
      if (lo_n > n0 || hi_n < n0) return Verdict::Violated;
      int lo_m = 0, non_m = 0, open_m = 0;
      for (int p = 2 + nx; p < len; ++p) {
        bump(s);
        if (!assigned[p2v[p]]) ++open_m;
        else if (xa.count(by_var[p2v[p]])) ++lo_m;
        else ++non_m;
      }
      int hi_m = lo_m + open_m + (all_x ? 0 : non_m);
      if (lo_m > m0 || hi_m < m0) return Verdict::Violated;
      (void)ny;
      return Verdict::Unknown;
    }
    case Kind::Gcc: {
      std::map<Value, int> counts;
      int open = 0;
      for (int p = 0; p < len; ++p) {
        bump(s);
        if (assigned[p2v[p]]) counts[by_var[p2v[p]]]++;
        else ++open;
      }
      long long deficit = 0;
      for (const auto& [val, iv] : spec_->occ) {
        bump(s);
        auto it = counts.find(val);
        int c = it == counts.end() ? 0 : it->second;
        if (c > iv.hi) return Verdict::Violated;
        if (c < iv.lo) deficit += iv.lo - c;
      }
      if (deficit > open) return Verdict::Violated;
      return Verdict::Unknown;
    }
    case Kind::GccVar: {
      const int m = static_cast<int>(spec_->counted_values.size());
      const int nx = len - m;
      int open = 0;
      for (int p = 0; p < nx; ++p) {
        if (!assigned[p2v[p]]) ++open;
      }
      for (int j = 0; j < m; ++j) {
        if (!assigned[p2v[nx + j]]) continue;
        Value o = by_var[p2v[nx + j]];
        int c = 0;
        for (int p = 0; p < nx; ++p) {
          bump(s);
          if (assigned[p2v[p]] && by_var[p2v[p]] == spec_->counted_values[j]) {
            ++c;
          }
        }
        if (c > o || c + open < o) return Verdict::Violated;
      }
      return Verdict::Unknown;
    }
    case Kind::Disjoint: {
      std::set<Value> xa;
      for (int p = 0; p < spec_->split; ++p) {
        bump(s);
        if (assigned[p2v[p]]) xa.insert(by_var[p2v[p]]);
      }
      for (int p = spec_->split; p < len; ++p) {
        bump(s);
        if (assigned[p2v[p]] && xa.count(by_var[p2v[p]])) {
          return Verdict::Violated;
        }
      }
      return Verdict::Unknown;
    }
    case Kind::ScalarProduct: {
      const int c = sp_cols_;
      auto row_complete = [&](int r) {
        for (int k = 0; k < c; ++k) {
          bump(s);
          if (!assigned[p2v[r * c + k]]) return false;
        }
        return true;
      };
      auto dot_rows = [&](int a, int b) {
        long long d = 0;
        for (int k = 0; k < c; ++k) {
          bump(s);
          d += static_cast<long long>(by_var[p2v[a * c + k]]) *
               static_cast<long long>(by_var[p2v[b * c + k]]);
        }
        return d;
      };
      // Only pairs with the model row are constrained; check them as their
      // rows complete.
      std::vector<int> touched;
      for (int r = 0; r < spec_->rows; ++r) {
        for (int k = 0; k < c; ++k) {
          if (p2v[r * c + k] == just_assigned) {
            touched.push_back(r);
            break;
          }
        }
      }
      for (int r : touched) {
        if (!row_complete(r)) continue;
        if (r == 0) {
          for (int j = 1; j < spec_->rows; ++j) {
            if (row_complete(j) && dot_rows(0, j) != spec_->target) {
              return Verdict::Violated;
            }
          }
          break;
        }
        if (row_complete(0) && dot_rows(0, r) != spec_->target) {
          return Verdict::Violated;
        }
      }
      return Verdict::Unknown;
    }
    case Kind::AtMost1: {
      const int u = static_cast<int>(spec_->universe.size());
      const int nsets = len / u;
      int set_of = -1, elem_of = -1;
      for (int p = 0; p < len; ++p) {
        if (p2v[p] == just_assigned) {
          set_of = p / u;
          elem_of = p % u;
          break;
        }
      }
      if (set_of < 0) return Verdict::Unknown;
      auto ones_and_open = [&](int a, int& ones, int& open) {
        ones = open = 0;
        for (int e = 0; e < u; ++e) {
          bump(s);
          int pv = p2v[a * u + e];
          if (!assigned[pv]) ++open;
          else if (by_var[pv] == 1) ++ones;
        }
      };
      int ones, open;
      ones_and_open(set_of, ones, open);
      if (ones > spec_->cardinality || ones + open < spec_->cardinality) {
        return Verdict::Violated;
      }
      if (by_var[just_assigned] == 1 && elem_of >= 0) {
        // Another set sharing this element plus one more shared assigned 1
        // already forces an intersection of two.
        for (int b = 0; b < nsets; ++b) {
          if (b == set_of) continue;
          int pb = p2v[b * u + elem_of];
          if (!assigned[pb] || by_var[pb] != 1) continue;
          int shared = 0;
          for (int e = 0; e < u; ++e) {
            bump(s);
            int pa = p2v[set_of * u + e], pc = p2v[b * u + e];
            if (assigned[pa] && assigned[pc] && by_var[pa] == 1 &&
                by_var[pc] == 1) {
              ++shared;
            }
          }
          if (shared > 1) return Verdict::Violated;
        }
      }
      return Verdict::Unknown;
    }
    case Kind::CardMeta: {
      if (!assigned[p2v[0]]) return Verdict::Unknown;
      Value n0 = by_var[p2v[0]];
      int sat = 0, unsat = 0;
      const int total = static_cast<int>(children_.size());
      for (int ci = 0; ci < total; ++ci) {
        bool all = true;
        for (int cv : child_var_map_[ci]) {
          bump(s);
          if (!assigned[cv]) {
            all = false;
            break;
          }
        }
        if (!all) continue;
        if (child_complete(ci, by_var, s)) ++sat;
        else ++unsat;
      }
      if (sat > n0 || total - unsat < n0) return Verdict::Violated;
      return Verdict::Unknown;
    }
    case Kind::Cardpath: {
      if (!assigned[p2v[0]]) return Verdict::Unknown;
      Value n0 = by_var[p2v[0]];
      const int k = children_[0].num_vars();
      const int m = len - 1;
      const int windows = m - k + 1;
      int sat = 0, unsat = 0;
      for (int w = 0; w < windows; ++w) {
        bool all = true;
        for (int i = 0; i < k; ++i) {
          bump(s);
          if (!assigned[p2v[1 + w + i]]) {
            all = false;
            break;
          }
        }
        if (!all) continue;
        if (template_on_window(by_var, 1 + w, s)) ++sat;
        else ++unsat;
      }
      if (sat > n0 || windows - unsat < n0) return Verdict::Violated;
      return Verdict::Unknown;
    }
  }
  return Verdict::Unknown;
}

// ---------------------------------------------------------------------------
// evaluate
// ---------------------------------------------------------------------------

bool evaluate(const ConstraintSpec& spec, const Tuple& t, EvalStats& stats) {
  Checker ch(spec);
  std::vector<Value> by_var(ch.num_vars());
  for (int i = 0; i < ch.num_vars(); ++i) {
    auto it = t.find(ch.vars()[i]);
    if (it == t.end()) {
      throw MissingVariableError("tuple does not assign " + ch.vars()[i]);
    }
    by_var[i] = it->second;
  }
  return ch.complete(by_var, &stats);
}

bool evaluate(const ConstraintSpec& spec, const Tuple& t) {
  EvalStats stats;
  return evaluate(spec, t, stats);
}

}  // namespace gaclab
