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

#include "gaclab/engine.hpp"

#include <algorithm>

namespace gaclab {

namespace {

// One depth-first seeker over the distinct scope variables of a constraint.
// The placement counter is shared across every seek a question performs, so
// the budget caps the question as a whole.
class Seeker {
 public:
  Seeker(const Instance& inst, const SearchBudget& budget, long long& explored)
      : checker_(inst.constraint), budget_(budget), explored_(explored) {
    domains_.reserve(checker_.num_vars());
    for (const auto& id : checker_.vars()) {
      domains_.push_back(&inst.domain(id));
    }
  }

  const Checker& checker() const { return checker_; }

  /// Finds a satisfying tuple over the distinct scope variables, optionally
  /// with one variable pinned to a value. Returns values by distinct-var
  /// index, or nullopt when none exists within the domains.
  std::optional<std::vector<Value>> seek(int pin_var = -1, Value pin_value = 0) {
    const int n = checker_.num_vars();
    by_var_.assign(n, 0);
    assigned_.assign(n, 0);
    if (pin_var >= 0) {
      place();
      by_var_[pin_var] = pin_value;
      assigned_[pin_var] = 1;
      if (checker_.partial(by_var_, assigned_, pin_var) == Verdict::Violated) {
        return std::nullopt;
      }
    }
    if (dfs(0, pin_var)) return by_var_;
    return std::nullopt;
  }

 private:
  void place() {
    if (explored_ >= budget_.max_tuples_explored) {
      throw BudgetExhaustedError(explored_, budget_.max_tuples_explored);
    }
    ++explored_;
  }

  bool dfs(int var, int pin_var) {
    const int n = checker_.num_vars();
    while (var < n && var == pin_var) ++var;
    if (var == n) return checker_.complete(by_var_);
    for (Value v : *domains_[var]) {
      place();
      by_var_[var] = v;
      assigned_[var] = 1;
      if (checker_.partial(by_var_, assigned_, var) != Verdict::Violated) {
        int next = var + 1;
        if (dfs(next, pin_var)) return true;
      }
      assigned_[var] = 0;
    }
    return false;
  }

  Checker checker_;
  std::vector<const Domain*> domains_;
  SearchBudget budget_;
  long long& explored_;
  std::vector<Value> by_var_;
  std::vector<char> assigned_;
};

Tuple to_tuple(const Checker& ch, const std::vector<Value>& by_var) {
  Tuple t;
  for (int i = 0; i < ch.num_vars(); ++i) t[ch.vars()[i]] = by_var[i];
  return t;
}

bool any_scope_domain_empty(const Instance& inst, const Checker& ch) {
  for (const auto& id : ch.vars()) {
    if (inst.domain(id).empty()) return true;
  }
  return false;
}

bool all_scope_domains_empty(const Instance& inst, const Checker& ch) {
  for (const auto& id : ch.vars()) {
    if (!inst.domain(id).empty()) return false;
  }
  return true;
}

// Filters scope domains to supported values. Every satisfying tuple found
// witnesses a value for each scope variable, so successful seeks are reused
// instead of repeated.
DomainMap filter_scope_domains(const Instance& inst, Seeker& seeker) {
  const Checker& ch = seeker.checker();
  const int n = ch.num_vars();
  std::vector<std::set<Value>> kept(n);
  for (int x = 0; x < n; ++x) {
    for (Value v : inst.domain(ch.vars()[x])) {
      if (kept[x].count(v)) continue;
      auto found = seeker.seek(x, v);
      if (found) {
        for (int y = 0; y < n; ++y) kept[y].insert((*found)[y]);
      }
    }
  }
  DomainMap out = inst.domain_map();
  for (int x = 0; x < n; ++x) {
    out[ch.vars()[x]] = Domain(kept[x].begin(), kept[x].end());
  }
  return out;
}

DomainMap effective_candidate(const Instance& inst, const DomainMap& candidate) {
  DomainMap full = inst.domain_map();
  for (const auto& [id, dom] : candidate) {
    if (inst.index_of(id) < 0) {
      throw MissingVariableError("candidate names unknown variable " + id);
    }
    Domain d = dom;
    std::sort(d.begin(), d.end());
    d.erase(std::unique(d.begin(), d.end()), d.end());
    full[id] = std::move(d);
  }
  return full;
}

}  // namespace

QuestionResult gac_support(const Instance& inst, const VarId& x, Value v,
                           const SearchBudget& budget) {
  validate_instance(inst);
  QuestionResult res;
  Seeker seeker(inst, budget, res.tuples_explored);
  int xi = seeker.checker().var_index(x);
  if (xi < 0) {
    throw MissingVariableError("variable " + x + " is not in the scope");
  }
  const Domain& dx = inst.domain(x);
  if (!std::binary_search(dx.begin(), dx.end(), v)) {
    res.answer = false;
    return res;
  }
  auto found = seeker.seek(xi, v);
  res.answer = found.has_value();
  if (found) res.witness = to_tuple(seeker.checker(), *found);
  return res;
}

QuestionResult is_it_gac(const Instance& inst, const SearchBudget& budget) {
  validate_instance(inst);
  QuestionResult res;
  Seeker seeker(inst, budget, res.tuples_explored);
  const Checker& ch = seeker.checker();
  if (all_scope_domains_empty(inst, ch)) {
    res.answer = true;  // no value left to support
    return res;
  }
  if (any_scope_domain_empty(inst, ch)) {
    res.answer = false;  // values remain, none can extend over the empty one
    return res;
  }
  const int n = ch.num_vars();
  std::vector<std::set<Value>> witnessed(n);
  for (int x = 0; x < n; ++x) {
    for (Value v : inst.domain(ch.vars()[x])) {
      if (witnessed[x].count(v)) continue;
      auto found = seeker.seek(x, v);
      if (!found) {
        res.answer = false;
        return res;
      }
      for (int y = 0; y < n; ++y) witnessed[y].insert((*found)[y]);
    }
  }
  res.answer = true;
  return res;
}

QuestionResult no_gac_wipeout(const Instance& inst, const SearchBudget& budget) {
  validate_instance(inst);
  QuestionResult res;
  Seeker seeker(inst, budget, res.tuples_explored);
  auto found = seeker.seek();
  res.answer = found.has_value();
  if (found) res.witness = to_tuple(seeker.checker(), *found);
  return res;
}

QuestionResult gac_domain(const Instance& inst, const SearchBudget& budget) {
  validate_instance(inst);
  QuestionResult res;
  Seeker seeker(inst, budget, res.tuples_explored);
  DomainMap out = filter_scope_domains(inst, seeker);
  res.answer = true;
  for (const auto& id : seeker.checker().vars()) {
    if (out[id].empty()) res.answer = false;
  }
  res.domain_witness = std::move(out);
  return res;
}

QuestionResult max_gac(const Instance& inst, const DomainMap& candidate,
                       const SearchBudget& budget) {
  validate_instance(inst);
  QuestionResult res;
  Seeker seeker(inst, budget, res.tuples_explored);
  DomainMap maximal = filter_scope_domains(inst, seeker);
  res.answer = maximal == effective_candidate(inst, candidate);
  res.domain_witness = std::move(maximal);
  return res;
}

// ---------------------------------------------------------------------------
// Reductions
// ---------------------------------------------------------------------------

QuestionResult gac_support_via_wipeout(const Instance& inst, const VarId& x,
                                       Value v, const SearchBudget& budget) {
  validate_instance(inst);
  int xi = inst.index_of(x);
  if (xi < 0 || Checker(inst.constraint).var_index(x) < 0) {
    throw MissingVariableError("variable " + x + " is not in the scope");
  }
  const Domain& dx = inst.domains[xi];
  if (!std::binary_search(dx.begin(), dx.end(), v)) {
    QuestionResult res;
    res.answer = false;
    return res;
  }
  // (x, v) has a support exactly when pinning D(x) = {v} leaves a solution.
  Instance restricted = inst;
  restricted.domains[xi] = {v};
  return no_gac_wipeout(restricted, budget);
}

QuestionResult no_gac_wipeout_via_support(const Instance& inst,
                                          const SearchBudget& budget) {
  validate_instance(inst);
  QuestionResult res;
  Checker ch(inst.constraint);
  // Any satisfying tuple supports some value of the first variable, so the
  // disjunction over its values decides wipeout.
  const VarId& x = ch.vars()[0];
  for (Value v : inst.domain(x)) {
    SearchBudget remaining = budget;
    remaining.max_tuples_explored -= res.tuples_explored;
    QuestionResult sub;
    try {
      sub = gac_support(inst, x, v, remaining);
    } catch (const BudgetExhaustedError& e) {
      throw BudgetExhaustedError(res.tuples_explored + e.explored(),
                                 budget.max_tuples_explored);
    }
    res.tuples_explored += sub.tuples_explored;
    if (sub.answer) {
      res.answer = true;
      res.witness = sub.witness;
      return res;
    }
  }
  res.answer = false;
  return res;
}

QuestionResult gac_support_via_domain(const Instance& inst, const VarId& x,
                                      Value v, const SearchBudget& budget) {
  validate_instance(inst);
  if (Checker(inst.constraint).var_index(x) < 0) {
    throw MissingVariableError("variable " + x + " is not in the scope");
  }
  QuestionResult dom = gac_domain(inst, budget);
  QuestionResult res;
  res.tuples_explored = dom.tuples_explored;
  const Domain& kept = (*dom.domain_witness)[x];
  res.answer = std::binary_search(kept.begin(), kept.end(), v);
  return res;
}

QuestionResult gac_domain_via_support(const Instance& inst,
                                      const SearchBudget& budget) {
  validate_instance(inst);
  QuestionResult res;
  Checker ch(inst.constraint);
  DomainMap out = inst.domain_map();
  for (const auto& id : ch.vars()) {
    Domain kept;
    for (Value v : inst.domain(id)) {
      SearchBudget remaining = budget;
      remaining.max_tuples_explored -= res.tuples_explored;
      QuestionResult sub;
      try {
        sub = gac_support(inst, id, v, remaining);
      } catch (const BudgetExhaustedError& e) {
        throw BudgetExhaustedError(res.tuples_explored + e.explored(),
                                   budget.max_tuples_explored);
      }
      res.tuples_explored += sub.tuples_explored;
      if (sub.answer) kept.push_back(v);
    }
    out[id] = std::move(kept);
  }
  res.answer = true;
  for (const auto& id : ch.vars()) {
    if (out[id].empty()) res.answer = false;
  }
  res.domain_witness = std::move(out);
  return res;
}

QuestionResult max_gac_via_support(const Instance& inst,
                                   const DomainMap& candidate,
                                   const SearchBudget& budget) {
  validate_instance(inst);
  QuestionResult res;
  Checker ch(inst.constraint);
  DomainMap full = effective_candidate(inst, candidate);
  // The maximal arc-consistent subdomain is exactly the set of supported
  // values, and a support's components are themselves supported. So the
  // candidate matches it iff membership agrees with gac-support everywhere.
  for (const auto& [id, dom] : full) {
    const Domain* orig = &inst.domains[inst.index_of(id)];
    bool in_scope = ch.var_index(id) >= 0;
    for (Value v : dom) {
      if (!std::binary_search(orig->begin(), orig->end(), v)) {
        res.answer = false;  // candidate reaches outside the domains
        return res;
      }
    }
    if (!in_scope) {
      if (dom != *orig) {
        res.answer = false;  // non-scope domains must be untouched
        return res;
      }
      continue;
    }
    for (Value v : *orig) {
      SearchBudget remaining = budget;
      remaining.max_tuples_explored -= res.tuples_explored;
      QuestionResult sub;
      try {
        sub = gac_support(inst, id, v, remaining);
      } catch (const BudgetExhaustedError& e) {
        throw BudgetExhaustedError(res.tuples_explored + e.explored(),
                                   budget.max_tuples_explored);
      }
      res.tuples_explored += sub.tuples_explored;
      bool in_candidate = std::binary_search(dom.begin(), dom.end(), v);
      if (sub.answer != in_candidate) {
        res.answer = false;
        return res;
      }
    }
  }
  res.answer = true;
  return res;
}

QuestionResult is_it_gac_via_maxgac(const Instance& inst,
                                    const SearchBudget& budget) {
  validate_instance(inst);
  // The domains are arc consistent iff they are themselves the maximal
  // arc-consistent subdomain.
  return max_gac(inst, inst.domain_map(), budget);
}

}  // namespace gaclab
