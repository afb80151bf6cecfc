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

#ifndef GACLAB_CORE_HPP
#define GACLAB_CORE_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace gaclab {

using VarId = std::string;
using Value = int;

/// Domain values are kept sorted ascending with no duplicates.
using Domain = std::vector<Value>;
using DomainMap = std::map<VarId, Domain>;

/// An assignment of values to variables. Must cover a constraint's scope
/// when passed to evaluate(); extra entries are ignored.
using Tuple = std::map<VarId, Value>;

// ---------------------------------------------------------------------------
// Errors
// ---------------------------------------------------------------------------

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

class InvariantError : public Error {
 public:
  using Error::Error;
};

class MissingVariableError : public Error {
 public:
  using Error::Error;
};

class UnsupportedInstanceError : public Error {
 public:
  using Error::Error;
};

class ScaleLimitError : public Error {
 public:
  using Error::Error;
};

class BudgetExhaustedError : public Error {
 public:
  BudgetExhaustedError(long long explored, long long budget)
      : Error("search budget exhausted after " + std::to_string(explored) +
              " of " + std::to_string(budget) + " tuples"),
        explored_(explored),
        budget_(budget) {}
  long long explored() const { return explored_; }
  long long budget() const { return budget_; }

 private:
  long long explored_;
  long long budget_;
};

// ---------------------------------------------------------------------------
// Constraint catalog
// ---------------------------------------------------------------------------

enum class Kind {
  Table,
  BinaryNetwork,
  ImpliesCnf,
  AllDifferent,
  NValue,
  AmongConst,
  AmongVar,
  Common,
  Gcc,
  GccVar,
  Disjoint,
  ScalarProduct,
  AtMost1,
  CardMeta,
  Cardpath,
};

const char* kind_name(Kind k);
std::optional<Kind> kind_from_name(const std::string& name);

/// One binary relation inside a BinaryNetwork, given by two scope positions
/// and the allowed value pairs.
struct PairRelation {
  int i = 0;
  int j = 0;
  std::vector<std::pair<Value, Value>> allowed;
  bool operator==(const PairRelation&) const = default;
};

struct Interval {
  Value lo = 0;
  Value hi = 0;
  bool operator==(const Interval&) const = default;
};

/// A constraint over a scope of variables. Scope positions may repeat a
/// VarId; repeated positions always carry equal values in any tuple.
///
/// Field use by kind:
///   Table          tuples (positional rows)
///   BinaryNetwork  relations
///   ImpliesCnf     cnf; scope = [guard, x1..xn]
///   NValue         scope = [X1..Xn, N]
///   AmongConst     value_set; scope = [N, X1..Xn]
///   AmongVar       split = |X|; scope = [N, X.., D..]
///   Common         split = |X|; scope = [N, M, X.., Y..]
///   Gcc            occ (value -> occurrence interval); positions count, so
///                  a repeated variable contributes once per position
///   GccVar         counted_values; scope = [X.., O..] with |O| = |values|
///   Disjoint       split = |X|; scope = [X.., Y..]
///   ScalarProduct  rows, target; scope = row-major grid, cols = len/rows;
///                  row 1 is the distinguished model row and the checker
///                  requires dot(row1, rowj) == target for every j > 1
///   AtMost1        universe, cardinality; scope = set-major characteristic
///                  0/1 variables, one block of |universe| per set
///   CardMeta       children (each a full constraint over instance vars);
///                  scope = [N, each child-scope var at first appearance]
///   Cardpath       children = {template}; scope = [N, sequence...]; the
///                  template's scope is formal and its arity is the window
struct ConstraintSpec {
  Kind kind = Kind::Table;
  std::vector<VarId> scope;

  std::vector<std::vector<Value>> tuples;
  std::vector<PairRelation> relations;
  std::vector<std::vector<int>> cnf;
  std::vector<Value> value_set;
  int split = 0;
  std::map<Value, Interval> occ;
  std::vector<Value> counted_values;
  int rows = 0;
  long long target = 0;
  std::vector<std::string> universe;
  int cardinality = 0;
  std::vector<ConstraintSpec> children;

  bool operator==(const ConstraintSpec&) const = default;
};

/// Rough structural size of a spec: rows, pairs, literals, children sizes.
/// Used to bound checker work in tests.
long long spec_size(const ConstraintSpec& spec);

// ---------------------------------------------------------------------------
// Instance
// ---------------------------------------------------------------------------

struct Instance {
  std::vector<VarId> variables;
  std::vector<Domain> domains;  // parallel to variables
  ConstraintSpec constraint;

  int index_of(const VarId& id) const;
  const Domain& domain(const VarId& id) const;
  DomainMap domain_map() const;
  bool operator==(const Instance&) const = default;
};

/// Throws InvariantError when the instance is malformed: duplicate or empty
/// variable ids, unsorted domains, scope variables that are not declared,
/// or kind-specific shape problems (grid arity, universe blocks, window
/// arity, child scopes).
void validate_instance(const Instance& inst);

/// Validates a spec in isolation. Template scopes of Cardpath are formal
/// and are not resolved against any variable list.
void validate_spec(const ConstraintSpec& spec);

// ---------------------------------------------------------------------------
// Evaluation
// ---------------------------------------------------------------------------

struct EvalStats {
  long long steps = 0;
};

enum class Verdict { Unknown, Violated };

/// Positional checker for one constraint. Values are indexed by distinct
/// scope variable (first-appearance order), so repeated scope positions
/// read the same slot and repeat coherence holds by construction.
class Checker {
 public:
  explicit Checker(const ConstraintSpec& spec);

  int num_vars() const { return static_cast<int>(vars_.size()); }
  const std::vector<VarId>& vars() const { return vars_; }
  const std::vector<int>& pos_to_var() const { return pos_to_var_; }
  int var_index(const VarId& id) const;

  /// Full evaluation; every distinct scope variable must have a value.
  bool complete(std::span<const Value> by_var, EvalStats* stats = nullptr) const;

  /// Sound partial rejection: returns Violated only when no completion of
  /// the assigned prefix can satisfy the constraint. `just_assigned` is the
  /// distinct-variable index set last, letting kinds limit their scan.
  Verdict partial(std::span<const Value> by_var, std::span<const char> assigned,
                  int just_assigned, EvalStats* stats = nullptr) const;

 private:
  const ConstraintSpec* spec_;
  std::vector<VarId> vars_;
  std::vector<int> pos_to_var_;
  bool has_repeat_ = false;

  // compiled payloads
  std::set<std::vector<Value>> table_;
  std::vector<std::set<std::pair<Value, Value>>> rel_sets_;
  std::vector<std::vector<int>> var_relations_;  // var -> relation indices
  std::vector<Checker> children_;
  std::vector<std::vector<int>> child_var_map_;  // child var -> my var
  int sp_cols_ = 0;

  bool check_table(std::span<const Value> v, EvalStats* s) const;
  bool check_binary_network(std::span<const Value> v, EvalStats* s) const;
  bool check_implies_cnf(std::span<const Value> v, EvalStats* s) const;
  bool check_nvalue(std::span<const Value> v, EvalStats* s) const;
  bool check_among_const(std::span<const Value> v, EvalStats* s) const;
  bool check_among_var(std::span<const Value> v, EvalStats* s) const;
  bool check_common(std::span<const Value> v, EvalStats* s) const;
  bool check_gcc(std::span<const Value> v, EvalStats* s) const;
  bool check_gcc_var(std::span<const Value> v, EvalStats* s) const;
  bool check_disjoint(std::span<const Value> v, EvalStats* s) const;
  bool check_scalar_product(std::span<const Value> v, EvalStats* s) const;
  bool check_atmost1(std::span<const Value> v, EvalStats* s) const;
  bool check_card_meta(std::span<const Value> v, EvalStats* s) const;
  bool check_cardpath(std::span<const Value> v, EvalStats* s) const;

  bool child_complete(int ci, std::span<const Value> by_var, EvalStats* s) const;
  bool template_on_window(std::span<const Value> by_var, int start,
                          EvalStats* s) const;
};

/// Evaluates the constraint on a tuple. Throws MissingVariableError when the
/// tuple does not cover every distinct scope variable.
bool evaluate(const ConstraintSpec& spec, const Tuple& t);
bool evaluate(const ConstraintSpec& spec, const Tuple& t, EvalStats& stats);

}  // namespace gaclab

#endif  // GACLAB_CORE_HPP
