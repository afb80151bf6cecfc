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

#include <catch2/catch_amalgamated.hpp>

#include "gaclab/core.hpp"

using namespace gaclab;

namespace {

ConstraintSpec table_spec(std::vector<VarId> scope,
                          std::vector<std::vector<Value>> rows) {
  ConstraintSpec s;
  s.kind = Kind::Table;
  s.scope = std::move(scope);
  s.tuples = std::move(rows);
  return s;
}

}  // namespace

TEST_CASE("kind names round-trip") {
  for (int i = 0; i <= static_cast<int>(Kind::Cardpath); ++i) {
    Kind k = static_cast<Kind>(i);
    auto back = kind_from_name(kind_name(k));
    REQUIRE(back.has_value());
    CHECK(*back == k);
  }
  CHECK_FALSE(kind_from_name("noSuchKind").has_value());
}

TEST_CASE("table evaluation") {
  auto s = table_spec({"X", "Y"}, {{1, 2}, {2, 1}});
  CHECK(evaluate(s, {{"X", 1}, {"Y", 2}}));
  CHECK(evaluate(s, {{"X", 2}, {"Y", 1}}));
  CHECK_FALSE(evaluate(s, {{"X", 1}, {"Y", 1}}));
  CHECK_THROWS_AS(evaluate(s, {{"X", 1}}), MissingVariableError);
}

TEST_CASE("table with repeated scope variable") {
  // Row (2,3) needs X to take two values at once, so only (1,1) is live.
  auto s = table_spec({"X", "X"}, {{1, 1}, {2, 3}});
  CHECK(evaluate(s, {{"X", 1}}));
  CHECK_FALSE(evaluate(s, {{"X", 2}}));
  CHECK_FALSE(evaluate(s, {{"X", 3}}));
}

TEST_CASE("binary network evaluation") {
  ConstraintSpec s;
  s.kind = Kind::BinaryNetwork;
  s.scope = {"A", "B", "C"};
  s.relations = {{0, 1, {{1, 2}}}, {1, 2, {{2, 3}, {2, 4}}}};
  CHECK(evaluate(s, {{"A", 1}, {"B", 2}, {"C", 3}}));
  CHECK(evaluate(s, {{"A", 1}, {"B", 2}, {"C", 4}}));
  CHECK_FALSE(evaluate(s, {{"A", 1}, {"B", 2}, {"C", 5}}));
  CHECK_FALSE(evaluate(s, {{"A", 2}, {"B", 2}, {"C", 3}}));
}

TEST_CASE("guarded cnf evaluation") {
  ConstraintSpec s;
  s.kind = Kind::ImpliesCnf;
  s.scope = {"G", "x1", "x2"};
  s.cnf = {{1, -2}};
  CHECK(evaluate(s, {{"G", 0}, {"x1", 0}, {"x2", 1}}));
  CHECK_FALSE(evaluate(s, {{"G", 1}, {"x1", 0}, {"x2", 1}}));
  CHECK(evaluate(s, {{"G", 1}, {"x1", 1}, {"x2", 1}}));
  CHECK(evaluate(s, {{"G", 1}, {"x1", 0}, {"x2", 0}}));
}

TEST_CASE("alldifferent evaluation") {
  ConstraintSpec s;
  s.kind = Kind::AllDifferent;
  s.scope = {"X", "Y", "Z"};
  CHECK(evaluate(s, {{"X", 1}, {"Y", 2}, {"Z", 3}}));
  CHECK_FALSE(evaluate(s, {{"X", 1}, {"Y", 1}, {"Z", 3}}));

  ConstraintSpec rep;
  rep.kind = Kind::AllDifferent;
  rep.scope = {"X", "Y", "X"};
  // X occupies two positions; they always clash.
  CHECK_FALSE(evaluate(rep, {{"X", 1}, {"Y", 2}}));
}

TEST_CASE("nvalue evaluation") {
  ConstraintSpec s;
  s.kind = Kind::NValue;
  s.scope = {"X1", "X2", "X3", "N"};
  CHECK(evaluate(s, {{"X1", 1}, {"X2", 1}, {"X3", 2}, {"N", 2}}));
  CHECK_FALSE(evaluate(s, {{"X1", 1}, {"X2", 1}, {"X3", 2}, {"N", 3}}));
}

TEST_CASE("among with constant set") {
  ConstraintSpec s;
  s.kind = Kind::AmongConst;
  s.scope = {"N", "X1", "X2"};
  s.value_set = {3, 1};  // order must not matter
  CHECK(evaluate(s, {{"N", 1}, {"X1", 1}, {"X2", 2}}));
  CHECK(evaluate(s, {{"N", 2}, {"X1", 1}, {"X2", 3}}));
  CHECK_FALSE(evaluate(s, {{"N", 2}, {"X1", 1}, {"X2", 2}}));
}

TEST_CASE("among with variable set") {
  ConstraintSpec s;
  s.kind = Kind::AmongVar;
  s.scope = {"N", "X1", "X2", "D1"};
  s.split = 2;
  CHECK(evaluate(s, {{"N", 1}, {"X1", 5}, {"X2", 7}, {"D1", 5}}));
  CHECK(evaluate(s, {{"N", 0}, {"X1", 5}, {"X2", 7}, {"D1", 6}}));
  CHECK_FALSE(evaluate(s, {{"N", 2}, {"X1", 5}, {"X2", 7}, {"D1", 5}}));
}

TEST_CASE("common evaluation") {
  ConstraintSpec s;
  s.kind = Kind::Common;
  s.scope = {"N", "M", "X1", "X2", "Y1"};
  s.split = 2;
  // X = (2, 3), Y = (3): one X position lands in Y, one Y position in X.
  CHECK(evaluate(s, {{"N", 1}, {"M", 1}, {"X1", 2}, {"X2", 3}, {"Y1", 3}}));
  CHECK_FALSE(
      evaluate(s, {{"N", 0}, {"M", 1}, {"X1", 2}, {"X2", 3}, {"Y1", 3}}));
}

TEST_CASE("gcc evaluation counts positions") {
  ConstraintSpec s;
  s.kind = Kind::Gcc;
  s.scope = {"X1", "X2", "X3"};
  s.occ = {{1, {1, 2}}, {2, {0, 1}}};
  CHECK(evaluate(s, {{"X1", 1}, {"X2", 1}, {"X3", 2}}));
  CHECK_FALSE(evaluate(s, {{"X1", 2}, {"X2", 2}, {"X3", 2}}));

  ConstraintSpec rep;
  rep.kind = Kind::Gcc;
  rep.scope = {"X", "X", "Y"};
  rep.occ = {{1, {2, 2}}};
  CHECK(evaluate(rep, {{"X", 1}, {"Y", 3}}));
  CHECK_FALSE(evaluate(rep, {{"X", 3}, {"Y", 1}}));
}

TEST_CASE("gcc with count variables") {
  ConstraintSpec s;
  s.kind = Kind::GccVar;
  s.scope = {"X1", "X2", "O1", "O2"};
  s.counted_values = {1, 2};
  CHECK(evaluate(s, {{"X1", 1}, {"X2", 2}, {"O1", 1}, {"O2", 1}}));
  CHECK_FALSE(evaluate(s, {{"X1", 1}, {"X2", 1}, {"O1", 1}, {"O2", 0}}));
  CHECK(evaluate(s, {{"X1", 1}, {"X2", 1}, {"O1", 2}, {"O2", 0}}));
}

TEST_CASE("disjoint evaluation") {
  ConstraintSpec s;
  s.kind = Kind::Disjoint;
  s.scope = {"X1", "X2", "Y1"};
  s.split = 2;
  CHECK(evaluate(s, {{"X1", 1}, {"X2", 2}, {"Y1", 3}}));
  CHECK_FALSE(evaluate(s, {{"X1", 1}, {"X2", 2}, {"Y1", 2}}));
}

TEST_CASE("scalar product checks the model row only") {
  ConstraintSpec s;
  s.kind = Kind::ScalarProduct;
  s.scope = {"a", "b", "c", "d", "e", "f"};
  s.rows = 3;
  s.target = 3;
  // rows: (1,0), (3,9), (3,1). Row pairs with the first row hit the target;
  // the (row2, row3) product does not and must not be checked.
  Tuple t = {{"a", 1}, {"b", 0}, {"c", 3}, {"d", 9}, {"e", 3}, {"f", 1}};
  CHECK(evaluate(s, t));
  t["d"] = 1;  // dot(row1, row2) becomes 3*1 + 0 = 3, still fine
  CHECK(evaluate(s, t));
  t["c"] = 4;  // now 4 != 3
  CHECK_FALSE(evaluate(s, t));
}

TEST_CASE("atmost1 evaluation") {
  ConstraintSpec s;
  s.kind = Kind::AtMost1;
  s.scope = {"s1a", "s1b", "s1c", "s2a", "s2b", "s2c"};
  s.universe = {"a", "b", "c"};
  s.cardinality = 2;
  CHECK(evaluate(s, {{"s1a", 1}, {"s1b", 1}, {"s1c", 0},
                     {"s2a", 0}, {"s2b", 1}, {"s2c", 1}}));
  // Same pair of sets overlapping in two elements.
  CHECK_FALSE(evaluate(s, {{"s1a", 1}, {"s1b", 1}, {"s1c", 0},
                           {"s2a", 1}, {"s2b", 1}, {"s2c", 0}}));
  // Wrong cardinality.
  CHECK_FALSE(evaluate(s, {{"s1a", 1}, {"s1b", 0}, {"s1c", 0},
                           {"s2a", 0}, {"s2b", 1}, {"s2c", 1}}));
}

TEST_CASE("card meta constraint counts satisfied children") {
  ConstraintSpec s;
  s.kind = Kind::CardMeta;
  s.scope = {"N", "X", "Y"};
  s.children = {table_spec({"X"}, {{1}}), table_spec({"Y"}, {{2}})};
  CHECK(evaluate(s, {{"N", 1}, {"X", 1}, {"Y", 3}}));
  CHECK(evaluate(s, {{"N", 2}, {"X", 1}, {"Y", 2}}));
  CHECK(evaluate(s, {{"N", 0}, {"X", 0}, {"Y", 0}}));
  CHECK_FALSE(evaluate(s, {{"N", 2}, {"X", 1}, {"Y", 3}}));
}

TEST_CASE("cardpath counts sliding windows") {
  ConstraintSpec s;
  s.kind = Kind::Cardpath;
  s.scope = {"N", "S1", "S2", "S3"};
  s.children = {table_spec({"a", "b"}, {{0, 1}, {1, 0}})};
  CHECK(evaluate(s, {{"N", 2}, {"S1", 0}, {"S2", 1}, {"S3", 0}}));
  CHECK(evaluate(s, {{"N", 0}, {"S1", 1}, {"S2", 1}, {"S3", 1}}));
  CHECK(evaluate(s, {{"N", 1}, {"S1", 0}, {"S2", 0}, {"S3", 1}}));
  CHECK_FALSE(evaluate(s, {{"N", 2}, {"S1", 0}, {"S2", 0}, {"S3", 1}}));
}

TEST_CASE("validate_instance rejects malformed shapes") {
  Instance inst;
  inst.variables = {"X", "Y"};
  inst.domains = {{1, 2}, {1, 2}};
  inst.constraint = table_spec({"X", "Y"}, {{1, 2}});
  REQUIRE_NOTHROW(validate_instance(inst));

  SECTION("duplicate variable") {
    inst.variables = {"X", "X"};
    CHECK_THROWS_AS(validate_instance(inst), InvariantError);
  }
  SECTION("unsorted domain") {
    inst.domains[0] = {2, 1};
    CHECK_THROWS_AS(validate_instance(inst), InvariantError);
  }
  SECTION("undeclared scope variable") {
    inst.constraint.scope = {"X", "Z"};
    CHECK_THROWS_AS(validate_instance(inst), InvariantError);
  }
  SECTION("table arity mismatch") {
    inst.constraint.tuples = {{1, 2, 3}};
    CHECK_THROWS_AS(validate_instance(inst), InvariantError);
  }
  SECTION("empty scope") {
    inst.constraint.scope.clear();
    CHECK_THROWS_AS(validate_instance(inst), InvariantError);
  }
}

TEST_CASE("validate_spec kind-specific shapes") {
  SECTION("grid must divide") {
    ConstraintSpec s;
    s.kind = Kind::ScalarProduct;
    s.scope = {"a", "b", "c"};
    s.rows = 2;
    CHECK_THROWS_AS(validate_spec(s), InvariantError);
  }
  SECTION("universe blocks must tile the scope") {
    ConstraintSpec s;
    s.kind = Kind::AtMost1;
    s.scope = {"a", "b", "c"};
    s.universe = {"u", "v"};
    CHECK_THROWS_AS(validate_spec(s), InvariantError);
  }
  SECTION("window arity bounded by sequence") {
    ConstraintSpec s;
    s.kind = Kind::Cardpath;
    s.scope = {"N", "S1"};
    s.children = {table_spec({"a", "b"}, {})};
    CHECK_THROWS_AS(validate_spec(s), InvariantError);
  }
  SECTION("child scope inside meta scope") {
    ConstraintSpec s;
    s.kind = Kind::CardMeta;
    s.scope = {"N", "X"};
    s.children = {table_spec({"Z"}, {{1}})};
    CHECK_THROWS_AS(validate_spec(s), InvariantError);
  }
}

TEST_CASE("partial verdicts are definitive rejections") {
  SECTION("table prefix with no matching row") {
    auto s = table_spec({"X", "Y"}, {{1, 2}, {2, 1}});
    Checker ch(s);
    std::vector<Value> by_var = {3, 0};
    std::vector<char> assigned = {1, 0};
    CHECK(ch.partial(by_var, assigned, 0) == Verdict::Violated);
    by_var[0] = 1;
    CHECK(ch.partial(by_var, assigned, 0) == Verdict::Unknown);
  }
  SECTION("alldifferent duplicate") {
    ConstraintSpec s;
    s.kind = Kind::AllDifferent;
    s.scope = {"X", "Y", "Z"};
    Checker ch(s);
    std::vector<Value> by_var = {4, 4, 0};
    std::vector<char> assigned = {1, 1, 0};
    CHECK(ch.partial(by_var, assigned, 1) == Verdict::Violated);
    by_var[1] = 5;
    CHECK(ch.partial(by_var, assigned, 1) == Verdict::Unknown);
  }
  SECTION("gcc overshoot and unfillable deficit") {
    ConstraintSpec s;
    s.kind = Kind::Gcc;
    s.scope = {"X1", "X2", "X3"};
    s.occ = {{7, {0, 1}}, {8, {2, 3}}};
    Checker ch(s);
    std::vector<Value> by_var = {7, 7, 0};
    std::vector<char> assigned = {1, 1, 0};
    CHECK(ch.partial(by_var, assigned, 1) == Verdict::Violated);
    by_var[1] = 9;  // one open slot cannot supply two 8s
    CHECK(ch.partial(by_var, assigned, 1) == Verdict::Violated);
    by_var[0] = 8;
    by_var[1] = 8;
    CHECK(ch.partial(by_var, assigned, 1) == Verdict::Unknown);
  }
}

TEST_CASE("spec_size grows with payload") {
  auto small = table_spec({"X", "Y"}, {{1, 2}});
  auto large = table_spec({"X", "Y"}, {{1, 2}, {2, 1}, {2, 2}});
  CHECK(spec_size(small) < spec_size(large));
  ConstraintSpec meta;
  meta.kind = Kind::CardMeta;
  meta.scope = {"N", "X", "Y"};
  meta.children = {small, large};
  CHECK(spec_size(meta) > spec_size(small) + spec_size(large));
}
