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
#include "gaclab/io.hpp"

using namespace gaclab;

namespace {

Instance sample_instance(Kind kind) {
  Instance inst;
  ConstraintSpec& c = inst.constraint;
  c.kind = kind;
  switch (kind) {
    case Kind::Table:
      inst.variables = {"X", "Y"};
      inst.domains = {{1, 2}, {1, 2}};
      c.scope = {"X", "Y"};
      c.tuples = {{1, 2}, {2, 1}};
      break;
    case Kind::BinaryNetwork:
      inst.variables = {"A", "B"};
      inst.domains = {{0, 1}, {0, 1}};
      c.scope = {"A", "B"};
      c.relations = {{0, 1, {{0, 1}, {1, 0}}}};
      break;
    case Kind::ImpliesCnf:
      inst.variables = {"G", "x1", "x2"};
      inst.domains = {{0, 1}, {0, 1}, {0, 1}};
      c.scope = {"G", "x1", "x2"};
      c.cnf = {{1, -2}, {-1, 2}};
      break;
    case Kind::AllDifferent:
      inst.variables = {"X", "Y", "Z"};
      inst.domains = {{1, 2}, {1, 2}, {1, 2, 3}};
      c.scope = {"X", "Y", "Z"};
      break;
    case Kind::NValue:
      inst.variables = {"X1", "X2", "N"};
      inst.domains = {{1, 2}, {1, 2}, {1, 2}};
      c.scope = {"X1", "X2", "N"};
      break;
    case Kind::AmongConst:
      inst.variables = {"N", "X1", "X2"};
      inst.domains = {{0, 1, 2}, {1, 2, 3}, {1, 2, 3}};
      c.scope = {"N", "X1", "X2"};
      c.value_set = {1, 3};
      break;
    case Kind::AmongVar:
      inst.variables = {"N", "X1", "D1"};
      inst.domains = {{0, 1}, {1, 2}, {1, 2}};
      c.scope = {"N", "X1", "D1"};
      c.split = 1;
      break;
    case Kind::Common:
      inst.variables = {"N", "M", "X1", "Y1"};
      inst.domains = {{0, 1}, {0, 1}, {1, 2}, {1, 2}};
      c.scope = {"N", "M", "X1", "Y1"};
      c.split = 1;
      break;
    case Kind::Gcc:
      inst.variables = {"X1", "X2"};
      inst.domains = {{1, 2}, {1, 2}};
      c.scope = {"X1", "X2"};
      c.occ = {{1, {0, 1}}, {2, {1, 2}}};
      break;
    case Kind::GccVar:
      inst.variables = {"X1", "O1"};
      inst.domains = {{1, 2}, {0, 1}};
      c.scope = {"X1", "O1"};
      c.counted_values = {1};
      break;
    case Kind::Disjoint:
      inst.variables = {"X1", "Y1"};
      inst.domains = {{1, 2}, {1, 2}};
      c.scope = {"X1", "Y1"};
      c.split = 1;
      break;
    case Kind::ScalarProduct:
      inst.variables = {"a", "b", "c", "d"};
      inst.domains = {{0, 1}, {0, 1}, {0, 1}, {0, 1}};
      c.scope = {"a", "b", "c", "d"};
      c.rows = 2;
      c.target = 1;
      break;
    case Kind::AtMost1:
      inst.variables = {"s1a", "s1b", "s2a", "s2b"};
      inst.domains = {{0, 1}, {0, 1}, {0, 1}, {0, 1}};
      c.scope = {"s1a", "s1b", "s2a", "s2b"};
      c.universe = {"a", "b"};
      c.cardinality = 1;
      break;
    case Kind::CardMeta: {
      inst.variables = {"N", "X"};
      inst.domains = {{0, 1}, {1, 2}};
      c.scope = {"N", "X"};
      ConstraintSpec child;
      child.kind = Kind::Table;
      child.scope = {"X"};
      child.tuples = {{1}};
      c.children = {child};
      break;
    }
    case Kind::Cardpath: {
      inst.variables = {"N", "S1", "S2"};
      inst.domains = {{0, 1}, {0, 1}, {0, 1}};
      c.scope = {"N", "S1", "S2"};
      ConstraintSpec tpl;
      tpl.kind = Kind::Table;
      tpl.scope = {"a", "b"};
      tpl.tuples = {{0, 1}, {1, 0}};
      c.children = {tpl};
      break;
    }
  }
  return inst;
}

}  // namespace

TEST_CASE("every kind round-trips through JSON") {
  for (int i = 0; i <= static_cast<int>(Kind::Cardpath); ++i) {
    Kind kind = static_cast<Kind>(i);
    INFO("kind " << kind_name(kind));
    Instance inst = sample_instance(kind);
    REQUIRE_NOTHROW(validate_instance(inst));
    std::string text = canonical_instance(inst);
    Instance back = parse_instance(text);
    CHECK(back == inst);
    // Canonical form is a fixed point.
    CHECK(canonical_instance(back) == text);
  }
}

TEST_CASE("canonical form sorts domains") {
  Instance inst = sample_instance(Kind::Table);
  inst.domains[0] = {2, 1, 2};
  std::string text = canonical_instance(inst);
  Instance back = parse_instance(text);
  CHECK(back.domains[0] == Domain{1, 2});
}

TEST_CASE("parser rejects malformed input") {
  CHECK_THROWS_AS(parse_instance("{nope"), ParseError);
  CHECK_THROWS_AS(parse_instance("[]"), ParseError);
  CHECK_THROWS_AS(parse_instance(R"({"variables": []})"), ParseError);
  CHECK_THROWS_AS(
      parse_instance(
          R"({"variables": [{"id": "X", "domain": [1]}],
              "constraint": {"kind": "mystery", "scope": ["X"]}})"),
      ParseError);
  CHECK_THROWS_AS(
      parse_instance(
          R"({"variables": [{"id": "X", "domain": [1]}],
              "constraint": {"kind": "table", "scope": ["X"]}})"),
      ParseError);  // tuples missing
  CHECK_THROWS_AS(
      parse_instance(
          R"({"variables": [{"id": "X", "domain": ["a"]}],
              "constraint": {"kind": "allDifferent", "scope": ["X"]}})"),
      ParseError);
  // Well-formed JSON, semantically broken constraint.
  CHECK_THROWS_AS(
      parse_instance(
          R"({"variables": [{"id": "X", "domain": [1]}],
              "constraint": {"kind": "table", "scope": ["X", "Y"],
                             "tuples": []}})"),
      InvariantError);
}

TEST_CASE("gcc occurrence keys are integers") {
  Instance inst = sample_instance(Kind::Gcc);
  auto j = instance_to_json(inst);
  CHECK(j["constraint"]["occ"].contains("1"));
  CHECK_THROWS_AS(
      parse_instance(
          R"({"variables": [{"id": "X", "domain": [1]}],
              "constraint": {"kind": "gcc", "scope": ["X"],
                             "occ": {"one": [0, 1]}}})"),
      ParseError);
}

TEST_CASE("domain maps round-trip") {
  DomainMap m = {{"X", {1, 2}}, {"Y", {}}};
  auto j = domain_map_to_json(m);
  CHECK(domain_map_from_json(j) == m);
}

TEST_CASE("canonical output is key-sorted and compact") {
  Instance inst = sample_instance(Kind::AmongConst);
  std::string text = canonical_instance(inst);
  CHECK(text.find(' ') == std::string::npos);
  CHECK(text.find("\"constraint\"") < text.find("\"variables\""));
}
