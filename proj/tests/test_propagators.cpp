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
#include <random>

#include "gaclab/core.hpp"
#include "gaclab/engine.hpp"
#include "gaclab/propagators.hpp"

using namespace gaclab;

namespace {

Instance alldiff(std::vector<Domain> domains) {
  Instance inst;
  for (size_t i = 0; i < domains.size(); ++i) {
    inst.variables.push_back("X" + std::to_string(i + 1));
    inst.domains.push_back(domains[i]);
    inst.constraint.scope.push_back(inst.variables.back());
  }
  inst.constraint.kind = Kind::AllDifferent;
  return inst;
}

void check_against_engine(const Instance& inst,
                          const PropagationOutcome& got) {
  auto ref = gac_domain(inst);
  INFO(kind_name(inst.constraint.kind));
  CHECK(got.domains == *ref.domain_witness);
  CHECK(got.wipeout == !ref.answer);
  // Removed pairs are exactly the difference, sorted.
  std::vector<std::pair<VarId, Value>> expect;
  for (const auto& [id, dom] : *ref.domain_witness) {
    for (Value v : inst.domain(id)) {
      if (!std::binary_search(dom.begin(), dom.end(), v)) {
        expect.emplace_back(id, v);
      }
    }
  }
  std::sort(expect.begin(), expect.end());
  CHECK(got.removed == expect);
}

}  // namespace

TEST_CASE("alldifferent prunes the hall-interval leftovers") {
  Instance inst = alldiff({{1, 2}, {1, 2}, {1, 2, 3}});
  auto out = alldifferent_gac(inst);
  CHECK_FALSE(out.wipeout);
  CHECK(out.domains.at("X1") == Domain{1, 2});
  CHECK(out.domains.at("X2") == Domain{1, 2});
  CHECK(out.domains.at("X3") == Domain{3});
  CHECK(out.removed ==
        std::vector<std::pair<VarId, Value>>{{"X3", 1}, {"X3", 2}});
}

TEST_CASE("alldifferent pigeonhole wipes out") {
  Instance inst = alldiff({{1, 2}, {1, 2}, {1, 2}});
  auto out = alldifferent_gac(inst);
  CHECK(out.wipeout);
  for (const auto& id : inst.variables) {
    CHECK(out.domains.at(id).empty());
  }
}

TEST_CASE("alldifferent with a repeated variable is a wipeout, not an error") {
  Instance inst = alldiff({{1, 2}, {1, 2, 3}});
  inst.constraint.scope = {"X1", "X2", "X1"};
  auto out = alldifferent_gac(inst);
  CHECK(out.wipeout);
  CHECK(out.domains.at("X1").empty());
  CHECK(out.domains.at("X2").empty());
  check_against_engine(inst, out);
}

TEST_CASE("alldifferent keeps free values reachable by alternating paths") {
  // X1 in {1}, X2 in {1,2}: value 1 is taken, X2 keeps 2 only... but an
  // extra value frees things up again.
  Instance tight = alldiff({{1}, {1, 2}});
  auto out = alldifferent_gac(tight);
  CHECK(out.domains.at("X2") == Domain{2});

  Instance loose = alldiff({{1, 3}, {1, 2}});
  out = alldifferent_gac(loose);
  CHECK(out.domains.at("X1") == Domain{1, 3});
  CHECK(out.domains.at("X2") == Domain{1, 2});
}

TEST_CASE("alldifferent differential against the generic engine") {
  std::mt19937 rng(404);
  auto pick = [&](int lo, int hi) {
    return std::uniform_int_distribution<int>(lo, hi)(rng);
  };
  for (int it = 0; it < 150; ++it) {
    int n = pick(1, 6);
    std::vector<Domain> doms(n);
    for (auto& d : doms) {
      for (int v = 1; v <= 7; ++v) {
        if (pick(0, 2) == 0) d.push_back(v);
      }
    }
    Instance inst = alldiff(doms);
    check_against_engine(inst, alldifferent_gac(inst));
  }
}

TEST_CASE("among keeps count-feasible values") {
  Instance inst;
  inst.variables = {"N", "X1", "X2"};
  inst.domains = {{2}, {1, 2}, {3, 4}};
  inst.constraint.kind = Kind::AmongConst;
  inst.constraint.scope = {"N", "X1", "X2"};
  inst.constraint.value_set = {1, 3};
  auto out = among_const_gac(inst);
  CHECK_FALSE(out.wipeout);
  CHECK(out.domains.at("N") == Domain{2});
  CHECK(out.domains.at("X1") == Domain{1});
  CHECK(out.domains.at("X2") == Domain{3});
}

TEST_CASE("among narrows the counter to the feasible interval") {
  Instance inst;
  inst.variables = {"N", "X1", "X2"};
  inst.domains = {{0, 1, 2, 3}, {1, 5}, {1, 2}};
  inst.constraint.kind = Kind::AmongConst;
  inst.constraint.scope = {"N", "X1", "X2"};
  inst.constraint.value_set = {1};
  auto out = among_const_gac(inst);
  CHECK(out.domains.at("N") == Domain{0, 1, 2});
  check_against_engine(inst, out);
}

TEST_CASE("among rejects repeated scope variables") {
  Instance inst;
  inst.variables = {"N", "X1"};
  inst.domains = {{0, 1}, {1, 2}};
  inst.constraint.kind = Kind::AmongConst;
  inst.constraint.scope = {"N", "X1", "X1"};
  inst.constraint.value_set = {1};
  CHECK_THROWS_AS(among_const_gac(inst), UnsupportedInstanceError);
}

TEST_CASE("among differential against the generic engine") {
  std::mt19937 rng(405);
  auto pick = [&](int lo, int hi) {
    return std::uniform_int_distribution<int>(lo, hi)(rng);
  };
  for (int it = 0; it < 150; ++it) {
    Instance inst;
    int n = pick(1, 5);
    inst.variables = {"N"};
    Domain dn;
    for (int v = 0; v <= n; ++v) {
      if (pick(0, 1)) dn.push_back(v);
    }
    if (dn.empty()) dn.push_back(pick(0, n));
    inst.domains = {dn};
    inst.constraint.kind = Kind::AmongConst;
    inst.constraint.scope = {"N"};
    for (int i = 0; i < n; ++i) {
      inst.variables.push_back("X" + std::to_string(i));
      Domain d;
      for (int v = 1; v <= 5; ++v) {
        if (pick(0, 1)) d.push_back(v);
      }
      if (d.empty()) d.push_back(pick(1, 5));
      inst.domains.push_back(d);
      inst.constraint.scope.push_back(inst.variables.back());
    }
    for (int v = 1; v <= 5; ++v) {
      if (pick(0, 1)) inst.constraint.value_set.push_back(v);
    }
    check_against_engine(inst, among_const_gac(inst));
  }
}

TEST_CASE("gcc filters through required occurrences") {
  Instance inst;
  inst.variables = {"X1", "X2"};
  inst.domains = {{1, 2}, {1}};
  inst.constraint.kind = Kind::Gcc;
  inst.constraint.scope = {"X1", "X2"};
  inst.constraint.occ = {{1, {1, 1}}};
  auto out = gcc_fixed_gac(inst);
  CHECK_FALSE(out.wipeout);
  CHECK(out.domains.at("X1") == Domain{2});
  CHECK(out.domains.at("X2") == Domain{1});
}

TEST_CASE("gcc infeasibilities wipe out") {
  SECTION("demand exceeds the variables") {
    Instance inst;
    inst.variables = {"X1"};
    inst.domains = {{1}};
    inst.constraint.kind = Kind::Gcc;
    inst.constraint.scope = {"X1"};
    inst.constraint.occ = {{1, {2, 5}}};
    CHECK(gcc_fixed_gac(inst).wipeout);
  }
  SECTION("required value out of everyone's reach") {
    Instance inst;
    inst.variables = {"X1"};
    inst.domains = {{1}};
    inst.constraint.kind = Kind::Gcc;
    inst.constraint.scope = {"X1"};
    inst.constraint.occ = {{9, {1, 1}}};
    CHECK(gcc_fixed_gac(inst).wipeout);
  }
  SECTION("upper bounds squeeze three variables into two slots") {
    Instance inst;
    inst.variables = {"X1", "X2", "X3"};
    inst.domains = {{1, 2}, {1, 2}, {1, 2}};
    inst.constraint.kind = Kind::Gcc;
    inst.constraint.scope = {"X1", "X2", "X3"};
    inst.constraint.occ = {{1, {0, 1}}, {2, {0, 1}}};
    auto out = gcc_fixed_gac(inst);
    CHECK(out.wipeout);
    check_against_engine(inst, out);
  }
}

TEST_CASE("gcc rejects repeated scope variables") {
  Instance inst;
  inst.variables = {"X1"};
  inst.domains = {{1, 2}};
  inst.constraint.kind = Kind::Gcc;
  inst.constraint.scope = {"X1", "X1"};
  CHECK_THROWS_AS(gcc_fixed_gac(inst), UnsupportedInstanceError);
}

TEST_CASE("gcc differential against the generic engine") {
  std::mt19937 rng(406);
  auto pick = [&](int lo, int hi) {
    return std::uniform_int_distribution<int>(lo, hi)(rng);
  };
  for (int it = 0; it < 150; ++it) {
    Instance inst;
    int n = pick(1, 5);
    for (int i = 0; i < n; ++i) {
      inst.variables.push_back("X" + std::to_string(i));
      Domain d;
      for (int v = 1; v <= 4; ++v) {
        if (pick(0, 1)) d.push_back(v);
      }
      if (d.empty()) d.push_back(pick(1, 4));
      inst.domains.push_back(d);
      inst.constraint.scope.push_back(inst.variables.back());
    }
    inst.constraint.kind = Kind::Gcc;
    for (int v = 1; v <= 4; ++v) {
      if (pick(0, 1)) {
        int lo = pick(0, 2);
        inst.constraint.occ[v] = {lo, lo + pick(0, 2)};
      }
    }
    check_against_engine(inst, gcc_fixed_gac(inst));
  }
}

TEST_CASE("cardpath forces the middle of a difference chain") {
  Instance inst;
  inst.variables = {"N", "X1", "X2", "X3"};
  inst.domains = {{2}, {0}, {0, 1}, {0}};
  inst.constraint.kind = Kind::Cardpath;
  inst.constraint.scope = {"N", "X1", "X2", "X3"};
  ConstraintSpec tpl;
  tpl.kind = Kind::Table;
  tpl.scope = {"a", "b"};
  tpl.tuples = {{0, 1}, {1, 0}};
  inst.constraint.children = {tpl};
  auto out = cardpath_dp_gac(inst);
  CHECK_FALSE(out.wipeout);
  CHECK(out.domains.at("X2") == Domain{1});
  CHECK(out.domains.at("N") == Domain{2});
  check_against_engine(inst, out);
}

TEST_CASE("cardpath with unit windows") {
  Instance inst;
  inst.variables = {"N", "X1", "X2", "X3"};
  inst.domains = {{1}, {0, 1}, {0, 1}, {1}};
  inst.constraint.kind = Kind::Cardpath;
  inst.constraint.scope = {"N", "X1", "X2", "X3"};
  ConstraintSpec tpl;
  tpl.kind = Kind::Table;
  tpl.scope = {"a"};
  tpl.tuples = {{1}};
  inst.constraint.children = {tpl};
  // Exactly one of the three positions is 1, and X3 already is.
  auto out = cardpath_dp_gac(inst);
  CHECK(out.domains.at("X1") == Domain{0});
  CHECK(out.domains.at("X2") == Domain{0});
  check_against_engine(inst, out);
}

TEST_CASE("cardpath guards its preconditions") {
  Instance inst;
  inst.variables = {"N", "X1", "X2"};
  inst.domains = {{0, 1, 2}, {0, 1}, {0, 1}};
  inst.constraint.kind = Kind::Cardpath;
  inst.constraint.scope = {"N", "X1", "X1"};
  ConstraintSpec tpl;
  tpl.kind = Kind::Table;
  tpl.scope = {"a", "b"};
  tpl.tuples = {{0, 1}};
  inst.constraint.children = {tpl};
  CHECK_THROWS_AS(cardpath_dp_gac(inst), UnsupportedInstanceError);

  inst.constraint.scope = {"N", "X1", "X2"};
  CHECK_THROWS_AS(cardpath_dp_gac(inst, 3), ScaleLimitError);
}

TEST_CASE("cardpath differential against the generic engine") {
  std::mt19937 rng(407);
  auto pick = [&](int lo, int hi) {
    return std::uniform_int_distribution<int>(lo, hi)(rng);
  };
  for (int it = 0; it < 120; ++it) {
    Instance inst;
    int m = pick(2, 6);
    int k = pick(1, std::min(m, 3));
    int d = pick(2, 3);
    int W = m - k + 1;
    inst.variables = {"N"};
    Domain dn;
    for (int v = 0; v <= W; ++v) {
      if (pick(0, 1)) dn.push_back(v);
    }
    if (dn.empty()) dn.push_back(pick(0, W));
    inst.domains = {dn};
    inst.constraint.kind = Kind::Cardpath;
    inst.constraint.scope = {"N"};
    for (int p = 0; p < m; ++p) {
      inst.variables.push_back("S" + std::to_string(p));
      Domain dom;
      for (int v = 0; v < d; ++v) {
        if (pick(0, 2)) dom.push_back(v);
      }
      if (dom.empty()) dom.push_back(pick(0, d - 1));
      inst.domains.push_back(dom);
      inst.constraint.scope.push_back(inst.variables.back());
    }
    ConstraintSpec tpl;
    tpl.kind = Kind::Table;
    for (int i = 0; i < k; ++i) tpl.scope.push_back("w" + std::to_string(i));
    std::function<void(std::vector<Value>&)> gen = [&](std::vector<Value>& row) {
      if (static_cast<int>(row.size()) == k) {
        if (pick(0, 1)) tpl.tuples.push_back(row);
        return;
      }
      for (int v = 0; v < d; ++v) {
        row.push_back(v);
        gen(row);
        row.pop_back();
      }
    };
    std::vector<Value> row;
    gen(row);
    inst.constraint.children = {tpl};
    check_against_engine(inst, cardpath_dp_gac(inst));
  }
}

TEST_CASE("propagators leave non-scope variables untouched") {
  Instance inst = alldiff({{1, 2}, {1, 2}, {1, 2, 3}});
  inst.variables.push_back("FREE");
  inst.domains.push_back({42});
  auto out = alldifferent_gac(inst);
  CHECK(out.domains.at("FREE") == Domain{42});
}
