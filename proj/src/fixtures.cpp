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

#include "gaclab/fixtures.hpp"

namespace gaclab {

Cnf3 fixture_f1() {
  return Cnf3{3, {{{1, 2, 3}}, {{-1, -2, -3}}}};
}

Cnf3 fixture_f2() {
  Cnf3 f;
  f.num_vars = 3;
  for (int s1 : {1, -1}) {
    for (int s2 : {1, -1}) {
      for (int s3 : {1, -1}) {
        f.clauses.push_back({s1 * 1, s2 * 2, s3 * 3});
      }
    }
  }
  return f;
}

Cnf3 fixture_p1() {
  return Cnf3{3, {{{1, 2, 3}}}};
}

Cnf3 fixture_p_dup() {
  return Cnf3{3, {{{1, 2, 3}}, {{1, 2, 3}}}};
}

Cnf3 fixture_p_unsat() {
  return Cnf3{1, {{{1, 1, 1}}, {{1, 1, 1}}}};
}

Cnf3 fixture_card_unsat() {
  return Cnf3{1, {{{1, 1, 1}}, {{-1, -1, -1}}}};
}

Graph fixture_k3() {
  return Graph{3, {{0, 1}, {0, 2}, {1, 2}}};
}

Graph fixture_k4() {
  return Graph{4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}};
}

Graph fixture_k3_padded() {
  return Graph{4, {{0, 1}, {0, 2}, {1, 2}}};
}

Graph fixture_p3_path() {
  return Graph{3, {{0, 1}, {1, 2}}};
}

Max2SatInput fixture_w1() {
  return Max2SatInput{2, {{{1, 2}}, {{-1, -2}}}, 0};
}

Max2SatInput fixture_w2(int max_violations) {
  Max2SatInput w;
  w.num_vars = 2;
  w.clauses = {{{1, 2}}, {{1, -2}}, {{-1, 2}}, {{-1, -2}}};
  w.max_violations = max_violations;
  return w;
}

Instance disjoint_worked_example() {
  Instance inst;
  inst.variables = {"X1", "X2", "Y1", "Y2", "Y3"};
  inst.domains = {{1, 2}, {1, 3}, {1, 2}, {1, 3}, {2, 3}};
  inst.constraint.kind = Kind::Disjoint;
  inst.constraint.scope = {"X1", "X2", "Y1", "Y2", "Y3"};
  inst.constraint.split = 2;
  return inst;
}

}  // namespace gaclab
