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

#ifndef GACLAB_FIXTURES_HPP
#define GACLAB_FIXTURES_HPP

#include "gaclab/core.hpp"
#include "gaclab/sources.hpp"

namespace gaclab {

// Hand-picked source instances used across tests and suites. None of the
// answers are assumed: every consumer re-derives them through an oracle.

/// (x1 v x2 v x3) & (!x1 v !x2 v !x3); satisfiable.
Cnf3 fixture_f1();

/// All eight sign patterns over three variables; unsatisfiable.
Cnf3 fixture_f2();

/// Single positive clause (x1 v x2 v x3).
Cnf3 fixture_p1();

/// (x1 v x2 v x3) twice; still one-in-three satisfiable.
Cnf3 fixture_p_dup();

/// (x1 v x1 v x1) twice; one-in-three unsatisfiable since the literal count
/// per clause is 0 or 3.
Cnf3 fixture_p_unsat();

/// (x1 v x1 v x1) & (!x1 v !x1 v !x1); unsatisfiable and every variable sits
/// in at most three clauses.
Cnf3 fixture_card_unsat();

/// Triangle.
Graph fixture_k3();

/// Complete graph on four vertices; not 3-colorable.
Graph fixture_k4();

/// Triangle plus an isolated fourth vertex; 3-colorable on the same vertex
/// count as K4.
Graph fixture_k3_padded();

/// Path on three vertices.
Graph fixture_p3_path();

/// (x1 v x2) & (!x1 v !x2) with no violations allowed.
Max2SatInput fixture_w1();

/// All four sign patterns over two variables; any assignment violates
/// exactly one clause.
Max2SatInput fixture_w2(int max_violations);

/// The five-variable Disjoint instance used as the worked pruning example:
/// X1,Y1 in {1,2}; X2,Y2 in {1,3}; Y3 in {2,3}.
Instance disjoint_worked_example();

}  // namespace gaclab

#endif  // GACLAB_FIXTURES_HPP
