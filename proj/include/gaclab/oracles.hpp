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

#ifndef GACLAB_ORACLES_HPP
#define GACLAB_ORACLES_HPP

#include <optional>
#include <vector>

#include "gaclab/sources.hpp"

namespace gaclab {

// Exhaustive ground-truth solvers for the source problems. They share no
// code with the constraint engine; differential tests lean on that.
//
// Every solver refuses inputs with more than kOracleVarLimit branching
// variables (ScaleLimitError) so a runaway corpus fails loudly instead of
// hanging.

inline constexpr int kOracleVarLimit = 20;

bool cnf3_satisfied(const Cnf3& f, const std::vector<bool>& model);
bool one_in_three_satisfied(const Cnf3& f, const std::vector<bool>& model);
bool coloring_ok(const Graph& g, const std::vector<int>& colors);
int max2sat_violations(const Max2SatInput& w, const std::vector<bool>& model);

/// Backtracking satisfiability; returns a model indexed by variable - 1.
std::optional<std::vector<bool>> sat3_solve(const Cnf3& f);

/// Exactly-one-true-literal-per-clause satisfiability.
std::optional<std::vector<bool>> one_in_three_solve(const Cnf3& f);

/// Proper 3-coloring with colors {0, 1, 2}, indexed by vertex.
std::optional<std::vector<int>> three_color(const Graph& g);

/// An assignment violating at most w.max_violations clauses.
std::optional<std::vector<bool>> max2sat_solve(const Max2SatInput& w);

}  // namespace gaclab

#endif  // GACLAB_ORACLES_HPP
