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

#ifndef GACLAB_CORPUS_HPP
#define GACLAB_CORPUS_HPP

#include <random>
#include <string>

#include "gaclab/core.hpp"
#include "gaclab/gadgets.hpp"
#include "gaclab/sources.hpp"

namespace gaclab {

// Seeded generators for the differential test corpora. Everything here is a
// pure function of the generator state, so a suite seed pins the whole run.
// Bounds are chosen so the exhaustive oracles stay well under a second per
// case.

/// 3-CNF with up to `max_vars` variables and `max_clauses` clauses; literals
/// drawn independently, so clauses may repeat variables.
Cnf3 random_cnf3(std::mt19937& rng, int max_vars = 4, int max_clauses = 6);

/// All-positive 3-CNF for the one-in-three families.
Cnf3 random_positive_cnf3(std::mt19937& rng, int max_vars = 4,
                          int max_clauses = 3);

/// 3-CNF whose variables all appear in at most three clauses.
Cnf3 random_bounded_occurrence_cnf3(std::mt19937& rng);

/// 3-CNF sized so the atmost1 gadget keeps few enough undetermined set slots
/// for the generic engine to search. Clauses use three distinct variables.
Cnf3 random_atmost1_cnf3(std::mt19937& rng);

/// Graph on min..max vertices; edge density varies across draws.
Graph random_graph(std::mt19937& rng, int min_vertices = 1,
                   int max_vertices = 5);

/// Connected graph with at least one edge.
Graph random_connected_graph(std::mt19937& rng, int min_vertices = 2,
                             int max_vertices = 5);

Max2SatInput random_max2sat(std::mt19937& rng, int max_vars = 3,
                            int max_clauses = 4, int max_violations = 2);

/// A source problem suitable for the named gadget family.
SourceProblem random_source(const std::string& family, std::mt19937& rng);

/// Instance for the reducer corpus: arity <= 4, domains <= 4 values, kinds
/// Table / AllDifferent / AmongConst / BinaryNetwork.
Instance random_engine_instance(std::mt19937& rng);

// Precondition-satisfying instances for each specialized propagator.
Instance random_alldifferent_instance(std::mt19937& rng);  // n<=6, d<=7
Instance random_among_instance(std::mt19937& rng);         // n<=5
Instance random_gcc_instance(std::mt19937& rng);           // n<=5, values<=4
Instance random_cardpath_instance(std::mt19937& rng);      // len<=7, k=2, d<=3

}  // namespace gaclab

#endif  // GACLAB_CORPUS_HPP
