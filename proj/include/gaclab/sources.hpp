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

#ifndef GACLAB_SOURCES_HPP
#define GACLAB_SOURCES_HPP

#include <array>
#include <string>
#include <utility>
#include <vector>

#include "gaclab/core.hpp"

namespace gaclab {

// Source problems that gadget builders translate into constraint instances.
// Text formats follow the DIMACS habit: 'c' comment lines, one 'p' header,
// then the body. Variables are 1-based in files and in literals.

/// A 3-CNF formula. Literals are signed 1-based variable indices; a clause
/// may repeat a literal.
struct Cnf3 {
  int num_vars = 0;
  std::vector<std::array<int, 3>> clauses;
};

/// A 2-CNF formula together with the number of clauses an assignment is
/// allowed to violate.
struct Max2SatInput {
  int num_vars = 0;
  std::vector<std::array<int, 2>> clauses;
  int max_violations = 0;
};

/// An undirected graph with 0-based vertices and no self loops.
struct Graph {
  int num_vertices = 0;
  std::vector<std::pair<int, int>> edges;
};

void validate_cnf3(const Cnf3& f);
void validate_max2sat(const Max2SatInput& w);
void validate_graph(const Graph& g);

/// True when every literal of every clause is positive.
bool is_positive(const Cnf3& f);

/// Largest number of clauses any one variable appears in (either sign;
/// repeats inside a clause count once).
int max_clause_occurrences(const Cnf3& f);

std::vector<std::vector<int>> adjacency(const Graph& g);

/// Connectivity over all vertices; the empty graph on one vertex counts as
/// connected.
bool is_connected(const Graph& g);

// "p cnf <vars> <clauses>" then 3 literals per clause, 0-terminated.
Cnf3 parse_cnf3(const std::string& text);
std::string write_cnf3(const Cnf3& f);

// "p max2sat <vars> <clauses> <bound>" then 2 literals per clause,
// 0-terminated.
Max2SatInput parse_max2sat(const std::string& text);
std::string write_max2sat(const Max2SatInput& w);

// "p edge <vertices> <edges>" then one "e u v" line per edge, 1-based.
Graph parse_graph(const std::string& text);
std::string write_graph(const Graph& g);

}  // namespace gaclab

#endif  // GACLAB_SOURCES_HPP
