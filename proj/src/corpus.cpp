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

#include "gaclab/corpus.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace gaclab {

namespace {

int pick(std::mt19937& rng, int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

bool chance(std::mt19937& rng, double p) {
  return std::uniform_real_distribution<double>(0.0, 1.0)(rng) < p;
}

Domain random_subset(std::mt19937& rng, const Domain& universe, int min_size) {
  Domain out;
  while (true) {
    out.clear();
    for (Value v : universe)
      if (chance(rng, 0.55)) out.push_back(v);
    if (static_cast<int>(out.size()) >= min_size) return out;
  }
}

}  // namespace

Cnf3 random_cnf3(std::mt19937& rng, int max_vars, int max_clauses) {
  Cnf3 f;
  f.num_vars = pick(rng, 1, max_vars);
  int m = pick(rng, 1, max_clauses);
  for (int j = 0; j < m; ++j) {
    std::array<int, 3> cl;
    for (int& lit : cl) {
      int v = pick(rng, 1, f.num_vars);
      lit = chance(rng, 0.5) ? v : -v;
    }
    f.clauses.push_back(cl);
  }
  return f;
}

Cnf3 random_positive_cnf3(std::mt19937& rng, int max_vars, int max_clauses) {
  Cnf3 f;
  f.num_vars = pick(rng, 1, max_vars);
  int m = pick(rng, 1, max_clauses);
  for (int j = 0; j < m; ++j) {
    std::array<int, 3> cl;
    for (int& lit : cl) lit = pick(rng, 1, f.num_vars);
    f.clauses.push_back(cl);
  }
  return f;
}

Cnf3 random_bounded_occurrence_cnf3(std::mt19937& rng) {
  // two clauses keep every variable under the three-occurrence bound
  return random_cnf3(rng, 4, 2);
}

Cnf3 random_atmost1_cnf3(std::mt19937& rng) {
  for (int attempt = 0; attempt < 200; ++attempt) {
    Cnf3 f;
    f.num_vars = pick(rng, 3, 4);
    int m = pick(rng, 1, 3);
    for (int j = 0; j < m; ++j) {
      std::vector<int> vars(f.num_vars);
      for (int i = 0; i < f.num_vars; ++i) vars[i] = i + 1;
      std::shuffle(vars.begin(), vars.end(), rng);
      std::array<int, 3> cl;
      for (int k = 0; k < 3; ++k)
        cl[k] = chance(rng, 0.5) ? vars[k] : -vars[k];
      f.clauses.push_back(cl);
    }
    // keep the blocking structure small enough for the generic search:
    // no variable may force occurrence splitting, and the undetermined
    // set slots (3 per clause, 4 per complementary pair) stay bounded
    std::vector<std::set<int>> pos(f.num_vars + 1), neg(f.num_vars + 1);
    for (int j = 0; j < m; ++j)
      for (int lit : f.clauses[j]) (lit > 0 ? pos[lit] : neg[-lit]).insert(j);
    bool ok = true;
    long long pairs = 0;
    for (int i = 1; i <= f.num_vars; ++i) {
      size_t p = pos[i].size(), q = neg[i].size();
      if ((p >= 2 && q >= 1) || (p >= 1 && q >= 2)) ok = false;
      pairs += static_cast<long long>(p) * static_cast<long long>(q);
    }
    if (ok && 3 * m + 4 * pairs <= 18) return f;
  }
  Cnf3 f;
  f.num_vars = 3;
  f.clauses.push_back({1, -2, 3});
  return f;
}

Graph random_graph(std::mt19937& rng, int min_vertices, int max_vertices) {
  Graph g;
  g.num_vertices = pick(rng, min_vertices, max_vertices);
  double density = 0.25 + 0.3 * pick(rng, 0, 2);
  for (int u = 0; u < g.num_vertices; ++u)
    for (int v = u + 1; v < g.num_vertices; ++v)
      if (chance(rng, density)) g.edges.push_back({u, v});
  return g;
}

Graph random_connected_graph(std::mt19937& rng, int min_vertices,
                             int max_vertices) {
  for (int attempt = 0; attempt < 200; ++attempt) {
    Graph g = random_graph(rng, min_vertices, max_vertices);
    if (!g.edges.empty() && is_connected(g)) return g;
  }
  Graph path;
  path.num_vertices = std::max(2, min_vertices);
  for (int v = 1; v < path.num_vertices; ++v) path.edges.push_back({v - 1, v});
  return path;
}

Max2SatInput random_max2sat(std::mt19937& rng, int max_vars, int max_clauses,
                            int max_violations) {
  Max2SatInput w;
  w.num_vars = pick(rng, 1, max_vars);
  int m = pick(rng, 1, max_clauses);
  for (int j = 0; j < m; ++j) {
    std::array<int, 2> cl;
    for (int& lit : cl) {
      int v = pick(rng, 1, w.num_vars);
      lit = chance(rng, 0.5) ? v : -v;
    }
    w.clauses.push_back(cl);
  }
  w.max_violations = pick(rng, 0, std::min(m, max_violations));
  return w;
}

SourceProblem random_source(const std::string& family, std::mt19937& rng) {
  if (family == "isitgac") return source_three_col(random_graph(rng, 1, 5));
  if (family == "cardpath-3col")
    return source_three_col(random_connected_graph(rng, 2, 5));
  if (family == "maxgac") {
    int v = pick(rng, 2, 5);
    Graph g1 = random_graph(rng, v, v);
    Graph g2 = random_graph(rng, v, v);
    // bias the second graph dense so uncolourable companions show up
    if (chance(rng, 0.5)) {
      g2.edges.clear();
      for (int a = 0; a < v; ++a)
        for (int b = a + 1; b < v; ++b)
          if (chance(rng, 0.9)) g2.edges.push_back({a, b});
    }
    return source_three_col_pair(std::move(g1), std::move(g2));
  }
  if (family == "cardpath-max2sat") return source_max2sat(random_max2sat(rng));
  if (family == "scalarproduct")
    return source_one_in_three(random_positive_cnf3(rng));
  if (family == "card") return source_sat3(random_bounded_occurrence_cnf3(rng));
  if (family == "atmost1") return source_sat3(random_atmost1_cnf3(rng));
  return source_sat3(random_cnf3(rng));
}

Instance random_engine_instance(std::mt19937& rng) {
  Instance inst;
  const int n = pick(rng, 2, 4);
  const Domain universe{0, 1, 2, 3, 4};
  for (int i = 1; i <= n; ++i) {
    Domain d = random_subset(rng, universe, 1);
    while (static_cast<int>(d.size()) > 4) d.pop_back();
    inst.variables.push_back("x" + std::to_string(i));
    inst.domains.push_back(std::move(d));
  }
  ConstraintSpec spec;
  switch (pick(rng, 0, 3)) {
    case 0: {
      spec.kind = Kind::Table;
      for (const auto& v : inst.variables) spec.scope.push_back(v);
      double density = 0.1 + 0.2 * pick(rng, 0, 4);
      std::vector<int> idx(n, 0);
      while (true) {
        std::vector<Value> row(n);
        for (int i = 0; i < n; ++i) row[i] = inst.domains[i][idx[i]];
        if (chance(rng, density)) spec.tuples.push_back(row);
        int i = n - 1;
        while (i >= 0 && ++idx[i] == static_cast<int>(inst.domains[i].size()))
          idx[i--] = 0;
        if (i < 0) break;
      }
      break;
    }
    case 1: {
      spec.kind = Kind::AllDifferent;
      for (const auto& v : inst.variables) spec.scope.push_back(v);
      if (chance(rng, 0.12)) spec.scope.push_back(inst.variables[0]);
      break;
    }
    case 2: {
      spec.kind = Kind::AmongConst;
      spec.value_set = random_subset(rng, universe, 1);
      inst.variables.push_back("N");
      inst.domains.push_back(random_subset(
          rng, Domain{0, 1, 2, 3, 4}, 1));
      spec.scope.push_back("N");
      for (int i = 1; i <= n; ++i)
        spec.scope.push_back("x" + std::to_string(i));
      break;
    }
    default: {
      spec.kind = Kind::BinaryNetwork;
      for (const auto& v : inst.variables) spec.scope.push_back(v);
      for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b) {
          if (!chance(rng, 0.6)) continue;
          PairRelation rel;
          rel.i = a;
          rel.j = b;
          for (Value x : inst.domains[a])
            for (Value y : inst.domains[b])
              if (chance(rng, 0.55)) rel.allowed.push_back({x, y});
          spec.relations.push_back(std::move(rel));
        }
      break;
    }
  }
  inst.constraint = std::move(spec);
  validate_instance(inst);
  return inst;
}

Instance random_alldifferent_instance(std::mt19937& rng) {
  Instance inst;
  const int n = pick(rng, 2, 6);
  Domain universe;
  for (Value v = 1; v <= 7; ++v) universe.push_back(v);
  for (int i = 1; i <= n; ++i) {
    // tight domains make Hall-set prunings common
    int width = pick(rng, 1, std::min(7, n + 1));
    int start = pick(rng, 1, 7 - width + 1);
    Domain d;
    for (Value v = start; v < start + width; ++v)
      if (chance(rng, 0.85)) d.push_back(v);
    if (d.empty()) d.push_back(start);
    inst.variables.push_back("x" + std::to_string(i));
    inst.domains.push_back(std::move(d));
  }
  ConstraintSpec spec;
  spec.kind = Kind::AllDifferent;
  for (const auto& v : inst.variables) spec.scope.push_back(v);
  inst.constraint = std::move(spec);
  validate_instance(inst);
  return inst;
}

Instance random_among_instance(std::mt19937& rng) {
  Instance inst;
  const int n = pick(rng, 1, 4);
  const Domain universe{0, 1, 2, 3, 4};
  inst.variables.push_back("N");
  Domain counts;
  for (Value c = 0; c <= n; ++c)
    if (chance(rng, 0.6)) counts.push_back(c);
  if (counts.empty()) counts.push_back(pick(rng, 0, n));
  inst.domains.push_back(std::move(counts));
  for (int i = 1; i <= n; ++i) {
    inst.variables.push_back("x" + std::to_string(i));
    inst.domains.push_back(random_subset(rng, universe, 1));
  }
  ConstraintSpec spec;
  spec.kind = Kind::AmongConst;
  spec.value_set = random_subset(rng, universe, 1);
  for (const auto& v : inst.variables) spec.scope.push_back(v);
  inst.constraint = std::move(spec);
  validate_instance(inst);
  return inst;
}

Instance random_gcc_instance(std::mt19937& rng) {
  Instance inst;
  const int n = pick(rng, 1, 5);
  const Domain universe{1, 2, 3, 4};
  for (int i = 1; i <= n; ++i) {
    inst.variables.push_back("x" + std::to_string(i));
    inst.domains.push_back(random_subset(rng, universe, 1));
  }
  ConstraintSpec spec;
  spec.kind = Kind::Gcc;
  for (const auto& v : inst.variables) spec.scope.push_back(v);
  for (Value v : universe) {
    if (!chance(rng, 0.7)) continue;
    int lo = pick(rng, 0, 2);
    int hi = pick(rng, lo, std::max(lo, n));
    spec.occ[v] = {lo, hi};
  }
  inst.constraint = std::move(spec);
  validate_instance(inst);
  return inst;
}

Instance random_cardpath_instance(std::mt19937& rng) {
  Instance inst;
  const int len = pick(rng, 2, 6);
  const Domain universe{1, 2, 3};
  inst.variables.push_back("N");
  Domain counts;
  for (Value c = 0; c <= len - 1; ++c)
    if (chance(rng, 0.55)) counts.push_back(c);
  if (counts.empty()) counts.push_back(pick(rng, 0, len - 1));
  inst.domains.push_back(std::move(counts));
  for (int i = 1; i <= len; ++i) {
    inst.variables.push_back("s" + std::to_string(i));
    inst.domains.push_back(random_subset(rng, universe, 1));
  }
  ConstraintSpec tpl;
  tpl.kind = Kind::Table;
  tpl.scope = {"t1", "t2"};
  for (Value x : universe)
    for (Value y : universe)
      if (chance(rng, 0.5)) tpl.tuples.push_back({x, y});
  ConstraintSpec spec;
  spec.kind = Kind::Cardpath;
  spec.children.push_back(std::move(tpl));
  for (const auto& v : inst.variables) spec.scope.push_back(v);
  inst.constraint = std::move(spec);
  validate_instance(inst);
  return inst;
}

}  // namespace gaclab
