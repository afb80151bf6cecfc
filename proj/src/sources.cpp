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

#include "gaclab/sources.hpp"

#include <algorithm>
#include <queue>
#include <set>
#include <sstream>

namespace gaclab {

void validate_cnf3(const Cnf3& f) {
  if (f.num_vars < 0) throw InvariantError("cnf3 has negative variable count");
  for (const auto& cl : f.clauses) {
    for (int lit : cl) {
      if (lit == 0 || lit > f.num_vars || lit < -f.num_vars) {
        throw InvariantError("cnf3 literal out of range");
      }
    }
  }
}

void validate_max2sat(const Max2SatInput& w) {
  if (w.num_vars < 0) {
    throw InvariantError("max2sat has negative variable count");
  }
  for (const auto& cl : w.clauses) {
    for (int lit : cl) {
      if (lit == 0 || lit > w.num_vars || lit < -w.num_vars) {
        throw InvariantError("max2sat literal out of range");
      }
    }
  }
  if (w.max_violations < 0 ||
      w.max_violations > static_cast<int>(w.clauses.size())) {
    throw InvariantError("max2sat bound outside [0, clause count]");
  }
}

void validate_graph(const Graph& g) {
  if (g.num_vertices < 0) {
    throw InvariantError("graph has negative vertex count");
  }
  for (const auto& [u, v] : g.edges) {
    if (u < 0 || v < 0 || u >= g.num_vertices || v >= g.num_vertices) {
      throw InvariantError("graph edge endpoint out of range");
    }
    if (u == v) throw InvariantError("graph has a self loop");
  }
}

bool is_positive(const Cnf3& f) {
  for (const auto& cl : f.clauses) {
    for (int lit : cl) {
      if (lit < 0) return false;
    }
  }
  return true;
}

int max_clause_occurrences(const Cnf3& f) {
  std::vector<int> count(static_cast<size_t>(f.num_vars) + 1, 0);
  for (const auto& cl : f.clauses) {
    std::set<int> vars;
    for (int lit : cl) vars.insert(lit > 0 ? lit : -lit);
    for (int v : vars) count[static_cast<size_t>(v)]++;
  }
  int best = 0;
  for (int v = 1; v <= f.num_vars; ++v) {
    best = std::max(best, count[static_cast<size_t>(v)]);
  }
  return best;
}

std::vector<std::vector<int>> adjacency(const Graph& g) {
  std::vector<std::vector<int>> adj(static_cast<size_t>(g.num_vertices));
  for (const auto& [u, v] : g.edges) {
    adj[static_cast<size_t>(u)].push_back(v);
    adj[static_cast<size_t>(v)].push_back(u);
  }
  for (auto& row : adj) {
    std::sort(row.begin(), row.end());
    row.erase(std::unique(row.begin(), row.end()), row.end());
  }
  return adj;
}

bool is_connected(const Graph& g) {
  if (g.num_vertices <= 1) return true;
  auto adj = adjacency(g);
  std::vector<char> seen(static_cast<size_t>(g.num_vertices), 0);
  std::queue<int> q;
  q.push(0);
  seen[0] = 1;
  int visited = 1;
  while (!q.empty()) {
    int u = q.front();
    q.pop();
    for (int w : adj[static_cast<size_t>(u)]) {
      if (!seen[static_cast<size_t>(w)]) {
        seen[static_cast<size_t>(w)] = 1;
        ++visited;
        q.push(w);
      }
    }
  }
  return visited == g.num_vertices;
}

namespace {

// Strips comment lines and returns whitespace-separated tokens.
std::vector<std::string> tokenize(const std::string& text) {
  std::vector<std::string> tokens;
  std::istringstream lines(text);
  std::string line;
  while (std::getline(lines, line)) {
    if (!line.empty() && line[0] == 'c') continue;
    std::istringstream words(line);
    std::string w;
    while (words >> w) tokens.push_back(w);
  }
  return tokens;
}

int to_int(const std::string& tok, const char* what) {
  size_t used = 0;
  int value = 0;
  try {
    value = std::stoi(tok, &used);
  } catch (const std::exception&) {
    throw ParseError(std::string(what) + ": not an integer: " + tok);
  }
  if (used != tok.size()) {
    throw ParseError(std::string(what) + ": trailing characters in " + tok);
  }
  return value;
}

// Shared literal-body reader for the two clausal formats.
template <size_t Arity>
std::vector<std::array<int, Arity>> read_clauses(
    const std::vector<std::string>& tok, size_t at, int num_clauses,
    const char* what) {
  std::vector<std::array<int, Arity>> clauses;
  for (int c = 0; c < num_clauses; ++c) {
    std::array<int, Arity> cl{};
    for (size_t k = 0; k < Arity; ++k) {
      if (at >= tok.size()) throw ParseError(std::string(what) + ": truncated");
      cl[k] = to_int(tok[at++], what);
      if (cl[k] == 0) throw ParseError(std::string(what) + ": short clause");
    }
    if (at >= tok.size() || to_int(tok[at++], what) != 0) {
      throw ParseError(std::string(what) + ": clause not 0-terminated");
    }
    clauses.push_back(cl);
  }
  if (at != tok.size()) {
    throw ParseError(std::string(what) + ": trailing tokens after last clause");
  }
  return clauses;
}

}  // namespace

Cnf3 parse_cnf3(const std::string& text) {
  auto tok = tokenize(text);
  if (tok.size() < 4 || tok[0] != "p" || tok[1] != "cnf") {
    throw ParseError("cnf: expected 'p cnf <vars> <clauses>' header");
  }
  Cnf3 f;
  f.num_vars = to_int(tok[2], "cnf");
  int m = to_int(tok[3], "cnf");
  if (f.num_vars < 0 || m < 0) throw ParseError("cnf: negative header counts");
  f.clauses = read_clauses<3>(tok, 4, m, "cnf");
  try {
    validate_cnf3(f);
  } catch (const InvariantError& e) {
    throw ParseError(e.what());
  }
  return f;
}

std::string write_cnf3(const Cnf3& f) {
  std::ostringstream out;
  out << "p cnf " << f.num_vars << " " << f.clauses.size() << "\n";
  for (const auto& cl : f.clauses) {
    out << cl[0] << " " << cl[1] << " " << cl[2] << " 0\n";
  }
  return out.str();
}

Max2SatInput parse_max2sat(const std::string& text) {
  auto tok = tokenize(text);
  if (tok.size() < 5 || tok[0] != "p" || tok[1] != "max2sat") {
    throw ParseError("max2sat: expected 'p max2sat <vars> <clauses> <bound>'");
  }
  Max2SatInput w;
  w.num_vars = to_int(tok[2], "max2sat");
  int m = to_int(tok[3], "max2sat");
  w.max_violations = to_int(tok[4], "max2sat");
  if (w.num_vars < 0 || m < 0) {
    throw ParseError("max2sat: negative header counts");
  }
  w.clauses = read_clauses<2>(tok, 5, m, "max2sat");
  try {
    validate_max2sat(w);
  } catch (const InvariantError& e) {
    throw ParseError(e.what());
  }
  return w;
}

std::string write_max2sat(const Max2SatInput& w) {
  std::ostringstream out;
  out << "p max2sat " << w.num_vars << " " << w.clauses.size() << " "
      << w.max_violations << "\n";
  for (const auto& cl : w.clauses) {
    out << cl[0] << " " << cl[1] << " 0\n";
  }
  return out.str();
}

Graph parse_graph(const std::string& text) {
  auto tok = tokenize(text);
  if (tok.size() < 4 || tok[0] != "p" || tok[1] != "edge") {
    throw ParseError("graph: expected 'p edge <vertices> <edges>' header");
  }
  Graph g;
  g.num_vertices = to_int(tok[2], "graph");
  int m = to_int(tok[3], "graph");
  if (g.num_vertices < 0 || m < 0) {
    throw ParseError("graph: negative header counts");
  }
  size_t at = 4;
  for (int e = 0; e < m; ++e) {
    if (at + 3 > tok.size()) throw ParseError("graph: truncated edge list");
    if (tok[at] != "e") throw ParseError("graph: expected an 'e u v' line");
    int u = to_int(tok[at + 1], "graph");
    int v = to_int(tok[at + 2], "graph");
    at += 3;
    if (u < 1 || v < 1 || u > g.num_vertices || v > g.num_vertices) {
      throw ParseError("graph: edge endpoint out of range");
    }
    g.edges.emplace_back(u - 1, v - 1);
  }
  if (at != tok.size()) throw ParseError("graph: trailing tokens");
  try {
    validate_graph(g);
  } catch (const InvariantError& e) {
    throw ParseError(e.what());
  }
  return g;
}

std::string write_graph(const Graph& g) {
  std::ostringstream out;
  out << "p edge " << g.num_vertices << " " << g.edges.size() << "\n";
  for (const auto& [u, v] : g.edges) {
    out << "e " << u + 1 << " " << v + 1 << "\n";
  }
  return out.str();
}

}  // namespace gaclab
