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

#include "gaclab/oracles.hpp"

namespace gaclab {

namespace {

bool lit_true(int lit, const std::vector<bool>& model) {
  int v = lit > 0 ? lit : -lit;
  bool x = model[static_cast<size_t>(v - 1)];
  return lit > 0 ? x : !x;
}

void check_scale(int n, const char* what) {
  if (n > kOracleVarLimit) {
    throw ScaleLimitError(std::string(what) +
                          ": oracle limited to " +
                          std::to_string(kOracleVarLimit) + " variables");
  }
}

}  // namespace

bool cnf3_satisfied(const Cnf3& f, const std::vector<bool>& model) {
  for (const auto& cl : f.clauses) {
    if (!lit_true(cl[0], model) && !lit_true(cl[1], model) &&
        !lit_true(cl[2], model)) {
      return false;
    }
  }
  return true;
}

bool one_in_three_satisfied(const Cnf3& f, const std::vector<bool>& model) {
  for (const auto& cl : f.clauses) {
    int t = 0;
    for (int lit : cl) t += lit_true(lit, model) ? 1 : 0;
    if (t != 1) return false;
  }
  return true;
}

bool coloring_ok(const Graph& g, const std::vector<int>& colors) {
  if (static_cast<int>(colors.size()) != g.num_vertices) return false;
  for (int c : colors) {
    if (c < 0 || c > 2) return false;
  }
  for (const auto& [u, v] : g.edges) {
    if (colors[static_cast<size_t>(u)] == colors[static_cast<size_t>(v)]) {
      return false;
    }
  }
  return true;
}

int max2sat_violations(const Max2SatInput& w, const std::vector<bool>& model) {
  int bad = 0;
  for (const auto& cl : w.clauses) {
    if (!lit_true(cl[0], model) && !lit_true(cl[1], model)) ++bad;
  }
  return bad;
}

namespace {

// Depth-first over variables 1..n. `dead` prunes a prefix; `accept` decides
// the leaf. Both see the partial model and the count of assigned variables.
template <typename Dead, typename Accept>
bool dfs_bool(int n, std::vector<bool>& model, int depth, const Dead& dead,
              const Accept& accept) {
  if (dead(model, depth)) return false;
  if (depth == n) return accept(model);
  for (int bit = 0; bit < 2; ++bit) {
    model[static_cast<size_t>(depth)] = bit == 1;
    if (dfs_bool(n, model, depth + 1, dead, accept)) return true;
  }
  return false;
}

}  // namespace

std::optional<std::vector<bool>> sat3_solve(const Cnf3& f) {
  validate_cnf3(f);
  check_scale(f.num_vars, "sat3");
  std::vector<bool> model(static_cast<size_t>(f.num_vars), false);
  auto dead = [&f](const std::vector<bool>& m, int depth) {
    // A clause whose three literals are all assigned false is hopeless.
    for (const auto& cl : f.clauses) {
      bool open = false, sat = false;
      for (int lit : cl) {
        int v = lit > 0 ? lit : -lit;
        if (v > depth) {
          open = true;
        } else if (lit_true(lit, m)) {
          sat = true;
        }
      }
      if (!open && !sat) return true;
    }
    return false;
  };
  auto accept = [&f](const std::vector<bool>& m) { return cnf3_satisfied(f, m); };
  if (dfs_bool(f.num_vars, model, 0, dead, accept)) return model;
  return std::nullopt;
}

std::optional<std::vector<bool>> one_in_three_solve(const Cnf3& f) {
  validate_cnf3(f);
  check_scale(f.num_vars, "one-in-three");
  std::vector<bool> model(static_cast<size_t>(f.num_vars), false);
  auto dead = [&f](const std::vector<bool>& m, int depth) {
    for (const auto& cl : f.clauses) {
      int sat = 0, open = 0;
      for (int lit : cl) {
        int v = lit > 0 ? lit : -lit;
        if (v > depth) {
          ++open;
        } else if (lit_true(lit, m)) {
          ++sat;
        }
      }
      if (sat > 1 || (open == 0 && sat != 1)) return true;
    }
    return false;
  };
  auto accept = [&f](const std::vector<bool>& m) {
    return one_in_three_satisfied(f, m);
  };
  if (dfs_bool(f.num_vars, model, 0, dead, accept)) return model;
  return std::nullopt;
}

std::optional<std::vector<int>> three_color(const Graph& g) {
  validate_graph(g);
  check_scale(g.num_vertices, "three-color");
  auto adj = adjacency(g);
  std::vector<int> colors(static_cast<size_t>(g.num_vertices), -1);
  auto dfs = [&](auto&& self, int v) -> bool {
    if (v == g.num_vertices) return true;
    for (int c = 0; c < 3; ++c) {
      bool ok = true;
      for (int w : adj[static_cast<size_t>(v)]) {
        if (w < v && colors[static_cast<size_t>(w)] == c) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;
      colors[static_cast<size_t>(v)] = c;
      if (self(self, v + 1)) return true;
    }
    colors[static_cast<size_t>(v)] = -1;
    return false;
  };
  if (dfs(dfs, 0)) return colors;
  return std::nullopt;
}

std::optional<std::vector<bool>> max2sat_solve(const Max2SatInput& w) {
  validate_max2sat(w);
  check_scale(w.num_vars, "max2sat");
  std::vector<bool> model(static_cast<size_t>(w.num_vars), false);
  auto dead = [&w](const std::vector<bool>& m, int depth) {
    int bad = 0;
    for (const auto& cl : w.clauses) {
      bool open = false, sat = false;
      for (int lit : cl) {
        int v = lit > 0 ? lit : -lit;
        if (v > depth) {
          open = true;
        } else if (lit_true(lit, m)) {
          sat = true;
        }
      }
      if (!open && !sat) ++bad;
    }
    return bad > w.max_violations;
  };
  auto accept = [&w](const std::vector<bool>& m) {
    return max2sat_violations(w, m) <= w.max_violations;
  };
  if (dfs_bool(w.num_vars, model, 0, dead, accept)) return model;
  return std::nullopt;
}

}  // namespace gaclab
