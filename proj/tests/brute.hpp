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

// Plain-odometer reference answers. Everything here enumerates the full
// cartesian product of the scope domains and consults evaluate() at the
// leaves only, so it shares no pruning logic with the engine under test.

#ifndef GACLAB_TESTS_BRUTE_HPP
#define GACLAB_TESTS_BRUTE_HPP

#include <functional>
#include <vector>

#include "gaclab/core.hpp"

namespace gaclab::brute {

inline void for_each_tuple(const Instance& inst,
                           const std::function<bool(const Tuple&)>& visit) {
  Checker ch(inst.constraint);
  const int n = ch.num_vars();
  std::vector<const Domain*> doms;
  for (const auto& id : ch.vars()) doms.push_back(&inst.domain(id));
  std::vector<size_t> idx(n, 0);
  for (int i = 0; i < n; ++i) {
    if (doms[i]->empty()) return;
  }
  while (true) {
    Tuple t;
    for (int i = 0; i < n; ++i) t[ch.vars()[i]] = (*doms[i])[idx[i]];
    if (!visit(t)) return;
    int p = n - 1;
    while (p >= 0 && ++idx[p] == doms[p]->size()) {
      idx[p] = 0;
      --p;
    }
    if (p < 0) return;
  }
}

inline std::vector<Tuple> solutions(const Instance& inst) {
  std::vector<Tuple> out;
  for_each_tuple(inst, [&](const Tuple& t) {
    if (evaluate(inst.constraint, t)) out.push_back(t);
    return true;
  });
  return out;
}

inline bool has_solution(const Instance& inst) {
  bool found = false;
  for_each_tuple(inst, [&](const Tuple& t) {
    if (evaluate(inst.constraint, t)) {
      found = true;
      return false;
    }
    return true;
  });
  return found;
}

inline bool supports(const Instance& inst, const VarId& x, Value v) {
  const Domain& dx = inst.domain(x);
  bool present = false;
  for (Value w : dx) present = present || w == v;
  if (!present) return false;
  bool found = false;
  for_each_tuple(inst, [&](const Tuple& t) {
    if (t.at(x) == v && evaluate(inst.constraint, t)) {
      found = true;
      return false;
    }
    return true;
  });
  return found;
}

/// Supported values of every scope variable; other variables untouched.
inline DomainMap gac_domains(const Instance& inst) {
  Checker ch(inst.constraint);
  DomainMap out = inst.domain_map();
  std::map<VarId, std::set<Value>> kept;
  for (const auto& id : ch.vars()) kept[id] = {};
  for_each_tuple(inst, [&](const Tuple& t) {
    if (evaluate(inst.constraint, t)) {
      for (auto& [id, vals] : kept) vals.insert(t.at(id));
    }
    return true;
  });
  for (const auto& id : ch.vars()) {
    out[id] = Domain(kept[id].begin(), kept[id].end());
  }
  return out;
}

inline bool is_gac(const Instance& inst) {
  Checker ch(inst.constraint);
  bool all_empty = true;
  for (const auto& id : ch.vars()) {
    if (!inst.domain(id).empty()) all_empty = false;
  }
  if (all_empty) return true;
  DomainMap filtered = gac_domains(inst);
  for (const auto& id : ch.vars()) {
    if (filtered.at(id) != inst.domain(id)) return false;
  }
  return true;
}

}  // namespace gaclab::brute

#endif  // GACLAB_TESTS_BRUTE_HPP
