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

#ifndef GACLAB_PROPAGATORS_HPP
#define GACLAB_PROPAGATORS_HPP

#include "gaclab/core.hpp"

namespace gaclab {

struct PropagationOutcome {
  /// Domains after filtering; variables outside the scope are untouched.
  DomainMap domains;
  /// Removed pairs, ordered by variable id then value.
  std::vector<std::pair<VarId, Value>> removed;
  /// True when the instance has no solution; then every scope domain is empty.
  bool wipeout = false;
};

// Each propagator computes the same filtered domains the generic engine's
// gac_domain would, in time polynomial in the instance, never by enumerating
// tuples.

/// Matching-based filtering for allDifferent. A repeated scope variable makes
/// the constraint unsatisfiable and reports a wipeout rather than an error.
PropagationOutcome alldifferent_gac(const Instance& inst);

/// Exact counting-interval filtering for amongConst (scope [N, X...]).
/// Throws UnsupportedInstanceError when the scope repeats a variable.
PropagationOutcome among_const_gac(const Instance& inst);

/// Flow-based filtering for gcc with constant occurrence intervals. Values
/// absent from `occ` are unconstrained. Throws UnsupportedInstanceError when
/// the scope repeats a variable.
PropagationOutcome gcc_fixed_gac(const Instance& inst);

/// Sliding-window DP filtering for cardpath (scope [N, sequence...]).
/// Throws UnsupportedInstanceError on repeated scope variables and
/// ScaleLimitError when d^k exceeds `dk_limit` (d = widest sequence domain,
/// k = window arity).
PropagationOutcome cardpath_dp_gac(const Instance& inst,
                                   long long dk_limit = 4096);

}  // namespace gaclab

#endif  // GACLAB_PROPAGATORS_HPP
