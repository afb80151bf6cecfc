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

#ifndef GACLAB_ENGINE_HPP
#define GACLAB_ENGINE_HPP

#include <optional>

#include "gaclab/core.hpp"

namespace gaclab {

struct SearchBudget {
  // Counts value placements across every search a question performs.
  long long max_tuples_explored = 10'000'000;
};

struct QuestionResult {
  bool answer = false;
  std::optional<Tuple> witness;            // satisfying tuple, when one exists
  std::optional<DomainMap> domain_witness; // filtered domains, when computed
  long long tuples_explored = 0;
};

// The five questions. Each validates the instance, then answers by budgeted
// depth-first search with exact leaf checks. Throws BudgetExhaustedError when
// the placement budget runs out before the answer is decided.

/// Does value `v` of scope variable `x` appear in some satisfying tuple
/// drawn from the current domains? Asking about a value outside D(x) is
/// answered false; `x` must be in the constraint scope.
QuestionResult gac_support(const Instance& inst, const VarId& x, Value v,
                           const SearchBudget& budget = {});

/// Does every value of every scope variable have a support? Holds vacuously
/// when every scope domain is empty.
QuestionResult is_it_gac(const Instance& inst, const SearchBudget& budget = {});

/// Is there at least one satisfying tuple within the current domains?
QuestionResult no_gac_wipeout(const Instance& inst,
                              const SearchBudget& budget = {});

/// Filters every scope domain to its supported values; other variables are
/// untouched. The result is in `domain_witness`, and `answer` reports
/// whether all scope domains stayed non-empty.
QuestionResult gac_domain(const Instance& inst, const SearchBudget& budget = {});

/// Is `candidate` exactly the maximal arc-consistent subdomain? A variable
/// absent from `candidate` stands for its unchanged instance domain.
QuestionResult max_gac(const Instance& inst, const DomainMap& candidate,
                       const SearchBudget& budget = {});

// Reductions between the questions. Each answers its headline question by
// calling only the bracketed one, at polynomial blowup; results must agree
// with the direct routes above.

QuestionResult gac_support_via_wipeout(const Instance& inst, const VarId& x,
                                       Value v, const SearchBudget& budget = {});
QuestionResult no_gac_wipeout_via_support(const Instance& inst,
                                          const SearchBudget& budget = {});
QuestionResult gac_support_via_domain(const Instance& inst, const VarId& x,
                                      Value v, const SearchBudget& budget = {});
QuestionResult gac_domain_via_support(const Instance& inst,
                                      const SearchBudget& budget = {});
QuestionResult max_gac_via_support(const Instance& inst,
                                   const DomainMap& candidate,
                                   const SearchBudget& budget = {});
QuestionResult is_it_gac_via_maxgac(const Instance& inst,
                                    const SearchBudget& budget = {});

}  // namespace gaclab

#endif  // GACLAB_ENGINE_HPP
