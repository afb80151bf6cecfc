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

#ifndef GACLAB_SUITES_HPP
#define GACLAB_SUITES_HPP

#include <string>
#include <vector>

#include "gaclab/core.hpp"
#include "gaclab/engine.hpp"
#include "json.hpp"

namespace gaclab {

/// Knobs shared by every suite. `count` overrides the per-suite default case
/// count when positive; scale "small" divides the defaults by ten for quick
/// runs. Identical seed + knobs give identical reports.
struct SuiteConfig {
  unsigned long seed = 7;
  int count = 0;
  std::string scale;
  SearchBudget budget;
};

struct SuiteCase {
  std::string id;
  bool ok = false;
  std::string detail;      // on failure: names the case and disagreeing pair
  nlohmann::json record;   // one streamable report line
};

struct SuiteReport {
  std::string suite;
  int cases = 0;
  int passed = 0;
  int failed = 0;
  std::vector<SuiteCase> case_reports;
  std::vector<std::string> failures;
  bool ok() const { return failed == 0 && passed == cases; }
  nlohmann::json summary_json() const;
};

/// The runnable suites: reducers, propagators, gadgets, paper-examples,
/// smoke.
std::vector<std::string> suite_names();
SuiteReport run_suite(const std::string& name, const SuiteConfig& cfg);

/// Literal superset sweep against the engine's max_gac on the random corpus
/// (instances whose fixpoint removes more than six values are recorded as
/// not applicable).
SuiteReport maxgac_sweep_check(const SuiteConfig& cfg);

/// Exact size assertions on the gadget constructions.
SuiteReport structural_checks();

/// Idempotence, contractance, single-pass sufficiency, witness soundness on
/// the random corpus.
SuiteReport engine_law_checks(const SuiteConfig& cfg);

}  // namespace gaclab

#endif  // GACLAB_SUITES_HPP
