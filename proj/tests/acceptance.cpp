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

// Acceptance gate. Each criterion prints exactly one PASS or FAIL line
// (failed criteria add indented detail lines) and the process exits with
// the number of failed criteria.

#include <algorithm>
#include <chrono>
#include <iostream>
#include <string>

#include "gaclab/core.hpp"
#include "gaclab/engine.hpp"
#include "gaclab/propagators.hpp"
#include "gaclab/suites.hpp"

using namespace gaclab;

namespace {

// Pinned bounds. Case floors are minimums, wall-clock caps are maximums.
constexpr long long kBudget = 10'000'000;
constexpr int kMinReducerCases = 500;
constexpr int kMinPropagatorCases = 4 * 300;
constexpr int kMinGadgetCases = 13 * 200;
constexpr int kMinSweepCases = 500;
constexpr int kMinLawCases = 500;
constexpr long long kPaperExampleCapMs = 1'000;
constexpr long long kReducersCapMs = 120'000;
constexpr long long kGadgetsCapMs = 600'000;
constexpr long long kPropagatorsCapMs = 300'000;
constexpr long long kSmokeCapMs = 1'000;
constexpr int kSmokeScale = 200;

int failures = 0;

struct Timer {
  std::chrono::steady_clock::time_point start =
      std::chrono::steady_clock::now();
  long long ms() const {
    return std::chrono::duration_cast<std::chrono::milliseconds>(
               std::chrono::steady_clock::now() - start)
        .count();
  }
};

void report(int index, const std::string& name, bool pass,
            const std::string& detail, const SuiteReport* rep = nullptr) {
  std::cout << (pass ? "PASS" : "FAIL") << "  " << index << ". " << name
            << "  [" << detail << "]\n";
  if (!pass) {
    ++failures;
    if (rep) {
      const size_t shown = std::min<size_t>(rep->failures.size(), 5);
      for (size_t i = 0; i < shown; ++i)
        std::cout << "      " << rep->failures[i] << "\n";
      if (rep->failures.size() > shown)
        std::cout << "      ... " << rep->failures.size() - shown
                  << " more\n";
    }
  }
}

std::string stats(const SuiteReport& rep, long long ms) {
  return std::to_string(rep.cases) + " cases, " + std::to_string(ms) + " ms";
}

bool has_case(const SuiteReport& rep, const std::string& id) {
  return std::any_of(rep.case_reports.begin(), rep.case_reports.end(),
                     [&](const SuiteCase& c) { return c.id == id; });
}

void criterion1_paper_example() {
  Timer t;
  const SuiteReport rep = run_suite("paper-examples", SuiteConfig{});
  const long long ms = t.ms();
  const bool pass = rep.ok() && ms < kPaperExampleCapMs &&
                    has_case(rep, "paper-examples/disjoint-prunings") &&
                    has_case(rep, "paper-examples/disjoint-decomposition-ac");
  report(1, "worked-example regression", pass, stats(rep, ms), &rep);
}

void criterion2_reducers() {
  Timer t;
  const SuiteReport rep = run_suite("reducers", SuiteConfig{});
  const long long ms = t.ms();
  const bool pass =
      rep.ok() && rep.cases >= kMinReducerCases && ms < kReducersCapMs;
  report(2, "reducer equivalence", pass, stats(rep, ms), &rep);
}

void criterion3_maxgac_sweep() {
  Timer t;
  const SuiteReport rep = maxgac_sweep_check(SuiteConfig{});
  const long long ms = t.ms();
  const bool pass = rep.ok() && rep.cases >= kMinSweepCases;
  report(3, "maximal-subdomain sweep", pass, stats(rep, ms), &rep);
}

void criterion4_gadgets() {
  Timer t;
  const SuiteReport rep = run_suite("gadgets", SuiteConfig{});
  const long long ms = t.ms();
  int oversized = 0;
  for (const auto& c : rep.case_reports)
    if (c.record.contains("oversized")) ++oversized;
  const bool pass =
      rep.ok() && rep.cases >= kMinGadgetCases && ms < kGadgetsCapMs;
  report(4, "gadget iff fidelity", pass,
         stats(rep, ms) + ", " + std::to_string(oversized) + " oversized",
         &rep);
}

void criterion5_structural() {
  Timer t;
  const SuiteReport rep = structural_checks();
  report(5, "gadget structural sizes", rep.ok() && rep.cases > 0,
         stats(rep, t.ms()), &rep);
}

void criterion6_propagators() {
  Timer t;
  const SuiteReport rep = run_suite("propagators", SuiteConfig{});
  const long long ms = t.ms();
  const bool pass =
      rep.ok() && rep.cases >= kMinPropagatorCases && ms < kPropagatorsCapMs;
  report(6, "propagator equivalence", pass, stats(rep, ms), &rep);
}

void criterion7_tractability() {
  Instance big;
  for (int i = 1; i <= kSmokeScale; ++i) {
    big.variables.push_back("X" + std::to_string(i));
    Domain d(kSmokeScale);
    for (int v = 0; v < kSmokeScale; ++v) d[v] = v + 1;
    big.domains.push_back(std::move(d));
  }
  big.constraint.kind = Kind::AllDifferent;
  big.constraint.scope = big.variables;

  Timer t;
  const PropagationOutcome out = alldifferent_gac(big);
  const long long prop_ms = t.ms();
  const bool prop_ok =
      out.removed.empty() && !out.wipeout && prop_ms < kSmokeCapMs;

  bool exhausted = false;
  long long explored = 0;
  try {
    gac_domain(big, SearchBudget{kBudget});
  } catch (const BudgetExhaustedError& e) {
    exhausted = true;
    explored = e.explored();
  }
  report(7, "tractability divide", prop_ok && exhausted,
         "propagator " + std::to_string(prop_ms) + " ms, generic stopped at " +
             std::to_string(explored) + "/" + std::to_string(kBudget));
}

void criterion8_engine_laws() {
  Timer t;
  const SuiteReport rep = engine_law_checks(SuiteConfig{});
  const bool pass = rep.ok() && rep.cases >= kMinLawCases;
  report(8, "engine laws", pass, stats(rep, t.ms()), &rep);
}

}  // namespace

int main() {
  criterion1_paper_example();
  criterion2_reducers();
  criterion3_maxgac_sweep();
  criterion4_gadgets();
  criterion5_structural();
  criterion6_propagators();
  criterion7_tractability();
  criterion8_engine_laws();
  std::cout << 8 - failures << "/8 criteria passed\n";
  return failures;
}
