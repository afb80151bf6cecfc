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

#include <catch2/catch_amalgamated.hpp>

#include "gaclab/suites.hpp"

using namespace gaclab;

namespace {

SuiteConfig small_config() {
  SuiteConfig cfg;
  cfg.seed = 99;
  cfg.scale = "small";
  return cfg;
}

void require_clean(const SuiteReport& rep) {
  INFO(rep.suite);
  for (const auto& f : rep.failures) INFO(f);
  REQUIRE(rep.cases > 0);
  CHECK(rep.passed + rep.failed == rep.cases);
  CHECK(static_cast<int>(rep.case_reports.size()) == rep.cases);
  REQUIRE(rep.ok());
}

}  // namespace

TEST_CASE("every suite runs clean at small scale") {
  for (const auto& name : suite_names()) {
    require_clean(run_suite(name, small_config()));
  }
}

TEST_CASE("unknown suite names are rejected") {
  CHECK_THROWS_AS(run_suite("no-such-suite", small_config()),
                  InvariantError);
}

TEST_CASE("suite runs are deterministic for a fixed seed") {
  SuiteConfig cfg = small_config();
  SuiteReport a = run_suite("reducers", cfg);
  SuiteReport b = run_suite("reducers", cfg);
  REQUIRE(a.cases == b.cases);
  CHECK(a.summary_json() == b.summary_json());
  for (int i = 0; i < a.cases; ++i) {
    CHECK(a.case_reports[i].id == b.case_reports[i].id);
    CHECK(a.case_reports[i].record == b.case_reports[i].record);
  }

  SuiteConfig other = cfg;
  other.seed = 100;
  SuiteReport c = run_suite("reducers", other);
  CHECK(c.ok());
}

TEST_CASE("case ids name their suite") {
  SuiteReport rep = run_suite("propagators", small_config());
  for (const auto& c : rep.case_reports) {
    CHECK(c.id.rfind("propagators/", 0) == 0);
    CHECK(c.record.contains("case"));
    CHECK(c.record.contains("ok"));
  }
}

TEST_CASE("maxgac sweep agrees with the engine on the corpus") {
  SuiteConfig cfg = small_config();
  require_clean(maxgac_sweep_check(cfg));
}

TEST_CASE("structural checks pin the construction sizes") {
  require_clean(structural_checks());
}

TEST_CASE("engine laws hold on the corpus") {
  require_clean(engine_law_checks(small_config()));
}
