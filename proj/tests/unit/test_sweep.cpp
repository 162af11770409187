// Copyright 2026 The antiembed Authors
//
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


#include <gtest/gtest.h>

#include "antiembed/errors.hpp"
#include "antiembed/sweep.hpp"
#include "json.hpp"

namespace antiembed {
namespace {

TEST(Sweep, SuiteTableCoversEveryCriterion) {
  std::vector<int> seen(8, 0);
  for (const SuiteInfo& s : sweep_suites()) ++seen.at(s.criterion);
  for (int c = 1; c <= 7; ++c) EXPECT_GT(seen[c], 0) << c;
}

TEST(Sweep, MalformedConfigRejected) {
  SweepConfig bad;
  bad.suite = "no-such-suite";
  EXPECT_THROW(validate_config(bad), InvalidInput);
  SweepConfig too_big;
  too_big.suite = "prop3-exhaustive";
  too_big.n_max = 9;
  EXPECT_THROW(run_sweep(too_big), InvalidInput);
}

TEST(Sweep, SmallBurrReport) {
  SweepConfig cfg;
  cfg.suite = "burr-tightness";
  cfg.k_max = 3;
  cfg.jobs = 2;
  const SweepReport rep = run_sweep(cfg);
  EXPECT_TRUE(rep.pass) << rep.summary;
  const auto j = nlohmann::json::parse(rep.json);
  EXPECT_EQ(j.at("schema"), 1);
  EXPECT_EQ(j.at("criterion"), 5);
  EXPECT_EQ(j.at("failures"), 0);
}

TEST(Sweep, ReportIsIndependentOfJobs) {
  SweepConfig cfg;
  cfg.suite = "differential";
  cfg.samples = 200;
  cfg.jobs = 1;
  auto one = nlohmann::json::parse(run_sweep(cfg).json);
  cfg.jobs = 4;
  auto four = nlohmann::json::parse(run_sweep(cfg).json);
  for (auto* j : {&one, &four}) {
    j->erase("elapsed_ms");
    j->at("config").erase("jobs");
  }
  EXPECT_EQ(one, four);
}

TEST(Sweep, CounterexamplesCarryTheInstance) {
  SweepConfig cfg;
  cfg.suite = "good-arc-sets";
  cfg.samples = 2000;
  const SweepReport rep = run_sweep(cfg);
  const auto j = nlohmann::json::parse(rep.json);
  for (const auto& row : j.at("counterexamples")) {
    EXPECT_TRUE(row.at("instance").contains("host"));
    EXPECT_TRUE(row.at("instance").contains("tree"));
    EXPECT_TRUE(row.at("instance").contains("order"));
  }
}

}  // namespace
}  // namespace antiembed
