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

#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace antiembed {

// A named batch of property checks. Each suite backs one acceptance criterion.
struct SuiteInfo {
  std::string id;
  int criterion = 0;
  std::string description;
};

const std::vector<SuiteInfo>& sweep_suites();

// Negative numeric fields select the suite default.
struct SweepConfig {
  std::string suite;
  std::uint64_t seed = 20261018;
  int jobs = 0;  // 0 = hardware concurrency
  long samples = -1;
  int n_max = -1;
  int k_max = -1;
  int q = -1;
  std::string output;  // JSON report path; empty writes nothing
};

struct SweepReport {
  std::string suite;
  int criterion = 0;
  bool pass = false;
  long instances = 0;
  long failures = 0;
  long failed_checkpoints = 0;
  double elapsed_ms = 0.0;
  std::string summary;  // one human-readable line
  std::string json;     // full report, schema 1
};

// Throws InvalidInput on an unknown suite or out-of-range parameters, before
// any instance runs.
void validate_config(const SweepConfig& cfg);

SweepReport run_sweep(const SweepConfig& cfg);

}  // namespace antiembed
