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


// Acceptance runner: one PASS/FAIL line per criterion. With
// --set-equality it runs only the DP-versus-brute-force set comparison.

#include <cstring>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include "antiembed/sweep.hpp"

namespace {

using antiembed::SweepConfig;
using antiembed::SweepReport;

SweepReport run(const std::string& suite, const std::string& report_dir) {
  SweepConfig cfg;
  cfg.suite = suite;
  if (!report_dir.empty()) cfg.output = report_dir + "/" + suite + ".json";
  return antiembed::run_sweep(cfg);
}

}  // namespace

int main(int argc, char** argv) {
  bool set_equality = false;
  std::string report_dir;
  for (int i = 1; i < argc; ++i) {
    if (std::strcmp(argv[i], "--set-equality") == 0) {
      set_equality = true;
    } else if (std::strcmp(argv[i], "--reports") == 0 && i + 1 < argc) {
      report_dir = argv[++i];
    } else {
      std::cerr << "usage: acceptance [--set-equality] [--reports DIR]\n";
      return 64;
    }
  }

  if (set_equality) {
    const SweepReport r = run("good-arc-sets", report_dir);
    std::cout << "criterion 2 (good-arc set equality, n<=5, k<=3): " << (r.pass ? "PASS" : "FAIL") << "  "
              << r.summary << "\n";
    return r.pass ? 0 : 1;
  }

  const std::vector<std::pair<int, std::vector<std::string>>> plan = {
      {1, {"prop3-exhaustive"}},
      {2, {"good-arc-bounds"}},
      {3, {"selector-audit"}},
      {4, {"pg-end-to-end", "hypothesis-class-empty"}},
      {5, {"burr-tightness"}},
      {6, {"differential"}},
      {7, {"reversal"}},
  };
  bool all = true;
  for (const auto& [criterion, suites] : plan) {
    bool pass = true;
    std::string detail;
    for (const std::string& s : suites) {
      const SweepReport r = run(s, report_dir);
      pass = pass && r.pass;
      detail += (detail.empty() ? "" : "; ") + r.summary + " in " + std::to_string(static_cast<long>(r.elapsed_ms)) +
                " ms";
    }
    all = all && pass;
    std::cout << "criterion " << criterion << ": " << (pass ? "PASS" : "FAIL") << "  " << detail << std::endl;
  }
  std::cout << "criterion 2 set equality is reported by 'acceptance --set-equality'\n";
  return all ? 0 : 1;
}
