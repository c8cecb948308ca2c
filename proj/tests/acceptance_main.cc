// Copyright 2026 The netcon Authors
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

// Runs acceptance criteria 1-8 and prints one PASS/FAIL line per criterion.
// Arguments are instance files added to the determinism check.

#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include "netcon/selftest.h"

int main(int argc, char** argv) {
  netcon::SelfTestOptions options;
  for (int i = 1; i < argc; ++i) options.fixture_paths.emplace_back(argv[i]);
  options.on_result = [](const netcon::CriterionResult& r) {
    std::cout << netcon::FormatCriterion(r) << std::endl;
  };
  const auto results = netcon::RunSelfTest(options);
  int failed = 0;
  for (const auto& r : results) failed += r.passed ? 0 : 1;
  std::cout << (results.size() - static_cast<size_t>(failed)) << "/" << results.size()
            << " criteria passed" << std::endl;
  return failed == 0 ? 0 : 1;
}
