// Copyright 2026 The Authors.
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

// Acceptance gate: runs the nine verification criteria and prints one
// pass/fail line per criterion. Exits nonzero if any criterion fails.

#include <cstdio>
#include <cstdlib>
#include <cstring>

#include "matsplit/verify.hpp"

int main(int argc, char** argv) {
  std::uint64_t seed = matsplit::kDefaultSeed;
  for (int i = 1; i < argc; ++i) {
    if (std::strcmp(argv[i], "--seed") == 0 && i + 1 < argc) {
      seed = std::strtoull(argv[++i], nullptr, 10);
    } else {
      std::fprintf(stderr, "usage: %s [--seed <u64>]\n", argv[0]);
      return 2;
    }
  }

  bool all_passed = true;
  for (int id = 1; id <= 9; ++id) {
    matsplit::CriterionResult r = matsplit::run_criterion(id, seed);
    all_passed = all_passed && r.passed;
    std::printf("[%s] criterion %d %-28s (%7.2f s) %s\n",
                r.passed ? "PASS" : "FAIL", r.id, r.name.c_str(), r.seconds,
                r.detail.c_str());
    std::fflush(stdout);
  }
  return all_passed ? 0 : 1;
}
