// Copyright 2026 The entkit Authors
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

// Acceptance runner: executes the full verification suite and prints one
// pass/fail line per criterion. Exit code 0 iff everything passes.

#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <string>

#include "entkit/verification.hpp"

int main(int argc, char** argv) {
  std::uint64_t seed = 7;
  for (int i = 1; i < argc; ++i) {
    if (std::strcmp(argv[i], "--seed") == 0 && i + 1 < argc) {
      seed = std::strtoull(argv[i + 1], nullptr, 10);
      ++i;
    }
  }

  const auto results = entkit::run_verification_suite(seed);
  int failures = 0;
  int index = 0;
  for (const auto& r : results) {
    ++index;
    std::string detail;
    for (const auto& d : r.details) {
      if (!detail.empty()) detail += ", ";
      detail += d;
    }
    std::printf("%s  %2d/%zu  %s — %s  (%s)\n", r.pass ? "PASS" : "FAIL", index, results.size(),
                r.anchor.c_str(), r.id.c_str(), detail.c_str());
    if (!r.pass) ++failures;
  }
  std::printf("%d/%zu criteria passed (seed %llu)\n", static_cast<int>(results.size()) - failures,
              results.size(), static_cast<unsigned long long>(seed));
  return failures == 0 ? EXIT_SUCCESS : EXIT_FAILURE;
}
