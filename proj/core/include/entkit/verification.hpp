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

#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace entkit {

/// One verification criterion, keyed to its source anchor.
struct CriterionResult {
  std::string id;      // stable machine key, e.g. "dual-decompositions"
  std::string anchor;  // source anchor, e.g. "Lemma 1"
  bool pass = false;
  std::vector<std::string> details;  // deterministic key=value lines
};

/// Runs the whole verification suite with pinned tolerances. Deterministic
/// for a fixed seed; total runtime well under a minute.
std::vector<CriterionResult> run_verification_suite(std::uint64_t seed);

}  // namespace entkit
