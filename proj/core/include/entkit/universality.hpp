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

#include <optional>
#include <vector>

#include "entkit/transform.hpp"

namespace entkit {

struct RepReachability {
  bool reachable = false;
  bool from_certificate = false;  // a supplied certificate verified directly
  double residual = 0.0;
  std::optional<ProductOperator> witness;  // verified certificate or found operator
  bool border_rank_escape = false;
};

struct UniversalityVerdict {
  bool universal = false;
  std::vector<RepReachability> reps;
};

/// A resource is universal for unambiguous discrimination iff its conjugate
/// reaches every maximally entangled representative of the target space.
/// The representative list is caller-supplied (for 2x2x2: {GHZ, W}).
/// Optional certificates are verified before any search.
UniversalityVerdict universality_unambiguous(
    const PureState& phi, const std::vector<PureState>& maximal_reps, const AlsOptions& opts = {},
    const std::vector<std::optional<ProductOperator>>& certificates = {});

/// The built-in representative list for three qubits.
std::vector<PureState> maximal_reps_qubits3();

}  // namespace entkit
