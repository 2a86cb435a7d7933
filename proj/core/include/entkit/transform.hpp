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

#include "entkit/cp_decomposition.hpp"
#include "entkit/product_operator.hpp"
#include "entkit/state.hpp"

namespace entkit {

struct TransformCheck {
  bool ok = false;
  Complex mu;         // least-squares scale: target ~ mu * M * phi
  double residual;    // || mu * M * phi - target ||
};

/// Checks whether `m` realizes phi -> target up to a complex scale.
/// mu is <target|M phi>/||M phi||^2 (phase included). Throws on zero image.
TransformCheck verify_transform(const PureState& phi, const PureState& target,
                                const ProductOperator& m, double tolerance = tol::kNorm);

struct TransformSearch {
  bool found = false;
  std::optional<ProductOperator> op;  // best candidate; ||M phi|| = 1, <target|M phi> >= 0
  double residual = 2.0;              // l2 distance after phase alignment
  bool border_rank_escape = false;
  std::vector<double> residual_trajectory;       // best start's sweep history
  std::vector<double> amplification_trajectory;  // 1/||M phi|| at unit-Frobenius factors
  int sweeps_used = 0;
  int starts_used = 0;
};

/// Searches for a product matrix with M|phi> proportional to |target>,
/// minimizing the projective distance by alternating per-party updates.
/// Starts from a local-principal-axis match and CP-matched constructions
/// before seeded random restarts; deterministic given opts.seed.
TransformSearch find_transform(const PureState& phi, const PureState& target,
                               const AlsOptions& opts = {});

}  // namespace entkit
