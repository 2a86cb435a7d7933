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
#include <optional>
#include <vector>

#include "entkit/state.hpp"
#include "entkit/tolerances.hpp"

namespace entkit {

/// Shared knobs for the alternating-least-squares searches. Results are
/// deterministic functions of (inputs, seed); restart r uses an engine
/// derived from (seed, r).
struct AlsOptions {
  int restarts = 64;
  int max_sweeps = 500;
  double tol = tol::kAls;
  double norm_cap = tol::kNormCap;
  std::uint64_t seed = 0;
};

/// One product term: weight * factor_1 (x) ... (x) factor_N, unit factors.
struct CpTerm {
  Complex weight;
  std::vector<Eigen::VectorXcd> factors;
};

struct CpDecomposition {
  SystemShape shape;
  std::vector<CpTerm> terms;

  Eigen::VectorXcd reconstruct() const;
  int rank() const { return static_cast<int>(terms.size()); }
};

/// Outcome of a fixed-rank CP fit of a state tensor.
struct CpFit {
  bool converged = false;  // residual < tol and factor norms within cap
  double residual = 0.0;   // l2 distance  || T - reconstruction ||
  double max_factor_norm = 0.0;
  bool border_escape = false;  // residual was still falling while norms grew
  CpDecomposition decomposition;
  std::vector<double> residual_trajectory;
  std::vector<double> norm_trajectory;
};

/// Least-squares CP fit with `rank` terms. A closed-form route (bipartite
/// SVD, or an eigenvector pencil when some party dimension reaches the rank)
/// is tried first; seeded random ALS restarts otherwise.
CpFit cp_fit(const PureState& s, int rank, const AlsOptions& opts = {});

/// Closed-form exact decomposition attempt. Returns a decomposition only
/// when its reconstruction residual is at machine level; degenerate
/// (border-rank) tensors and unsupported orientations yield nullopt.
std::optional<CpDecomposition> cp_exact(const PureState& s, int rank);

/// Border-rank escape signature: the search got close (residual < 0.2)
/// without converging, and the representation shows genuine cancellation
/// (its size measure well above the honest baseline). Hard plateaus against
/// unreachable targets keep O(1) residuals and baseline-sized factors.
bool escape_signature(double residual, double tol, double cancellation, double baseline);

}  // namespace entkit
