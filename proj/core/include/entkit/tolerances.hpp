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

#include <complex>

namespace entkit {

using Complex = std::complex<double>;

// Global numeric thresholds. Chosen so that exact-algebra residuals
// (~1e-14 at D <= 64) sit well below every acceptance bound.
namespace tol {

/// Norm / orthogonality / residual tolerance for exact identities.
inline constexpr double kNorm = 1e-10;

/// Eigenvalue floor below which an operator no longer counts as PSD.
inline constexpr double kPsd = 1e-10;

/// Relative singular-value cutoff for numeric rank decisions.
inline constexpr double kRank = 1e-8;

/// Convergence target for alternating-least-squares searches.
inline constexpr double kAls = 1e-9;

/// Positivity threshold for "detected with positive probability".
inline constexpr double kEps = 1e-12;

/// Threshold on the normalized 3-tangle separating GHZ-type from W-type.
inline constexpr double kTangle = 1e-8;

/// Basis condition number beyond which dual bases are refused.
inline constexpr double kConditionLimit = 1e12;

/// Factor-norm cap for ALS searches (border-rank escape guard).
inline constexpr double kNormCap = 1e6;

}  // namespace tol
}  // namespace entkit
