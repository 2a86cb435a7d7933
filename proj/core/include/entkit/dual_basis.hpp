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

#include <vector>

#include "entkit/basis.hpp"

namespace entkit {

/// Biorthogonal partner of a complete linearly independent basis:
/// |dual_i> is the unique unit vector orthogonal to every |psi_j>, j != i.
/// Phases are fixed so each overlap c_i = <dual_i|psi_i> is real positive
/// (c_i <= 1, with equality exactly when the basis is orthogonal at i).
struct DualBasis {
  std::vector<PureState> duals;
  std::vector<Complex> overlaps;  // c_i
  double condition_number = 0.0;  // of the basis amplitude matrix
};

/// Single matrix inversion; refuses rank-deficient input and bases with
/// condition number above tol::kConditionLimit.
DualBasis dual_basis(const BasisSet& basis);

/// Frobenius norm of  sum_i c_i^{-1} |psi_i><dual_i|  -  I.
double check_identity_decomposition(const BasisSet& basis, const DualBasis& dual);

/// l2 distance between (1/sqrt(D)) sum_i c_i^{-1} |psi_i*>|dual_i>  and the
/// standard maximally entangled state on (D, D).
double check_mes_decomposition(const BasisSet& basis, const DualBasis& dual);

}  // namespace entkit
