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
#include "entkit/povm.hpp"
#include "entkit/product_operator.hpp"

namespace entkit {

/// Converse construction: from product matrices ms[i] realizing
/// conjugate(phi) -> dual_i (checked), build the separable measurement with
/// elements c |phi_i><phi_i|, phi_i = (I (x) M_i)|MES'> per party, each M_i
/// rescaled to tr(M_i^dag M_i) = D', and c = 1/lambda_max(sum |phi_i><phi_i|).
SeparablePOVM build_unambiguous_povm(const PureState& phi, const BasisSet& basis,
                                     const std::vector<ProductOperator>& ms);

struct UnambiguityTable {
  Eigen::VectorXd eps;  // diagonal values <Phi ps_i| Pi_i |Phi psi_i>
  double offdiag_max = 0.0;
  bool pass = false;
};

/// delta-pattern check: passes iff every eps_i > tol::kEps and every
/// cross term is below tol::kNorm.
UnambiguityTable check_unambiguous(const SeparablePOVM& povm, const PureState& phi,
                                   const BasisSet& basis);

struct BellDiscriminationResult {
  // success_probability(j, branch) = P(outcome j | prepared j, Bell branch)
  Eigen::MatrixXd success_probability;
  double min_success = 0.0;
  bool pass = false;
};

/// Teleport-then-measure protocol with the hub resource: every party k < N
/// teleports its share to party N through a d_k-dimensional MES pair; party N
/// measures in the (orthonormal) basis. All Bell branches are enumerated.
BellDiscriminationResult perfect_discrimination_bell(const BasisSet& basis);

}  // namespace entkit
