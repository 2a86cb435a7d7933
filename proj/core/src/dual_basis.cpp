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

#include "entkit/dual_basis.hpp"

#include "entkit/errors.hpp"
#include "entkit/tensor_ops.hpp"
#include "entkit/tolerances.hpp"

namespace entkit {

DualBasis dual_basis(const BasisSet& basis) {
  if (!basis.complete()) {
    throw PreconditionError("dual_basis needs a complete basis (D states)");
  }
  if (!basis.linearly_independent()) {
    throw SingularBasisError("basis is rank-deficient; duals do not exist",
                             basis.condition_number());
  }
  if (basis.condition_number() > tol::kConditionLimit) {
    throw SingularBasisError("basis condition number exceeds the inversion limit",
                             basis.condition_number());
  }

  const Eigen::MatrixXcd& s = basis.amplitude_matrix();
  const std::int64_t d = s.rows();
  Eigen::MatrixXcd sinv = s.partialPivLu().solve(Eigen::MatrixXcd::Identity(d, d));

  DualBasis out;
  out.condition_number = basis.condition_number();
  out.duals.reserve(static_cast<std::size_t>(d));
  out.overlaps.reserve(static_cast<std::size_t>(d));
  for (std::int64_t i = 0; i < d; ++i) {
    // Row i of S^{-1} annihilates every psi_j, j != i; its conjugate is the
    // dual ket. Normalizing makes c_i = 1/||row|| real positive.
    Eigen::VectorXcd ket = sinv.row(i).conjugate().transpose();
    const double n = ket.norm();
    out.duals.push_back(PureState::normalized(basis.shape(), ket / n));
    out.overlaps.push_back(Complex(1.0 / n, 0.0));
  }
  return out;
}

double check_identity_decomposition(const BasisSet& basis, const DualBasis& dual) {
  const std::int64_t d = basis.shape().total_dim();
  if (static_cast<std::int64_t>(dual.duals.size()) != d || basis.size() != d) {
    throw ShapeError("identity decomposition needs D states and D duals");
  }
  Eigen::MatrixXcd acc = Eigen::MatrixXcd::Zero(d, d);
  for (std::int64_t i = 0; i < d; ++i) {
    acc += (1.0 / dual.overlaps[static_cast<std::size_t>(i)]) *
           (basis.state(static_cast<int>(i)).amps() *
            dual.duals[static_cast<std::size_t>(i)].amps().adjoint());
  }
  return (acc - Eigen::MatrixXcd::Identity(d, d)).norm();
}

double check_mes_decomposition(const BasisSet& basis, const DualBasis& dual) {
  const std::int64_t d = basis.shape().total_dim();
  if (static_cast<std::int64_t>(dual.duals.size()) != d || basis.size() != d) {
    throw ShapeError("MES decomposition needs D states and D duals");
  }
  Eigen::VectorXcd acc = Eigen::VectorXcd::Zero(d * d);
  const double scale = 1.0 / std::sqrt(static_cast<double>(d));
  for (std::int64_t i = 0; i < d; ++i) {
    const Eigen::VectorXcd left = basis.state(static_cast<int>(i)).amps().conjugate();
    const Eigen::VectorXcd& right = dual.duals[static_cast<std::size_t>(i)].amps();
    const Complex w = scale / dual.overlaps[static_cast<std::size_t>(i)];
    for (std::int64_t a = 0; a < d; ++a) {
      acc.segment(a * d, d) += w * left(a) * right;
    }
  }
  return (acc - max_entangled(static_cast<int>(d)).amps()).norm();
}

}  // namespace entkit
