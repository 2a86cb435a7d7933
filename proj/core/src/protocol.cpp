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

#include "entkit/protocol.hpp"

#include <cmath>

#include "entkit/discrimination.hpp"
#include "entkit/errors.hpp"
#include "entkit/hermitian_operator.hpp"
#include "entkit/tensor_ops.hpp"

namespace entkit {

std::vector<ProtocolBranch> protocol_from_measurement(const PureState& phi, const BasisSet& basis,
                                                      const SeparablePOVM& povm) {
  if (!basis.complete() || !basis.linearly_independent()) {
    throw PreconditionError("the forward protocol needs a complete linearly independent basis");
  }
  const UnambiguityTable table = check_unambiguous(povm, phi, basis);
  if (!table.pass) {
    throw PreconditionError("POVM fails the unambiguity check (offdiag " +
                            std::to_string(table.offdiag_max) + ", min eps " +
                            std::to_string(table.eps.minCoeff()) + ")");
  }

  const std::int64_t dp = phi.shape().total_dim();
  const std::int64_t d = basis.shape().total_dim();
  const SystemShape paired = phi.shape().paired_with(basis.shape());

  // conj(Phi) (x) MES(D) laid out as (paired(H', H_1), H_2); MES contributes
  // delta_{h1,h2}/sqrt(D)
  const auto perm = pairing_permutation(phi.shape(), basis.shape());
  Eigen::MatrixXcd grouped = Eigen::MatrixXcd::Zero(dp * d, d);
  const double c = 1.0 / std::sqrt(static_cast<double>(d));
  for (std::int64_t a = 0; a < dp; ++a) {
    const Complex amp = std::conj(phi.amp(a)) * c;
    for (std::int64_t h = 0; h < d; ++h) {
      grouped(perm[static_cast<std::size_t>(a * d + h)], h) = amp;
    }
  }

  std::vector<ProtocolBranch> branches;
  branches.reserve(static_cast<std::size_t>(povm.conclusive_count()));
  for (int x = 0; x < povm.conclusive_count(); ++x) {
    const Eigen::MatrixXcd root =
        HermitianOperator(paired, povm.element(x).conjugate()).sqrt_psd();
    const Eigen::MatrixXcd branch = root * grouped;
    ProtocolBranch out;
    out.outcome = x;
    out.probability = branch.squaredNorm();
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(branch, Eigen::ComputeThinV);
    const auto& sv = svd.singularValues();
    out.output_impurity = (sv.size() > 1 && sv(0) > 0.0) ? sv(1) / sv(0) : 0.0;
    out.output = PureState::normalized(basis.shape(), svd.matrixV().col(0).conjugate());
    branches.push_back(std::move(out));
  }
  return branches;
}

}  // namespace entkit
