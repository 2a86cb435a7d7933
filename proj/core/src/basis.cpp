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

#include "entkit/basis.hpp"

#include <limits>

#include "entkit/errors.hpp"
#include "entkit/tolerances.hpp"

namespace entkit {

BasisSet::BasisSet(std::vector<PureState> states) : states_(std::move(states)) {
  if (states_.empty()) {
    throw ShapeError("BasisSet needs at least one state");
  }
  shape_ = states_[0].shape();
  for (const auto& s : states_) {
    if (s.shape() != shape_) {
      throw ShapeError("all basis states must share one shape");
    }
  }
  const std::int64_t d = shape_.total_dim();
  const int n = size();
  columns_.resize(d, n);
  for (int i = 0; i < n; ++i) {
    columns_.col(i) = states_[static_cast<std::size_t>(i)].amps();
  }
  gram_ = columns_.adjoint() * columns_;

  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(columns_);
  const auto& sv = svd.singularValues();
  const double top = sv(0);
  const double bottom = sv(sv.size() - 1);
  linearly_independent_ = (n <= d) && (bottom > tol::kRank * top);
  condition_number_ = bottom > 0.0 ? top / bottom : std::numeric_limits<double>::infinity();
  orthonormal_ =
      (gram_ - Eigen::MatrixXcd::Identity(n, n)).cwiseAbs().maxCoeff() < tol::kNorm;
}

}  // namespace entkit
