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

#include "entkit/state.hpp"

namespace entkit {

/// A list of states of one shape with cached Gram data and rank flags.
/// Completeness means size == D (a basis of the full space).
class BasisSet {
 public:
  explicit BasisSet(std::vector<PureState> states);

  const SystemShape& shape() const { return shape_; }
  int size() const { return static_cast<int>(states_.size()); }
  const PureState& state(int i) const { return states_[static_cast<std::size_t>(i)]; }
  const std::vector<PureState>& states() const { return states_; }

  /// Gram matrix G_ij = <psi_i|psi_j>.
  const Eigen::MatrixXcd& gram() const { return gram_; }

  /// Columns are the states' amplitude vectors.
  const Eigen::MatrixXcd& amplitude_matrix() const { return columns_; }

  bool complete() const { return size() == static_cast<int>(shape_.total_dim()); }
  bool linearly_independent() const { return linearly_independent_; }
  bool orthonormal() const { return orthonormal_; }
  double condition_number() const { return condition_number_; }

 private:
  SystemShape shape_;
  std::vector<PureState> states_;
  Eigen::MatrixXcd columns_;
  Eigen::MatrixXcd gram_;
  bool linearly_independent_ = false;
  bool orthonormal_ = false;
  double condition_number_ = 0.0;
};

}  // namespace entkit
