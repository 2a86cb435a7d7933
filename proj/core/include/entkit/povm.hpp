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

#include "entkit/shape.hpp"
#include "entkit/state.hpp"

namespace entkit {

/// Positive operators Pi_1..Pi_D (conclusive) plus Pi_{D+1} (inconclusive)
/// summing to the identity on the paired discrimination space. Conclusive
/// elements may carry a rank-one product factorization
/// Pi_i = scale * |phi_i><phi_i| with |phi_i> = (x)_k v_ik.
class SeparablePOVM {
 public:
  /// `elements` holds D+1 matrices, the last being the inconclusive one.
  SeparablePOVM(SystemShape shape, std::vector<Eigen::MatrixXcd> elements,
                std::vector<std::vector<Eigen::VectorXcd>> factor_vectors = {}, double scale = 1.0);

  /// Builds the inconclusive element as I - sum(conclusive).
  static SeparablePOVM from_conclusive(SystemShape shape, std::vector<Eigen::MatrixXcd> conclusive,
                                       std::vector<std::vector<Eigen::VectorXcd>> factor_vectors = {},
                                       double scale = 1.0);

  const SystemShape& shape() const { return shape_; }
  int conclusive_count() const { return static_cast<int>(elements_.size()) - 1; }
  const Eigen::MatrixXcd& element(int i) const { return elements_[static_cast<std::size_t>(i)]; }
  const Eigen::MatrixXcd& inconclusive() const { return elements_.back(); }

  bool has_factorizations() const { return !factors_.empty(); }
  const std::vector<std::vector<Eigen::VectorXcd>>& factor_vectors() const { return factors_; }
  double scale() const { return scale_; }

  /// Every element conjugated entrywise (positivity and completeness carry over).
  SeparablePOVM conjugated() const;

  /// Conclusive elements multiplied by `factor` (must keep the sum below I);
  /// the inconclusive element absorbs the difference.
  SeparablePOVM rescaled(double factor) const;

  double completeness_residual() const;
  double min_element_eigenvalue() const;

 private:
  SystemShape shape_;
  std::vector<Eigen::MatrixXcd> elements_;
  std::vector<std::vector<Eigen::VectorXcd>> factors_;
  double scale_ = 1.0;
};

}  // namespace entkit
