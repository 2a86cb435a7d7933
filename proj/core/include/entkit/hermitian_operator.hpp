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

#include <Eigen/Dense>

#include "entkit/shape.hpp"
#include "entkit/tolerances.hpp"

namespace entkit {

/// Dense Hermitian D x D operator over a SystemShape (reduced states,
/// measurement elements). Construction rejects matrices that are not
/// Hermitian within tolerance and stores the exact Hermitian part.
class HermitianOperator {
 public:
  HermitianOperator(SystemShape shape, Eigen::MatrixXcd matrix, double hermiticity_tol = tol::kNorm);

  const SystemShape& shape() const { return shape_; }
  const Eigen::MatrixXcd& matrix() const { return mat_; }
  std::int64_t dim() const { return mat_.rows(); }

  double trace() const { return mat_.trace().real(); }
  Eigen::VectorXd eigenvalues() const;
  double min_eigenvalue() const;
  bool positive_semidefinite(double floor = tol::kPsd) const;

  /// Principal square root with eigenvalues clamped at -floor -> 0.
  Eigen::MatrixXcd sqrt_psd(double floor = tol::kPsd) const;

  Complex expectation(const Eigen::VectorXcd& v) const;

 private:
  SystemShape shape_;
  Eigen::MatrixXcd mat_;
};

}  // namespace entkit
