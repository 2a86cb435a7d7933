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

#include "entkit/hermitian_operator.hpp"

#include "entkit/errors.hpp"

namespace entkit {

HermitianOperator::HermitianOperator(SystemShape shape, Eigen::MatrixXcd matrix, double hermiticity_tol)
    : shape_(std::move(shape)), mat_(std::move(matrix)) {
  if (mat_.rows() != mat_.cols() || mat_.rows() != shape_.total_dim()) {
    throw ShapeError("operator matrix must be D x D with D = " + std::to_string(shape_.total_dim()));
  }
  const double dev = (mat_ - mat_.adjoint()).norm();
  if (dev > hermiticity_tol * std::max<double>(1.0, mat_.norm())) {
    throw ShapeError("matrix is not Hermitian (deviation " + std::to_string(dev) + ")");
  }
  mat_ = 0.5 * (mat_ + mat_.adjoint().eval());
}

Eigen::VectorXd HermitianOperator::eigenvalues() const {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(mat_, Eigen::EigenvaluesOnly);
  return es.eigenvalues();
}

double HermitianOperator::min_eigenvalue() const { return eigenvalues().minCoeff(); }

bool HermitianOperator::positive_semidefinite(double floor) const {
  return min_eigenvalue() >= -floor;
}

Eigen::MatrixXcd HermitianOperator::sqrt_psd(double floor) const {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(mat_);
  Eigen::VectorXd w = es.eigenvalues();
  const double wmax = w.maxCoeff();
  // zero modes carry O(eps) noise whose square root would pollute the result
  // at the 1e-8 level; clamp everything below the PSD floor (relative) to 0
  const double cut = floor * std::max(wmax, 0.0);
  for (Eigen::Index i = 0; i < w.size(); ++i) {
    if (w(i) < -floor) {
      throw ShapeError("operator is not PSD: eigenvalue " + std::to_string(w(i)));
    }
    w(i) = w(i) > cut ? std::sqrt(w(i)) : 0.0;
  }
  return es.eigenvectors() * w.asDiagonal() * es.eigenvectors().adjoint();
}

Complex HermitianOperator::expectation(const Eigen::VectorXcd& v) const {
  if (v.size() != mat_.rows()) {
    throw ShapeError("expectation: vector length mismatch");
  }
  return v.dot(mat_ * v);
}

}  // namespace entkit
