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
#include <vector>

#include "entkit/shape.hpp"
#include "entkit/tolerances.hpp"

namespace entkit {

/// One local (possibly rectangular) matrix per party, representing the
/// Kronecker product M = M^(1) (x) ... (x) M^(N). Factor k maps
/// C^{cols_k} -> C^{rows_k}.
class ProductOperator {
 public:
  explicit ProductOperator(std::vector<Eigen::MatrixXcd> factors);

  static ProductOperator identity(const SystemShape& shape);

  int party_count() const { return static_cast<int>(factors_.size()); }
  const Eigen::MatrixXcd& factor(int k) const { return factors_[static_cast<std::size_t>(k)]; }
  const std::vector<Eigen::MatrixXcd>& factors() const { return factors_; }

  SystemShape input_shape() const;
  SystemShape output_shape() const;

  /// Full Kronecker matrix (desk scale only).
  Eigen::MatrixXcd dense() const;

  /// tr(M^dag M) = prod_k ||M^(k)||_F^2.
  double gram_trace() const;

  double max_factor_norm() const;

  /// First factor multiplied by s.
  ProductOperator scaled(Complex s) const;

  /// Uniform per-factor rescale so that tr(M^dag M) equals `target`.
  ProductOperator with_gram_trace(double target) const;

  /// Entrywise complex conjugate of every factor.
  ProductOperator conjugated() const;

 private:
  std::vector<Eigen::MatrixXcd> factors_;
};

/// Party-wise composition (outer ∘ inner): factor k is outer_k * inner_k.
/// Realizes transitivity of stochastic local reachability.
ProductOperator compose(const ProductOperator& outer, const ProductOperator& inner);

}  // namespace entkit
