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

#include "entkit/product_operator.hpp"

#include <cmath>

#include "entkit/errors.hpp"

namespace entkit {

ProductOperator::ProductOperator(std::vector<Eigen::MatrixXcd> factors) : factors_(std::move(factors)) {
  if (factors_.empty()) {
    throw ShapeError("ProductOperator needs at least one factor");
  }
  for (const auto& f : factors_) {
    if (f.rows() < 1 || f.cols() < 1) {
      throw ShapeError("ProductOperator factors must be non-empty matrices");
    }
    if (!f.allFinite()) {
      throw ShapeError("ProductOperator factor contains non-finite entries");
    }
  }
}

ProductOperator ProductOperator::identity(const SystemShape& shape) {
  std::vector<Eigen::MatrixXcd> fs;
  fs.reserve(static_cast<std::size_t>(shape.party_count()));
  for (int k = 0; k < shape.party_count(); ++k) {
    fs.push_back(Eigen::MatrixXcd::Identity(shape.dim(k), shape.dim(k)));
  }
  return ProductOperator(std::move(fs));
}

SystemShape ProductOperator::input_shape() const {
  std::vector<int> dims;
  dims.reserve(factors_.size());
  for (const auto& f : factors_) dims.push_back(static_cast<int>(f.cols()));
  return SystemShape(std::move(dims));
}

SystemShape ProductOperator::output_shape() const {
  std::vector<int> dims;
  dims.reserve(factors_.size());
  for (const auto& f : factors_) dims.push_back(static_cast<int>(f.rows()));
  return SystemShape(std::move(dims));
}

Eigen::MatrixXcd ProductOperator::dense() const {
  Eigen::MatrixXcd out = Eigen::MatrixXcd::Constant(1, 1, Complex(1, 0));
  for (const auto& f : factors_) {
    Eigen::MatrixXcd next(out.rows() * f.rows(), out.cols() * f.cols());
    for (Eigen::Index r = 0; r < out.rows(); ++r) {
      for (Eigen::Index c = 0; c < out.cols(); ++c) {
        next.block(r * f.rows(), c * f.cols(), f.rows(), f.cols()) = out(r, c) * f;
      }
    }
    out = std::move(next);
  }
  return out;
}

double ProductOperator::gram_trace() const {
  double t = 1.0;
  for (const auto& f : factors_) t *= f.squaredNorm();
  return t;
}

double ProductOperator::max_factor_norm() const {
  double m = 0.0;
  for (const auto& f : factors_) m = std::max(m, f.norm());
  return m;
}

ProductOperator ProductOperator::scaled(Complex s) const {
  std::vector<Eigen::MatrixXcd> fs = factors_;
  fs[0] *= s;
  return ProductOperator(std::move(fs));
}

ProductOperator ProductOperator::with_gram_trace(double target) const {
  const double t = gram_trace();
  if (t <= 0.0 || target <= 0.0) {
    throw ShapeError("with_gram_trace needs positive norms");
  }
  const double s = std::pow(target / t, 1.0 / (2.0 * static_cast<double>(factors_.size())));
  std::vector<Eigen::MatrixXcd> fs = factors_;
  for (auto& f : fs) f *= s;
  return ProductOperator(std::move(fs));
}

ProductOperator ProductOperator::conjugated() const {
  std::vector<Eigen::MatrixXcd> fs;
  fs.reserve(factors_.size());
  for (const auto& f : factors_) fs.push_back(f.conjugate());
  return ProductOperator(std::move(fs));
}

ProductOperator compose(const ProductOperator& outer, const ProductOperator& inner) {
  if (outer.party_count() != inner.party_count()) {
    throw ShapeError("compose needs equal party counts");
  }
  if (outer.input_shape() != inner.output_shape()) {
    throw ShapeError("compose: inner output shape " + inner.output_shape().str() +
                     " does not match outer input shape " + outer.input_shape().str());
  }
  std::vector<Eigen::MatrixXcd> fs;
  fs.reserve(static_cast<std::size_t>(outer.party_count()));
  for (int k = 0; k < outer.party_count(); ++k) {
    fs.push_back(outer.factor(k) * inner.factor(k));
  }
  return ProductOperator(std::move(fs));
}

}  // namespace entkit
