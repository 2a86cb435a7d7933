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

#include "entkit/povm.hpp"

#include "entkit/errors.hpp"
#include "entkit/hermitian_operator.hpp"
#include "entkit/tolerances.hpp"

namespace entkit {

SeparablePOVM::SeparablePOVM(SystemShape shape, std::vector<Eigen::MatrixXcd> elements,
                             std::vector<std::vector<Eigen::VectorXcd>> factor_vectors, double scale)
    : shape_(std::move(shape)), elements_(std::move(elements)), factors_(std::move(factor_vectors)),
      scale_(scale) {
  if (elements_.size() < 2) {
    throw ShapeError("a POVM needs at least one conclusive and one inconclusive element");
  }
  const std::int64_t dim = shape_.total_dim();
  for (const auto& e : elements_) {
    if (e.rows() != dim || e.cols() != dim) {
      throw ShapeError("POVM element dimension mismatch with shape " + shape_.str());
    }
    // Hermiticity + PSD floor; HermitianOperator validates and we keep the raw matrix.
    HermitianOperator h(shape_, e);
    if (!h.positive_semidefinite(tol::kPsd)) {
      throw PreconditionError("POVM element is not positive semidefinite (min eig " +
                              std::to_string(h.min_eigenvalue()) + ")");
    }
  }
  const double comp = completeness_residual();
  if (comp > tol::kNorm * static_cast<double>(conclusive_count())) {
    throw PreconditionError("POVM elements do not sum to the identity (residual " +
                            std::to_string(comp) + ")");
  }
  if (!factors_.empty()) {
    if (static_cast<int>(factors_.size()) != conclusive_count()) {
      throw ShapeError("factorization list must cover every conclusive element");
    }
    for (int i = 0; i < conclusive_count(); ++i) {
      const auto& vecs = factors_[static_cast<std::size_t>(i)];
      if (static_cast<int>(vecs.size()) != shape_.party_count()) {
        throw ShapeError("factorization party count mismatch");
      }
      Eigen::VectorXcd prod = Eigen::VectorXcd::Constant(1, Complex(1, 0));
      for (int k = 0; k < shape_.party_count(); ++k) {
        const auto& v = vecs[static_cast<std::size_t>(k)];
        if (v.size() != shape_.dim(k)) {
          throw ShapeError("factorization vector dimension mismatch at party " + std::to_string(k));
        }
        Eigen::VectorXcd next(prod.size() * v.size());
        for (Eigen::Index a = 0; a < prod.size(); ++a) {
          next.segment(a * v.size(), v.size()) = prod(a) * v;
        }
        prod = std::move(next);
      }
      const Eigen::MatrixXcd rank1 = scale_ * (prod * prod.adjoint());
      if ((rank1 - elements_[static_cast<std::size_t>(i)]).norm() >
          tol::kNorm * std::max(1.0, rank1.norm())) {
        throw PreconditionError("factorization does not reproduce POVM element " + std::to_string(i));
      }
    }
  }
}

SeparablePOVM SeparablePOVM::from_conclusive(SystemShape shape,
                                             std::vector<Eigen::MatrixXcd> conclusive,
                                             std::vector<std::vector<Eigen::VectorXcd>> factor_vectors,
                                             double scale) {
  const std::int64_t dim = shape.total_dim();
  Eigen::MatrixXcd sum = Eigen::MatrixXcd::Zero(dim, dim);
  for (const auto& e : conclusive) sum += e;
  conclusive.push_back(Eigen::MatrixXcd::Identity(dim, dim) - sum);
  return SeparablePOVM(std::move(shape), std::move(conclusive), std::move(factor_vectors), scale);
}

SeparablePOVM SeparablePOVM::conjugated() const {
  std::vector<Eigen::MatrixXcd> els;
  els.reserve(elements_.size());
  for (const auto& e : elements_) els.push_back(e.conjugate());
  std::vector<std::vector<Eigen::VectorXcd>> fs;
  fs.reserve(factors_.size());
  for (const auto& vecs : factors_) {
    std::vector<Eigen::VectorXcd> row;
    row.reserve(vecs.size());
    for (const auto& v : vecs) row.push_back(v.conjugate());
    fs.push_back(std::move(row));
  }
  return SeparablePOVM(shape_, std::move(els), std::move(fs), scale_);
}

SeparablePOVM SeparablePOVM::rescaled(double factor) const {
  if (factor <= 0.0 || factor > 1.0) {
    throw PreconditionError("rescaled: factor must be in (0, 1] to keep the sum below identity");
  }
  std::vector<Eigen::MatrixXcd> els;
  els.reserve(elements_.size());
  Eigen::MatrixXcd sum = Eigen::MatrixXcd::Zero(shape_.total_dim(), shape_.total_dim());
  for (int i = 0; i < conclusive_count(); ++i) {
    els.push_back(factor * elements_[static_cast<std::size_t>(i)]);
    sum += els.back();
  }
  els.push_back(Eigen::MatrixXcd::Identity(shape_.total_dim(), shape_.total_dim()) - sum);
  return SeparablePOVM(shape_, std::move(els), {}, scale_ * factor);
}

double SeparablePOVM::completeness_residual() const {
  Eigen::MatrixXcd sum = Eigen::MatrixXcd::Zero(shape_.total_dim(), shape_.total_dim());
  for (const auto& e : elements_) sum += e;
  return (sum - Eigen::MatrixXcd::Identity(shape_.total_dim(), shape_.total_dim())).norm();
}

double SeparablePOVM::min_element_eigenvalue() const {
  double m = std::numeric_limits<double>::infinity();
  for (const auto& e : elements_) {
    m = std::min(m, HermitianOperator(shape_, e).min_eigenvalue());
  }
  return m;
}

}  // namespace entkit
