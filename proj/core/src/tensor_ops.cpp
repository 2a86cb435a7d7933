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

#include "entkit/tensor_ops.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "entkit/errors.hpp"

namespace entkit {

namespace {

// Flat indices of `parties` (ascending) and of the complement, as strides.
struct CutIndexer {
  std::vector<int> side;
  std::vector<int> comp;
  std::int64_t side_dim = 1;
  std::int64_t comp_dim = 1;

  CutIndexer(const SystemShape& shape, const std::vector<int>& parties) {
    side = parties;
    std::sort(side.begin(), side.end());
    comp = complement_parties(parties, shape.party_count());
    for (int p : side) side_dim *= shape.dim(p);
    for (int p : comp) comp_dim *= shape.dim(p);
  }
};

}  // namespace

std::vector<int> complement_parties(const std::vector<int>& parties, int n) {
  std::set<int> seen;
  for (int p : parties) {
    if (p < 0 || p >= n) {
      throw ShapeError("party index " + std::to_string(p) + " out of range");
    }
    if (!seen.insert(p).second) {
      throw ShapeError("duplicate party index " + std::to_string(p));
    }
  }
  std::vector<int> comp;
  for (int p = 0; p < n; ++p) {
    if (!seen.count(p)) comp.push_back(p);
  }
  return comp;
}

PureState tensor_product(const PureState& a, const PureState& b, TensorMode mode) {
  const std::int64_t da = a.dim();
  const std::int64_t db = b.dim();
  Eigen::VectorXcd plain(da * db);
  for (std::int64_t i = 0; i < da; ++i) {
    plain.segment(i * db, db) = a.amp(i) * b.amps();
  }

  SystemShape shape;
  Eigen::VectorXcd amps;
  if (mode == TensorMode::kConcat) {
    shape = a.shape().concat(b.shape());
    amps = std::move(plain);
  } else {
    if (a.shape().party_count() != b.shape().party_count()) {
      throw ShapeError("pairing-mode tensor product needs equal party counts: " +
                       a.shape().str() + " vs " + b.shape().str());
    }
    shape = a.shape().paired_with(b.shape());
    const auto perm = pairing_permutation(a.shape(), b.shape());
    amps.resize(da * db);
    for (std::int64_t i = 0; i < da * db; ++i) {
      amps(perm[static_cast<std::size_t>(i)]) = plain(i);
    }
  }

  if (a.is_normalized() && b.is_normalized()) {
    return PureState::normalized(std::move(shape), std::move(amps));
  }
  return PureState::raw(std::move(shape), std::move(amps));
}

PureState conjugate(const PureState& s) {
  Eigen::VectorXcd amps = s.amps().conjugate();
  if (s.is_normalized()) {
    return PureState::normalized(s.shape(), std::move(amps), s.label());
  }
  return PureState::raw(s.shape(), std::move(amps), s.label());
}

Complex inner(const PureState& a, const PureState& b) {
  if (a.shape() != b.shape()) {
    throw ShapeError("inner product shape mismatch: " + a.shape().str() + " vs " + b.shape().str());
  }
  return a.amps().dot(b.amps());
}

Eigen::VectorXcd apply_single_factor(const Eigen::VectorXcd& v, const SystemShape& shape, int party,
                                     const Eigen::MatrixXcd& m) {
  const int d = shape.dim(party);
  if (m.cols() != d) {
    throw ShapeError("factor has " + std::to_string(m.cols()) + " columns, party dim is " + std::to_string(d));
  }
  const std::int64_t inner_stride = shape.stride(party);
  const std::int64_t outer = v.size() / (d * inner_stride);
  const int e = static_cast<int>(m.rows());
  Eigen::VectorXcd out = Eigen::VectorXcd::Zero(outer * e * inner_stride);
  for (std::int64_t o = 0; o < outer; ++o) {
    for (int r = 0; r < e; ++r) {
      auto dst = out.segment((o * e + r) * inner_stride, inner_stride);
      for (int c = 0; c < d; ++c) {
        if (m(r, c) != Complex(0, 0)) {
          dst += m(r, c) * v.segment((o * d + c) * inner_stride, inner_stride);
        }
      }
    }
  }
  return out;
}

ApplyResult apply_product(const ProductOperator& op, const PureState& s, bool renormalize) {
  if (op.input_shape() != s.shape()) {
    throw ShapeError("operator input shape " + op.input_shape().str() + " does not match state shape " +
                     s.shape().str());
  }
  Eigen::VectorXcd v = s.amps();
  SystemShape cur = s.shape();
  for (int k = 0; k < op.party_count(); ++k) {
    v = apply_single_factor(v, cur, k, op.factor(k));
    std::vector<int> dims = cur.dims();
    dims[static_cast<std::size_t>(k)] = static_cast<int>(op.factor(k).rows());
    cur = SystemShape(dims);
  }
  const double n = v.norm();
  if (renormalize) {
    if (n < 1e-300) {
      throw ShapeError("operator image is zero; cannot renormalize");
    }
    return {PureState::normalized(op.output_shape(), std::move(v)), n};
  }
  return {PureState::raw(op.output_shape(), std::move(v)), n};
}

HermitianOperator partial_trace(const PureState& s, const std::vector<int>& keep) {
  if (keep.empty()) {
    throw ShapeError("partial_trace: keep set must be nonempty");
  }
  const SystemShape& shape = s.shape();
  CutIndexer idx(shape, keep);

  // Rows ordered by the caller's party order, columns by sorted complement.
  std::vector<int> row_parties = keep;
  SystemShape out_shape = shape.subshape(row_parties);
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(out_shape.total_dim(), idx.comp_dim);
  const std::int64_t D = shape.total_dim();
  for (std::int64_t i = 0; i < D; ++i) {
    const auto multi = shape.multi_index(i);
    std::int64_t r = 0;
    for (std::size_t a = 0; a < row_parties.size(); ++a) {
      r = r * shape.dim(row_parties[a]) + multi[static_cast<std::size_t>(row_parties[a])];
    }
    std::int64_t c = 0;
    for (int p : idx.comp) {
      c = c * shape.dim(p) + multi[static_cast<std::size_t>(p)];
    }
    m(r, c) = s.amp(i);
  }
  return HermitianOperator(out_shape, m * m.adjoint());
}

Eigen::MatrixXcd cut_matrix(const PureState& s, const std::vector<int>& side) {
  const SystemShape& shape = s.shape();
  CutIndexer idx(shape, side);
  if (idx.comp.empty() || side.empty()) {
    throw ShapeError("bipartition sides must both be nonempty");
  }
  Eigen::MatrixXcd m(idx.side_dim, idx.comp_dim);
  const std::int64_t D = shape.total_dim();
  for (std::int64_t i = 0; i < D; ++i) {
    const auto multi = shape.multi_index(i);
    std::int64_t r = 0;
    for (int p : idx.side) r = r * shape.dim(p) + multi[static_cast<std::size_t>(p)];
    std::int64_t c = 0;
    for (int p : idx.comp) c = c * shape.dim(p) + multi[static_cast<std::size_t>(p)];
    m(r, c) = s.amp(i);
  }
  return m;
}

double cut_entropy(const PureState& s, const std::vector<int>& side) {
  if (side.empty() || complement_parties(side, s.shape().party_count()).empty()) {
    throw ShapeError("cut_entropy needs a bipartition with two nonempty sides");
  }
  const Eigen::VectorXd lambda = partial_trace(s, side).eigenvalues();
  double entropy = 0.0;
  for (Eigen::Index i = 0; i < lambda.size(); ++i) {
    const double p = lambda(i);
    if (p > 1e-15) {
      entropy -= p * std::log2(p);
    }
  }
  return entropy;
}

int schmidt_rank_bipartite(const PureState& s, const std::vector<int>& side, double rel_tol) {
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(cut_matrix(s, side));
  const Eigen::VectorXd& sv = svd.singularValues();
  if (sv.size() == 0) return 0;
  const double top = sv(0);
  if (top <= 0.0) return 0;
  int rank = 0;
  for (Eigen::Index i = 0; i < sv.size(); ++i) {
    if (sv(i) > rel_tol * top) ++rank;
  }
  return rank;
}

PureState max_entangled(int d) {
  if (d < 1) {
    throw ShapeError("max_entangled needs d >= 1");
  }
  Eigen::VectorXcd amps = Eigen::VectorXcd::Zero(static_cast<std::int64_t>(d) * d);
  const double c = 1.0 / std::sqrt(static_cast<double>(d));
  for (int i = 0; i < d; ++i) {
    amps(static_cast<std::int64_t>(i) * d + i) = Complex(c, 0.0);
  }
  return PureState::normalized(SystemShape({d, d}), std::move(amps));
}

std::vector<std::int64_t> pairing_permutation(const SystemShape& outer, const SystemShape& inner) {
  if (outer.party_count() != inner.party_count()) {
    throw ShapeError("pairing permutation needs equal party counts");
  }
  const int n = outer.party_count();
  const std::int64_t da = outer.total_dim();
  const std::int64_t db = inner.total_dim();
  std::vector<std::int64_t> perm(static_cast<std::size_t>(da * db));
  for (std::int64_t ia = 0; ia < da; ++ia) {
    const auto a = outer.multi_index(ia);
    for (std::int64_t ib = 0; ib < db; ++ib) {
      const auto b = inner.multi_index(ib);
      std::int64_t p = 0;
      for (int k = 0; k < n; ++k) {
        p = p * (outer.dim(k) * inner.dim(k)) +
            (static_cast<std::int64_t>(a[static_cast<std::size_t>(k)]) * inner.dim(k) +
             b[static_cast<std::size_t>(k)]);
      }
      perm[static_cast<std::size_t>(ia * db + ib)] = p;
    }
  }
  return perm;
}

PureState permute_parties(const PureState& s, const std::vector<int>& order) {
  const SystemShape& shape = s.shape();
  const int n = shape.party_count();
  if (static_cast<int>(order.size()) != n) {
    throw ShapeError("party permutation has wrong length");
  }
  // must be a permutation of 0..n-1
  std::vector<bool> seen(static_cast<std::size_t>(n), false);
  for (int p : order) {
    if (p < 0 || p >= n || seen[static_cast<std::size_t>(p)]) {
      throw ShapeError("invalid party permutation");
    }
    seen[static_cast<std::size_t>(p)] = true;
  }
  SystemShape out_shape = shape.subshape(order);
  Eigen::VectorXcd amps(s.dim());
  const std::int64_t D = shape.total_dim();
  for (std::int64_t i = 0; i < D; ++i) {
    const auto multi = shape.multi_index(i);
    std::vector<int> pm(static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k) {
      pm[static_cast<std::size_t>(k)] = multi[static_cast<std::size_t>(order[static_cast<std::size_t>(k)])];
    }
    amps(out_shape.flat_index(pm)) = s.amp(i);
  }
  if (s.is_normalized()) {
    return PureState::normalized(std::move(out_shape), std::move(amps), s.label());
  }
  return PureState::raw(std::move(out_shape), std::move(amps), s.label());
}

}  // namespace entkit
