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

#include "entkit/discrimination.hpp"

#include <cmath>

#include "entkit/dual_basis.hpp"
#include "entkit/errors.hpp"
#include "entkit/teleport.hpp"
#include "entkit/tensor_ops.hpp"
#include "entkit/transform.hpp"

namespace entkit {

SeparablePOVM build_unambiguous_povm(const PureState& phi, const BasisSet& basis,
                                     const std::vector<ProductOperator>& ms) {
  if (!basis.complete() || !basis.linearly_independent()) {
    throw PreconditionError("build_unambiguous_povm needs a complete linearly independent basis");
  }
  if (phi.shape().party_count() != basis.shape().party_count()) {
    throw ShapeError("resource and basis must have the same party count");
  }
  const int d_count = basis.size();
  if (static_cast<int>(ms.size()) != d_count) {
    throw ShapeError("need one product matrix per basis state");
  }
  const double dp = static_cast<double>(phi.shape().total_dim());

  const DualBasis duals = dual_basis(basis);
  const PureState phi_conj = conjugate(phi);

  std::vector<ProductOperator> scaled;
  scaled.reserve(ms.size());
  for (int i = 0; i < d_count; ++i) {
    ProductOperator m = ms[static_cast<std::size_t>(i)].with_gram_trace(dp);
    const TransformCheck chk =
        verify_transform(phi_conj, duals.duals[static_cast<std::size_t>(i)], m);
    if (!chk.ok) {
      throw PreconditionError("matrix " + std::to_string(i) +
                              " does not transform conj(phi) into the dual state (residual " +
                              std::to_string(chk.residual) + ")");
    }
    scaled.push_back(std::move(m));
  }

  // phi_i = (I (x) M_i)|MES'> assembled per paired party:
  // v_ik = (1/sqrt(d'_k)) sum_a |a> (x) M_i^(k)|a>
  const SystemShape paired = phi.shape().paired_with(basis.shape());
  std::vector<std::vector<Eigen::VectorXcd>> factor_vecs;
  std::vector<Eigen::VectorXcd> product_states;
  factor_vecs.reserve(static_cast<std::size_t>(d_count));
  product_states.reserve(static_cast<std::size_t>(d_count));
  for (int i = 0; i < d_count; ++i) {
    std::vector<Eigen::VectorXcd> vecs;
    Eigen::VectorXcd full = Eigen::VectorXcd::Constant(1, Complex(1, 0));
    for (int k = 0; k < phi.shape().party_count(); ++k) {
      const Eigen::MatrixXcd& mk = scaled[static_cast<std::size_t>(i)].factor(k);
      const int dpk = static_cast<int>(mk.cols());
      const int dk = static_cast<int>(mk.rows());
      Eigen::VectorXcd v(static_cast<std::int64_t>(dpk) * dk);
      const double c = 1.0 / std::sqrt(static_cast<double>(dpk));
      for (int a = 0; a < dpk; ++a) {
        v.segment(static_cast<std::int64_t>(a) * dk, dk) = c * mk.col(a);
      }
      Eigen::VectorXcd next(full.size() * v.size());
      for (Eigen::Index b = 0; b < full.size(); ++b) {
        next.segment(b * v.size(), v.size()) = full(b) * v;
      }
      full = std::move(next);
      vecs.push_back(std::move(v));
    }
    factor_vecs.push_back(std::move(vecs));
    product_states.push_back(std::move(full));
  }

  // transported biorthogonality: <(Phi (x) psi_j)|phi_i> vanishes off the diagonal
  const auto perm = pairing_permutation(phi.shape(), basis.shape());
  const std::int64_t dtot = paired.total_dim();
  std::vector<Eigen::VectorXcd> probes;
  probes.reserve(static_cast<std::size_t>(d_count));
  for (int j = 0; j < d_count; ++j) {
    Eigen::VectorXcd plain(dtot);
    const std::int64_t db = basis.shape().total_dim();
    for (std::int64_t a = 0; a < phi.shape().total_dim(); ++a) {
      plain.segment(a * db, db) = phi.amp(a) * basis.state(j).amps();
    }
    Eigen::VectorXcd p(dtot);
    for (std::int64_t idx = 0; idx < dtot; ++idx) {
      p(perm[static_cast<std::size_t>(idx)]) = plain(idx);
    }
    probes.push_back(std::move(p));
  }
  for (int i = 0; i < d_count; ++i) {
    for (int j = 0; j < d_count; ++j) {
      const Complex ov = probes[static_cast<std::size_t>(j)].dot(product_states[static_cast<std::size_t>(i)]);
      if (i != j && std::abs(ov) > 10.0 * tol::kNorm) {
        throw PreconditionError("transported biorthogonality violated at (" + std::to_string(i) +
                                "," + std::to_string(j) + ")");
      }
      if (i == j && std::abs(ov) < tol::kEps) {
        throw PreconditionError("conclusive overlap vanished at " + std::to_string(i));
      }
    }
  }

  Eigen::MatrixXcd sum = Eigen::MatrixXcd::Zero(dtot, dtot);
  for (const auto& p : product_states) sum += p * p.adjoint();
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(sum, Eigen::EigenvaluesOnly);
  const double lam_max = es.eigenvalues().maxCoeff();
  const double c = 1.0 / lam_max;

  std::vector<Eigen::MatrixXcd> elements;
  elements.reserve(static_cast<std::size_t>(d_count));
  for (const auto& p : product_states) {
    elements.push_back(c * (p * p.adjoint()));
  }
  return SeparablePOVM::from_conclusive(paired, std::move(elements), std::move(factor_vecs), c);
}

UnambiguityTable check_unambiguous(const SeparablePOVM& povm, const PureState& phi,
                                   const BasisSet& basis) {
  const SystemShape paired = phi.shape().paired_with(basis.shape());
  if (povm.shape() != paired) {
    throw ShapeError("POVM lives on " + povm.shape().str() + ", expected " + paired.str());
  }
  const int d_count = basis.size();
  if (povm.conclusive_count() != d_count) {
    throw ShapeError("POVM has " + std::to_string(povm.conclusive_count()) +
                     " conclusive elements for " + std::to_string(d_count) + " states");
  }

  UnambiguityTable table;
  table.eps.resize(d_count);
  for (int j = 0; j < d_count; ++j) {
    const PureState probe = tensor_product(phi, basis.state(j), TensorMode::kPairParties);
    for (int i = 0; i < d_count; ++i) {
      const double val =
          std::real(probe.amps().dot(povm.element(i) * probe.amps()));
      if (i == j) {
        table.eps(i) = val;
      } else {
        table.offdiag_max = std::max(table.offdiag_max, std::abs(val));
      }
    }
  }
  table.pass = table.offdiag_max < tol::kNorm && table.eps.minCoeff() > tol::kEps;
  return table;
}

BellDiscriminationResult perfect_discrimination_bell(const BasisSet& basis) {
  if (!basis.complete() || !basis.orthonormal()) {
    throw PreconditionError("perfect_discrimination_bell needs a complete orthonormal basis");
  }
  const SystemShape& shape = basis.shape();
  const int n = shape.party_count();
  if (n < 2) {
    throw PreconditionError("the hub protocol needs at least two parties");
  }
  const int d_count = basis.size();

  // Bell branch tuples (p_k, q_k) for parties 1..N-1
  std::int64_t branch_count = 1;
  for (int k = 0; k < n - 1; ++k) {
    branch_count *= static_cast<std::int64_t>(shape.dim(k)) * shape.dim(k);
  }

  BellDiscriminationResult result;
  result.success_probability.resize(d_count, branch_count);
  result.min_success = 1.0;

  for (int j = 0; j < d_count; ++j) {
    // registers: [r_1, h_1, ..., r_{n-1}, h_{n-1}, s_1 ... s_n]
    PureState total = max_entangled(shape.dim(0));
    for (int k = 1; k < n - 1; ++k) {
      total = tensor_product(total, max_entangled(shape.dim(k)));
    }
    total = tensor_product(total, basis.state(j));

    for (std::int64_t br = 0; br < branch_count; ++br) {
      // decode branch into (p_k, q_k), party 1 most significant
      std::vector<int> ps(static_cast<std::size_t>(n - 1));
      std::vector<int> qs(static_cast<std::size_t>(n - 1));
      std::int64_t rem = br;
      for (int k = n - 2; k >= 0; --k) {
        const int d = shape.dim(k);
        qs[static_cast<std::size_t>(k)] = static_cast<int>(rem % d);
        rem /= d;
        ps[static_cast<std::size_t>(k)] = static_cast<int>(rem % d);
        rem /= d;
      }

      PureState state = total;
      // register bookkeeping: tags 0..2(n-1)-1 are (r,h) pairs, then s parties
      std::vector<std::pair<char, int>> tags;
      for (int k = 0; k < n - 1; ++k) {
        tags.emplace_back('r', k);
        tags.emplace_back('h', k);
      }
      for (int k = 0; k < n; ++k) tags.emplace_back('s', k);

      for (int k = 0; k < n - 1; ++k) {
        int pos_s = -1, pos_r = -1, pos_h = -1;
        for (int t = 0; t < static_cast<int>(tags.size()); ++t) {
          if (tags[static_cast<std::size_t>(t)] == std::make_pair('s', k)) pos_s = t;
          if (tags[static_cast<std::size_t>(t)] == std::make_pair('r', k)) pos_r = t;
          if (tags[static_cast<std::size_t>(t)] == std::make_pair('h', k)) pos_h = t;
        }
        // receiver position after removing the two measured registers
        int pos_h_after = pos_h;
        if (pos_s < pos_h) --pos_h_after;
        if (pos_r < pos_h) --pos_h_after;
        state = bell_branch(state, pos_s, pos_r, pos_h_after,
                            ps[static_cast<std::size_t>(k)], qs[static_cast<std::size_t>(k)]);
        std::vector<std::pair<char, int>> next_tags;
        for (int t = 0; t < static_cast<int>(tags.size()); ++t) {
          if (t != pos_s && t != pos_r) next_tags.push_back(tags[static_cast<std::size_t>(t)]);
        }
        tags = std::move(next_tags);
      }

      // remaining registers are [h_1..h_{n-1}, s_n] = the reassembled state
      const double bn = state.norm();
      const double branch_prob = bn * bn;
      PureState final_state = PureState::normalized(state.shape(), state.amps());
      // final shape matches the basis shape register-for-register
      double p_correct = 0.0;
      for (int i = 0; i < d_count; ++i) {
        const double p = std::norm(basis.state(i).amps().dot(final_state.amps()));
        if (i == j) p_correct = p;
      }
      (void)branch_prob;
      result.success_probability(j, br) = p_correct;
      result.min_success = std::min(result.min_success, p_correct);
    }
  }
  result.pass = result.min_success >= 1.0 - tol::kNorm;
  return result;
}

}  // namespace entkit
