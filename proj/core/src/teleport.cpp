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

#include "entkit/teleport.hpp"

#include <cmath>
#include <numbers>

#include "entkit/errors.hpp"
#include "entkit/tensor_ops.hpp"

namespace entkit {

Eigen::MatrixXcd weyl_matrix(int d, int shift, int phase) {
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(d, d);
  const double w = 2.0 * std::numbers::pi / static_cast<double>(d);
  for (int j = 0; j < d; ++j) {
    m((j + shift) % d, j) = std::polar(1.0, w * static_cast<double>(phase) * static_cast<double>(j));
  }
  return m;
}

PureState bell_branch(const PureState& s, int a, int b, int receiver_after_removal, int shift,
                      int phase) {
  const SystemShape& shape = s.shape();
  const int n = shape.party_count();
  if (a == b || a < 0 || b < 0 || a >= n || b >= n) {
    throw ShapeError("bell_branch: invalid measured parties");
  }
  const int d = shape.dim(a);
  if (shape.dim(b) != d) {
    throw ShapeError("bell_branch: measured parties must have equal dimension");
  }

  std::vector<int> rest;
  for (int k = 0; k < n; ++k) {
    if (k != a && k != b) rest.push_back(k);
  }
  if (rest.empty()) {
    throw ShapeError("bell_branch: nothing would remain after the measurement");
  }
  SystemShape out_shape = shape.subshape(rest);
  if (receiver_after_removal < 0 || receiver_after_removal >= out_shape.party_count()) {
    throw ShapeError("bell_branch: receiver index out of range");
  }
  if (out_shape.dim(receiver_after_removal) != d) {
    throw ShapeError("bell_branch: receiver dimension must match the teleported qudit");
  }

  // <B_pq| has components (1/sqrt d) conj(w^{q m}) at a = m+p mod d, b = m.
  const double wstep = 2.0 * std::numbers::pi / static_cast<double>(d);
  const double scale = 1.0 / std::sqrt(static_cast<double>(d));
  Eigen::VectorXcd out = Eigen::VectorXcd::Zero(out_shape.total_dim());
  std::vector<int> full(static_cast<std::size_t>(n));
  for (std::int64_t ro = 0; ro < out_shape.total_dim(); ++ro) {
    const auto rm = out_shape.multi_index(ro);
    for (std::size_t i = 0; i < rest.size(); ++i) {
      full[static_cast<std::size_t>(rest[i])] = rm[i];
    }
    Complex acc(0, 0);
    for (int m = 0; m < d; ++m) {
      full[static_cast<std::size_t>(a)] = (m + shift) % d;
      full[static_cast<std::size_t>(b)] = m;
      acc += std::polar(1.0, -wstep * static_cast<double>(phase) * static_cast<double>(m)) *
             s.amp(shape.flat_index(full));
    }
    out(ro) = scale * acc;
  }

  out = apply_single_factor(out, out_shape, receiver_after_removal, weyl_matrix(d, shift, phase));
  return PureState::raw(std::move(out_shape), std::move(out));
}

PureState teleport(const PureState& s, const PureState& resource, int sent_party, int dest_slot) {
  const SystemShape& shape = s.shape();
  const int n = shape.party_count();
  if (sent_party < 0 || sent_party >= n) {
    throw ShapeError("teleport: sent party out of range");
  }
  const int d = shape.dim(sent_party);
  const PureState mes = max_entangled(d);
  if (resource.shape() != mes.shape() ||
      (resource.amps() - mes.amps()).norm() > tol::kNorm) {
    throw ShapeError("teleport: resource must be the standard maximally entangled state of dim " +
                     std::to_string(d));
  }

  // registers: [s parties..., helper A' = n, receiver B = n+1]
  const PureState total = tensor_product(s, resource, TensorMode::kConcat);

  // after removing (sent, A'), the receiver sits at the end
  const int receiver_after = n - 1;
  PureState relocated;
  double prob_sum = 0.0;
  bool first = true;
  for (int p = 0; p < d; ++p) {
    for (int q = 0; q < d; ++q) {
      PureState branch = bell_branch(total, sent_party, n, receiver_after, p, q);
      const double prob = branch.norm() * branch.norm();
      prob_sum += prob;
      PureState normalized = PureState::normalized(branch.shape(), branch.amps());
      if (first) {
        relocated = normalized;
        first = false;
      } else {
        const double fid = std::abs(inner(relocated, normalized));
        if (fid < 1.0 - tol::kNorm) {
          throw PreconditionError("teleport: branch outcome differs from the relocated state");
        }
      }
    }
  }
  if (std::abs(prob_sum - s.norm() * s.norm()) > tol::kNorm) {
    throw PreconditionError("teleport: branch probabilities do not sum to the input norm");
  }

  // move the received register (currently last) to dest_slot
  const int m = relocated.shape().party_count();
  if (dest_slot < 0 || dest_slot >= m) {
    throw ShapeError("teleport: destination slot out of range");
  }
  std::vector<int> order;
  for (int k = 0; k < m - 1; ++k) order.push_back(k);
  order.insert(order.begin() + dest_slot, m - 1);
  return permute_parties(relocated, order);
}

}  // namespace entkit
