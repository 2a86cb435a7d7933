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

#include "entkit/classify.hpp"

#include <cmath>

#include "entkit/errors.hpp"
#include "entkit/tensor_ops.hpp"

namespace entkit {

std::string to_string(Slocc3Tag tag) {
  switch (tag) {
    case Slocc3Tag::kProduct: return "PRODUCT";
    case Slocc3Tag::kBisepA: return "BISEP_A";
    case Slocc3Tag::kBisepB: return "BISEP_B";
    case Slocc3Tag::kBisepC: return "BISEP_C";
    case Slocc3Tag::kW: return "W";
    case Slocc3Tag::kGHZ: return "GHZ";
  }
  return "?";
}

double three_tangle(const PureState& s) {
  if (s.shape() != SystemShape::qubits(3)) {
    throw ShapeError("three_tangle needs shape 2x2x2");
  }
  const auto a = [&](int i, int j, int k) { return s.amp(4 * i + 2 * j + k); };
  const Complex d1 = a(0, 0, 0) * a(0, 0, 0) * a(1, 1, 1) * a(1, 1, 1) +
                     a(0, 0, 1) * a(0, 0, 1) * a(1, 1, 0) * a(1, 1, 0) +
                     a(0, 1, 0) * a(0, 1, 0) * a(1, 0, 1) * a(1, 0, 1) +
                     a(1, 0, 0) * a(1, 0, 0) * a(0, 1, 1) * a(0, 1, 1);
  const Complex d2 = a(0, 0, 0) * a(0, 0, 1) * a(1, 1, 0) * a(1, 1, 1) +
                     a(0, 0, 0) * a(0, 1, 0) * a(1, 0, 1) * a(1, 1, 1) +
                     a(0, 0, 0) * a(1, 0, 0) * a(0, 1, 1) * a(1, 1, 1) +
                     a(0, 0, 1) * a(0, 1, 0) * a(1, 0, 1) * a(1, 1, 0) +
                     a(0, 0, 1) * a(1, 0, 0) * a(0, 1, 1) * a(1, 1, 0) +
                     a(0, 1, 0) * a(1, 0, 0) * a(0, 1, 1) * a(1, 0, 1);
  const Complex d3 = a(0, 0, 0) * a(0, 1, 1) * a(1, 0, 1) * a(1, 1, 0) +
                     a(0, 0, 1) * a(0, 1, 0) * a(1, 0, 0) * a(1, 1, 1);
  const Complex hyperdet = d1 - 2.0 * d2 + 4.0 * d3;
  return 4.0 * std::abs(hyperdet);
}

Slocc3Class classify3(const PureState& s) {
  if (s.shape() != SystemShape::qubits(3)) {
    throw ShapeError("classify3 needs shape 2x2x2");
  }
  Slocc3Class out;
  out.tangle = three_tangle(s);
  for (int k = 0; k < 3; ++k) {
    out.local_ranks[static_cast<std::size_t>(k)] = schmidt_rank_bipartite(s, {k});
  }
  const int ones =
      static_cast<int>(out.local_ranks[0] == 1) + static_cast<int>(out.local_ranks[1] == 1) +
      static_cast<int>(out.local_ranks[2] == 1);

  if (out.tangle > tol::kTangle) {
    out.tag = Slocc3Tag::kGHZ;
  } else if (ones == 0) {
    out.tag = Slocc3Tag::kW;
  } else if (ones == 3) {
    out.tag = Slocc3Tag::kProduct;
  } else if (out.local_ranks[0] == 1) {
    out.tag = Slocc3Tag::kBisepA;
  } else if (out.local_ranks[1] == 1) {
    out.tag = Slocc3Tag::kBisepB;
  } else {
    out.tag = Slocc3Tag::kBisepC;
  }

  // near-boundary report instead of silent misclassification
  if (out.tangle > 0.1 * tol::kTangle && out.tangle < 10.0 * tol::kTangle) {
    out.near_boundary = true;
  }
  for (int k = 0; k < 3; ++k) {
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(cut_matrix(s, {k}));
    const auto& sv = svd.singularValues();
    const double rel = sv(sv.size() - 1) / sv(0);
    if (rel > 0.1 * tol::kRank && rel < 10.0 * tol::kRank) {
      out.near_boundary = true;
    }
  }
  return out;
}

bool reachable(Slocc3Tag from, Slocc3Tag to) {
  if (from == to) return true;
  switch (from) {
    case Slocc3Tag::kGHZ:
    case Slocc3Tag::kW:
      return to == Slocc3Tag::kBisepA || to == Slocc3Tag::kBisepB || to == Slocc3Tag::kBisepC ||
             to == Slocc3Tag::kProduct;
    case Slocc3Tag::kBisepA:
    case Slocc3Tag::kBisepB:
    case Slocc3Tag::kBisepC:
      return to == Slocc3Tag::kProduct;
    case Slocc3Tag::kProduct:
      return false;
  }
  return false;
}

}  // namespace entkit
