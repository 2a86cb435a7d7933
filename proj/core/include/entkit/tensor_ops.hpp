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

#include <cstdint>
#include <vector>

#include "entkit/hermitian_operator.hpp"
#include "entkit/product_operator.hpp"
#include "entkit/state.hpp"

namespace entkit {

enum class TensorMode {
  kConcat,       // party lists are concatenated: (a_1..a_N, b_1..b_M)
  kPairParties,  // party-wise pairing: party k becomes (a_k, b_k), a_k most significant
};

/// Tensor product of two states. Pairing mode requires equal party counts.
PureState tensor_product(const PureState& a, const PureState& b, TensorMode mode = TensorMode::kConcat);

/// Entrywise complex conjugate in the standard basis.
PureState conjugate(const PureState& s);

/// <a|b>, conjugate-linear in a. Shapes must match.
Complex inner(const PureState& a, const PureState& b);

struct ApplyResult {
  PureState state;  // normalized when requested, raw otherwise
  double norm;      // || M s ||_2 before normalization
};

/// Apply a product operator; input shape must equal the state's shape.
ApplyResult apply_product(const ProductOperator& op, const PureState& s, bool renormalize = true);

/// Apply one local matrix to a single party of a raw amplitude vector.
Eigen::VectorXcd apply_single_factor(const Eigen::VectorXcd& v, const SystemShape& shape, int party,
                                     const Eigen::MatrixXcd& m);

/// Reduced density operator on `keep` (order preserved); trace = ||s||^2.
HermitianOperator partial_trace(const PureState& s, const std::vector<int>& keep);

/// Amplitude matrix of the bipartition: rows indexed by `side` (ascending
/// party order), columns by its complement.
Eigen::MatrixXcd cut_matrix(const PureState& s, const std::vector<int>& side);

/// Von Neumann entropy (bits) of the reduced operator on `side`.
double cut_entropy(const PureState& s, const std::vector<int>& side);

/// Number of singular values above the relative rank cutoff across the cut.
int schmidt_rank_bipartite(const PureState& s, const std::vector<int>& side,
                           double rel_tol = tol::kRank);

/// (1/sqrt(d)) sum_i |i,i> on (d, d).
PureState max_entangled(int d);

/// perm[plain (i_outer * D_inner + i_inner)] = party-paired flat index.
std::vector<std::int64_t> pairing_permutation(const SystemShape& outer, const SystemShape& inner);

/// Reorder parties: result party i is input party order[i].
PureState permute_parties(const PureState& s, const std::vector<int>& order);

/// Sorted complement of `parties` in {0..n-1}; validates the subset.
std::vector<int> complement_parties(const std::vector<int>& parties, int n);

}  // namespace entkit
