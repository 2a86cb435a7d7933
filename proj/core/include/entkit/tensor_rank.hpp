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

#include <vector>

#include "entkit/cp_decomposition.hpp"
#include "entkit/product_operator.hpp"

namespace entkit {

struct RankFit {
  int rank = 0;
  double residual = 0.0;
  double max_factor_norm = 0.0;
  bool converged = false;
  bool escape = false;
};

/// Tensor-rank evidence: a certified upper bound (an explicit decomposition)
/// together with the flattening lower bound. When the two disagree the
/// result is an interval, never a guess; `border_rank_flag` marks candidate
/// ranks where the fit only approached zero with growing factors.
struct RankResult {
  int rank = 0;           // smallest certified rank; 0 if none found <= r_max
  bool certified = false;
  int flattening_lower_bound = 1;
  double schmidt_measure_bits = 0.0;  // log2(rank) when certified
  bool border_rank_flag = false;
  std::vector<RankFit> fits;          // per candidate rank, ascending
  CpDecomposition decomposition;      // valid when certified
};

/// Certified-rank search: CP fits at r = 1..r_max, stopping at the first
/// converged rank; lower bound from every bipartite flattening.
RankResult schmidt_measure(const PureState& s, int r_max, const AlsOptions& opts = {});

/// Local matrices A_k = sum_i alpha_i^{1/N} |a_{i,k}><i| built from an
/// r-term decomposition of s (r <= levels); sqrt(levels) (x A_k) applied to
/// the generalized GHZ state reproduces s.
ProductOperator ghz_rank_construction(const PureState& s, const CpDecomposition& decomposition,
                                      int levels);

/// (N-1)(d-1)+1, the generalized-W tensor-rank bound; d must be a power of 2.
int rank_lower_bound_w(int parties, int local_dim);

}  // namespace entkit
