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

#include "entkit/tensor_rank.hpp"

#include <cmath>

#include "entkit/errors.hpp"
#include "entkit/named_states.hpp"
#include "entkit/tensor_ops.hpp"

namespace entkit {

namespace {

// Schmidt ranks of every bipartition (sides containing party 0 suffice).
int flattening_bound(const PureState& s) {
  const int n = s.shape().party_count();
  if (n < 2) return 1;
  int bound = 1;
  const int subsets = 1 << (n - 1);
  // every bipartition once: sides containing party 0, excluding the full set
  for (int mask = 0; mask < subsets - 1; ++mask) {
    std::vector<int> side{0};
    for (int k = 1; k < n; ++k) {
      if (mask & (1 << (k - 1))) side.push_back(k);
    }
    bound = std::max(bound, schmidt_rank_bipartite(s, side));
  }
  return bound;
}

}  // namespace

RankResult schmidt_measure(const PureState& s, int r_max, const AlsOptions& opts) {
  if (r_max < 1) {
    throw ShapeError("schmidt_measure needs r_max >= 1");
  }
  RankResult result;
  result.flattening_lower_bound = flattening_bound(s);

  for (int r = 1; r <= r_max; ++r) {
    const CpFit fit = cp_fit(s, r, opts);
    RankFit rf;
    rf.rank = r;
    rf.residual = fit.residual;
    rf.max_factor_norm = fit.max_factor_norm;
    rf.converged = fit.converged;
    rf.escape = fit.border_escape;
    result.fits.push_back(rf);
    if (fit.border_escape) {
      result.border_rank_flag = true;
    }
    if (fit.converged) {
      result.rank = r;
      result.certified = true;
      result.schmidt_measure_bits = std::log2(static_cast<double>(r));
      result.decomposition = fit.decomposition;
      break;
    }
  }
  return result;
}

ProductOperator ghz_rank_construction(const PureState& s, const CpDecomposition& decomposition,
                                      int levels) {
  const int r = decomposition.rank();
  const int n = s.shape().party_count();
  if (r > levels) {
    throw PreconditionError("decomposition has more terms than the GHZ level count");
  }
  if (decomposition.shape != s.shape()) {
    throw ShapeError("decomposition shape does not match the state");
  }
  if ((decomposition.reconstruct() - s.amps()).norm() > tol::kNorm) {
    throw PreconditionError("decomposition does not reconstruct the state within tolerance");
  }

  std::vector<Eigen::MatrixXcd> factors;
  factors.reserve(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) {
    Eigen::MatrixXcd a = Eigen::MatrixXcd::Zero(s.shape().dim(k), levels);
    for (int i = 0; i < r; ++i) {
      const Complex w = decomposition.terms[static_cast<std::size_t>(i)].weight;
      const Complex root = std::pow(w, 1.0 / static_cast<double>(n));
      a.col(i) = root * decomposition.terms[static_cast<std::size_t>(i)].factors[static_cast<std::size_t>(k)];
    }
    factors.push_back(std::move(a));
  }
  ProductOperator op(std::move(factors));

  const PureState ghz = ghz_state(n, levels);
  const ApplyResult image = apply_product(op, ghz, /*renormalize=*/false);
  const double sqrt_r = std::sqrt(static_cast<double>(levels));
  const double err = (sqrt_r * image.state.amps() - s.amps()).norm();
  if (err > 10.0 * tol::kNorm) {
    throw PreconditionError("GHZ construction residual " + std::to_string(err) +
                            " exceeds the contract");
  }
  return op;
}

int rank_lower_bound_w(int parties, int local_dim) {
  if (parties < 2 || local_dim < 2) {
    throw ShapeError("rank_lower_bound_w needs parties >= 2 and local_dim >= 2");
  }
  int d = local_dim;
  while (d % 2 == 0) d /= 2;
  if (d != 1) {
    throw ShapeError("the generalized-W bound assumes a power-of-two local dimension");
  }
  return (parties - 1) * (local_dim - 1) + 1;
}

}  // namespace entkit
