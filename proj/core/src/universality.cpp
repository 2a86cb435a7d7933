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

#include "entkit/universality.hpp"

#include "entkit/errors.hpp"
#include "entkit/named_states.hpp"
#include "entkit/tensor_ops.hpp"

namespace entkit {

UniversalityVerdict universality_unambiguous(
    const PureState& phi, const std::vector<PureState>& maximal_reps, const AlsOptions& opts,
    const std::vector<std::optional<ProductOperator>>& certificates) {
  if (maximal_reps.empty()) {
    throw PreconditionError("universality check needs at least one maximal representative");
  }
  if (!certificates.empty() && certificates.size() != maximal_reps.size()) {
    throw ShapeError("certificate list must match the representative list");
  }
  const PureState phi_conj = conjugate(phi);

  UniversalityVerdict verdict;
  verdict.universal = true;
  verdict.reps.reserve(maximal_reps.size());
  for (std::size_t i = 0; i < maximal_reps.size(); ++i) {
    const PureState& rep = maximal_reps[i];
    RepReachability r;
    if (!certificates.empty() && certificates[i]) {
      const TransformCheck chk = verify_transform(phi_conj, rep, *certificates[i]);
      if (chk.ok) {
        r.reachable = true;
        r.from_certificate = true;
        r.residual = chk.residual;
        r.witness = *certificates[i];
        verdict.reps.push_back(std::move(r));
        continue;
      }
    }
    AlsOptions per_rep = opts;
    per_rep.seed = opts.seed + i;  // independent deterministic streams per rep
    const TransformSearch search = find_transform(phi_conj, rep, per_rep);
    r.reachable = search.found;
    r.residual = search.residual;
    r.border_rank_escape = search.border_rank_escape;
    if (search.op) r.witness = *search.op;
    if (!search.found) verdict.universal = false;
    verdict.reps.push_back(std::move(r));
  }
  return verdict;
}

std::vector<PureState> maximal_reps_qubits3() {
  return {ghz_state(3, 2), w_state(3)};
}

}  // namespace entkit
