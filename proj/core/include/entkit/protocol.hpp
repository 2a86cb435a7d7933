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

#include "entkit/basis.hpp"
#include "entkit/povm.hpp"

namespace entkit {

struct ProtocolBranch {
  int outcome = 0;
  double probability = 0.0;  // exact branch probability
  PureState output;          // state left on the third register
  double output_impurity = 0.0;  // sigma_2 / sigma_1 of the branch reshaping
};

/// Forward construction: prepares conj(Phi) together with the maximally
/// entangled state on H (x) H (party-paired with the resource), applies
/// sqrt(conj(Pi_x)) (x) I for every conclusive outcome, and reads off the
/// surviving third-register state and its exact probability. The POVM must
/// pass the unambiguity check for (phi, basis).
std::vector<ProtocolBranch> protocol_from_measurement(const PureState& phi, const BasisSet& basis,
                                                      const SeparablePOVM& povm);

}  // namespace entkit
