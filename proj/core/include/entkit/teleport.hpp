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

#include "entkit/state.hpp"

namespace entkit {

/// Weyl shift-and-phase matrix X^shift Z^phase on C^d.
Eigen::MatrixXcd weyl_matrix(int d, int shift, int phase);

/// Projects parties (a, b) of `s` onto the generalized Bell outcome
/// (shift, phase), removes both registers, and applies the matching Weyl
/// correction at `receiver`. The result is unnormalized; its squared norm is
/// the branch probability. Party indices refer to `s`; `receiver` is the
/// index after a and b are removed.
PureState bell_branch(const PureState& s, int a, int b, int receiver_after_removal, int shift,
                      int phase);

/// Simulates d-dimensional teleportation of `sent_party` through `resource`
/// (must equal max_entangled(d)). All d^2 Bell branches are enumerated and
/// checked to agree; the relocated state is returned with the received
/// register moved to `dest_slot`.
PureState teleport(const PureState& s, const PureState& resource, int sent_party, int dest_slot);

}  // namespace entkit
