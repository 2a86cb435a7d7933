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

#include <optional>
#include <string>

#include "entkit/product_operator.hpp"
#include "entkit/state.hpp"

namespace entkit {

/// (|10...0> + |01...0> + ... + |00...1>) / sqrt(n) on n qubits.
PureState w_state(int parties);

/// (1/sqrt(levels)) sum_i |i>^(x parties) on (levels, ..., levels).
PureState ghz_state(int parties, int levels);

/// Hub resource for `target`: each party k < N shares a d_k-dimensional MES
/// with party N, whose register has dimension D/d_N. Shape
/// (d_1, ..., d_{N-1}, D/d_N); amplitude sqrt(d_N/D) on each |i (x) i>.
PureState bell_hub_state(const SystemShape& target);

/// (1/sqrt(3)) (|000> + |110> + |201>) on (3, 2, 2): a three-qubit-problem
/// resource that reaches both maximal SLOCC classes.
PureState universal_resource_322();

/// [[0,1,1],[1,0,0]] (x) I (x) I; maps the 322 resource onto the W state.
ProductOperator w_extraction_322();

/// [[0,1,0],[0,0,1]] (x) sigma_x (x) I; sqrt(3/2) times its image of the
/// 322 resource is the GHZ state.
ProductOperator ghz_extraction_322();

/// Factory keyed by name: "w" (parties), "ghz" (parties, levels),
/// "bell" (target shape), "ures322". Throws ShapeError on unknown names or
/// invalid parameters.
PureState make_named(const std::string& name, int parties = 3, int levels = 2,
                     const std::optional<SystemShape>& shape = std::nullopt);

}  // namespace entkit
