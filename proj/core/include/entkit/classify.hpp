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

#include <array>
#include <string>

#include "entkit/state.hpp"

namespace entkit {

/// Three-qubit stochastic-interconvertibility classes.
enum class Slocc3Tag {
  kProduct,
  kBisepA,  // party A separable from an entangled BC pair
  kBisepB,
  kBisepC,
  kW,
  kGHZ,
};

std::string to_string(Slocc3Tag tag);

struct Slocc3Class {
  Slocc3Tag tag = Slocc3Tag::kProduct;
  std::array<int, 3> local_ranks{1, 1, 1};
  double tangle = 0.0;
  bool near_boundary = false;  // tangle or a flattening sits near its cutoff
};

/// Normalized 3-tangle: 4 |Cayley hyperdeterminant|; 1 on the GHZ state,
/// 0 exactly on the W class and below.
double three_tangle(const PureState& s);

/// Classifies by local Schmidt ranks and the 3-tangle. Shape must be (2,2,2).
Slocc3Class classify3(const PureState& s);

/// Hard-coded reachability partial order between the six classes
/// (reflexive; GHZ and W reach the biseparables and product, never each
/// other; biseparables reach themselves and product).
bool reachable(Slocc3Tag from, Slocc3Tag to);

}  // namespace entkit
