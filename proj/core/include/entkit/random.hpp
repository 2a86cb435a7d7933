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
#include <random>
#include <vector>

#include "entkit/product_operator.hpp"
#include "entkit/state.hpp"

namespace entkit {

/// Engine derived deterministically from (seed, stream); independent streams
/// for independent restarts/instances.
std::mt19937_64 seeded_engine(std::uint64_t seed, std::uint64_t stream = 0);

/// Complex Gaussian amplitudes, normalized.
PureState random_state(const SystemShape& shape, std::mt19937_64& eng);

/// Haar-distributed d x d unitary (QR of a complex Gaussian, phases fixed).
Eigen::MatrixXcd random_unitary(int d, std::mt19937_64& eng);

/// D orthonormal states (columns of a random unitary).
std::vector<PureState> random_orthonormal_basis(const SystemShape& shape, std::mt19937_64& eng);

/// D linearly independent states; resamples until the amplitude matrix
/// condition number is below `max_condition`.
std::vector<PureState> random_independent_basis(const SystemShape& shape, std::mt19937_64& eng,
                                                double max_condition = 100.0);

/// Independent Haar unitary on each party.
ProductOperator random_local_unitary(const SystemShape& shape, std::mt19937_64& eng);

}  // namespace entkit
