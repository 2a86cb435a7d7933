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

#include "entkit/state.hpp"

#include <cmath>

#include "entkit/errors.hpp"

namespace entkit {

namespace {

void check_vector(const SystemShape& shape, const Eigen::VectorXcd& amps) {
  if (amps.size() != shape.total_dim()) {
    throw ShapeError("amplitude vector has length " + std::to_string(amps.size()) +
                     ", shape " + shape.str() + " needs " + std::to_string(shape.total_dim()));
  }
  if (!amps.allFinite()) {
    throw ShapeError("amplitude vector contains non-finite entries");
  }
}

}  // namespace

PureState::PureState(SystemShape shape, Eigen::VectorXcd amps, bool normalized, std::string label)
    : shape_(std::move(shape)), amps_(std::move(amps)), normalized_(normalized), label_(std::move(label)) {}

PureState PureState::normalized(SystemShape shape, Eigen::VectorXcd amps, std::string label) {
  check_vector(shape, amps);
  const double n = amps.norm();
  if (n < 1e-300) {
    throw ShapeError("cannot normalize the zero vector");
  }
  if (std::abs(n - 1.0) > tol::kNorm) {
    amps /= n;
  }
  return PureState(std::move(shape), std::move(amps), true, std::move(label));
}

PureState PureState::raw(SystemShape shape, Eigen::VectorXcd amps, std::string label) {
  check_vector(shape, amps);
  return PureState(std::move(shape), std::move(amps), false, std::move(label));
}

PureState PureState::basis_state(SystemShape shape, std::int64_t index) {
  if (index < 0 || index >= shape.total_dim()) {
    throw ShapeError("basis index out of range");
  }
  Eigen::VectorXcd v = Eigen::VectorXcd::Zero(shape.total_dim());
  v(index) = Complex(1.0, 0.0);
  return PureState(std::move(shape), std::move(v), true, {});
}

}  // namespace entkit
