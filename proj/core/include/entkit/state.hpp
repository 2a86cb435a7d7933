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

#include <Eigen/Dense>
#include <string>

#include "entkit/shape.hpp"
#include "entkit/tolerances.hpp"

namespace entkit {

/// Dense pure state over a SystemShape. Immutable after construction.
///
/// Amplitudes follow the shape's row-major index order (party 1 most
/// significant). Public constructors normalize; unnormalized vectors exist
/// only as explicitly flagged intermediates (measurement branches).
class PureState {
 public:
  PureState() = default;

  /// Normalizes the vector; rejects zero and non-finite input.
  static PureState normalized(SystemShape shape, Eigen::VectorXcd amps, std::string label = {});

  /// Keeps the vector as-is, flagged as an unnormalized intermediate.
  static PureState raw(SystemShape shape, Eigen::VectorXcd amps, std::string label = {});

  /// Computational basis vector |index>.
  static PureState basis_state(SystemShape shape, std::int64_t index);

  const SystemShape& shape() const { return shape_; }
  const Eigen::VectorXcd& amps() const { return amps_; }
  std::int64_t dim() const { return amps_.size(); }
  Complex amp(std::int64_t i) const { return amps_(i); }

  double norm() const { return amps_.norm(); }
  bool is_normalized() const { return normalized_; }

  const std::string& label() const { return label_; }
  void set_label(std::string label) { label_ = std::move(label); }

 private:
  PureState(SystemShape shape, Eigen::VectorXcd amps, bool normalized, std::string label);

  SystemShape shape_;
  Eigen::VectorXcd amps_;
  bool normalized_ = false;
  std::string label_;
};

}  // namespace entkit
