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

#include "entkit/named_states.hpp"

#include <cmath>

#include "entkit/errors.hpp"

namespace entkit {

PureState w_state(int parties) {
  if (parties < 2) {
    throw ShapeError("w_state needs at least two qubits");
  }
  SystemShape shape = SystemShape::qubits(parties);
  Eigen::VectorXcd amps = Eigen::VectorXcd::Zero(shape.total_dim());
  const double c = 1.0 / std::sqrt(static_cast<double>(parties));
  for (int k = 0; k < parties; ++k) {
    amps(std::int64_t{1} << (parties - 1 - k)) = Complex(c, 0.0);
  }
  PureState s = PureState::normalized(std::move(shape), std::move(amps));
  s.set_label("W" + std::to_string(parties));
  return s;
}

PureState ghz_state(int parties, int levels) {
  if (parties < 2 || levels < 2) {
    throw ShapeError("ghz_state needs parties >= 2 and levels >= 2");
  }
  SystemShape shape(std::vector<int>(static_cast<std::size_t>(parties), levels));
  Eigen::VectorXcd amps = Eigen::VectorXcd::Zero(shape.total_dim());
  const double c = 1.0 / std::sqrt(static_cast<double>(levels));
  std::int64_t step = 0;
  std::int64_t stride = 1;
  for (int k = 0; k < parties; ++k) {
    step += stride;
    stride *= levels;
  }
  for (int i = 0; i < levels; ++i) {
    amps(static_cast<std::int64_t>(i) * step) = Complex(c, 0.0);
  }
  PureState s = PureState::normalized(std::move(shape), std::move(amps));
  s.set_label("GHZ" + std::to_string(parties) + "^" + std::to_string(levels));
  return s;
}

PureState bell_hub_state(const SystemShape& target) {
  const int n = target.party_count();
  if (n < 2) {
    throw ShapeError("bell_hub_state needs at least two parties");
  }
  const std::int64_t hub = target.total_dim() / target.dim(n - 1);
  std::vector<int> dims;
  for (int k = 0; k < n - 1; ++k) dims.push_back(target.dim(k));
  dims.push_back(static_cast<int>(hub));
  SystemShape shape(std::move(dims));
  Eigen::VectorXcd amps = Eigen::VectorXcd::Zero(shape.total_dim());
  const double c = 1.0 / std::sqrt(static_cast<double>(hub));
  for (std::int64_t i = 0; i < hub; ++i) {
    amps(i * hub + i) = Complex(c, 0.0);
  }
  PureState s = PureState::normalized(std::move(shape), std::move(amps));
  s.set_label("PhiBell(" + target.str() + ")");
  return s;
}

PureState universal_resource_322() {
  SystemShape shape({3, 2, 2});
  Eigen::VectorXcd amps = Eigen::VectorXcd::Zero(12);
  const double c = 1.0 / std::sqrt(3.0);
  amps(0) = Complex(c, 0.0);   // |000>
  amps(6) = Complex(c, 0.0);   // |110>
  amps(9) = Complex(c, 0.0);   // |201>
  PureState s = PureState::normalized(std::move(shape), std::move(amps));
  s.set_label("ures322");
  return s;
}

ProductOperator w_extraction_322() {
  Eigen::MatrixXcd a(2, 3);
  a << 0, 1, 1,
       1, 0, 0;
  return ProductOperator({a, Eigen::MatrixXcd::Identity(2, 2), Eigen::MatrixXcd::Identity(2, 2)});
}

ProductOperator ghz_extraction_322() {
  Eigen::MatrixXcd a(2, 3);
  a << 0, 1, 0,
       0, 0, 1;
  Eigen::MatrixXcd sx(2, 2);
  sx << 0, 1,
        1, 0;
  return ProductOperator({a, sx, Eigen::MatrixXcd::Identity(2, 2)});
}

PureState make_named(const std::string& name, int parties, int levels,
                     const std::optional<SystemShape>& shape) {
  if (name == "w") return w_state(parties);
  if (name == "ghz") return ghz_state(parties, levels);
  if (name == "bell") {
    if (!shape) {
      throw ShapeError("make_named(\"bell\") needs the target shape");
    }
    return bell_hub_state(*shape);
  }
  if (name == "ures322" || name == "ex3") return universal_resource_322();
  throw ShapeError("unknown named state \"" + name + "\"");
}

}  // namespace entkit
