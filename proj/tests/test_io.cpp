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

#include <doctest.h>

#include "entkit/basis.hpp"
#include "entkit/errors.hpp"
#include "entkit/io.hpp"
#include "entkit/named_states.hpp"
#include "entkit/random.hpp"
#include "entkit/tensor_ops.hpp"

using namespace entkit;

TEST_CASE("states round-trip bit-exactly through JSON") {
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    auto eng = seeded_engine(200, seed);
    const PureState s = random_state(SystemShape({3, 2, 2}), eng);
    const PureState back = state_from_json(state_to_json(s));
    CHECK(back.shape() == s.shape());
    CHECK((back.amps() - s.amps()).norm() == 0.0);
  }

  PureState labelled = w_state(3);
  const PureState back = state_from_json(state_to_json(labelled));
  CHECK(back.label() == "W3");
}

TEST_CASE("state parser rejects malformed input") {
  CHECK_THROWS_AS(state_from_json("not json"), ParseError);
  CHECK_THROWS_AS(state_from_json("{\"shape\": [2]}"), ParseError);
  CHECK_THROWS_AS(state_from_json("{\"amps\": [[1,0],[0,0]]}"), ParseError);
  // length mismatch
  CHECK_THROWS_AS(state_from_json("{\"shape\": [2,2], \"amps\": [[1,0],[0,0]]}"), ParseError);
  // malformed entries
  CHECK_THROWS_AS(state_from_json("{\"shape\": [2], \"amps\": [[1,0],[0]]}"), ParseError);
  CHECK_THROWS_AS(state_from_json("{\"shape\": [2], \"amps\": [[1,0],\"x\"]}"), ParseError);
  // invalid shape
  CHECK_THROWS_AS(state_from_json("{\"shape\": [0], \"amps\": []}"), ParseError);
  // zero vector cannot be normalized
  CHECK_THROWS_AS(state_from_json("{\"shape\": [2], \"amps\": [[0,0],[0,0]]}"), ParseError);
}

TEST_CASE("multi-state documents") {
  std::vector<PureState> states{w_state(3), ghz_state(3, 2)};
  const std::string doc = states_to_json(states);
  const auto back = states_from_json(doc);
  REQUIRE(back.size() == 2);
  CHECK((back[0].amps() - states[0].amps()).norm() == 0.0);
  CHECK((back[1].amps() - states[1].amps()).norm() == 0.0);

  // a single-state document also parses as a one-element list
  const auto single = states_from_json(state_to_json(w_state(3)));
  CHECK(single.size() == 1);
}

TEST_CASE("operators round-trip through JSON") {
  const ProductOperator op = ghz_extraction_322();
  const ProductOperator back = operator_from_json(operator_to_json(op));
  REQUIRE(back.party_count() == op.party_count());
  for (int k = 0; k < op.party_count(); ++k) {
    CHECK((back.factor(k) - op.factor(k)).norm() == 0.0);
  }
  CHECK_THROWS_AS(operator_from_json("{\"factors\": []}"), ParseError);
  CHECK_THROWS_AS(
      operator_from_json("{\"factors\": [{\"rows\": 2, \"cols\": 2, \"entries\": [[1,0]]}]}"),
      ParseError);
}

TEST_CASE("POVMs round-trip through JSON") {
  auto eng = seeded_engine(201);
  const SystemShape shape({2, 2});
  const PureState phi = random_state(shape, eng);
  const BasisSet basis(random_orthonormal_basis(shape, eng));
  std::vector<Eigen::MatrixXcd> projectors;
  for (int i = 0; i < basis.size(); ++i) {
    const PureState p = tensor_product(phi, basis.state(i), TensorMode::kPairParties);
    projectors.push_back(p.amps() * p.amps().adjoint());
  }
  const SeparablePOVM povm =
      SeparablePOVM::from_conclusive(phi.shape().paired_with(shape), std::move(projectors));
  const SeparablePOVM back = povm_from_json(povm_to_json(povm));
  CHECK(back.shape() == povm.shape());
  CHECK(back.conclusive_count() == povm.conclusive_count());
  for (int i = 0; i <= povm.conclusive_count(); ++i) {
    CHECK((back.element(i) - povm.element(i)).norm() == 0.0);
  }

  CHECK_THROWS_AS(povm_from_json("{\"shape\": [4], \"elements\": []}"), ParseError);
}

TEST_CASE("decompositions round-trip through JSON") {
  CpDecomposition d;
  d.shape = SystemShape::qubits(3);
  const Eigen::Vector2cd e0(1.0, 0.0);
  const Eigen::Vector2cd e1(0.0, 1.0);
  d.terms.push_back({Complex(1.0 / std::sqrt(2.0), 0), {e0, e0, e0}});
  d.terms.push_back({Complex(1.0 / std::sqrt(2.0), 0), {e1, e1, e1}});
  const CpDecomposition back = decomposition_from_json(decomposition_to_json(d));
  CHECK(back.shape == d.shape);
  REQUIRE(back.rank() == 2);
  CHECK((back.reconstruct() - d.reconstruct()).norm() == 0.0);
  CHECK((back.reconstruct() - ghz_state(3, 2).amps()).norm() < 1e-15);
}
