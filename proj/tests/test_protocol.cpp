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

#include <cmath>

#include "entkit/discrimination.hpp"
#include "entkit/dual_basis.hpp"
#include "entkit/errors.hpp"
#include "entkit/hermitian_operator.hpp"
#include "entkit/protocol.hpp"
#include "entkit/random.hpp"
#include "entkit/tensor_ops.hpp"
#include "entkit/transform.hpp"

using namespace entkit;

namespace {

SeparablePOVM projective_povm(const PureState& phi, const BasisSet& basis) {
  std::vector<Eigen::MatrixXcd> projectors;
  for (int i = 0; i < basis.size(); ++i) {
    const PureState p = tensor_product(phi, basis.state(i), TensorMode::kPairParties);
    projectors.push_back(p.amps() * p.amps().adjoint());
  }
  return SeparablePOVM::from_conclusive(phi.shape().paired_with(basis.shape()),
                                        std::move(projectors));
}

}  // namespace

TEST_CASE("projective measurement converts at rate 1/D with the right outputs") {
  auto eng = seeded_engine(81);
  const SystemShape shape({2, 2});
  const BasisSet basis(random_orthonormal_basis(shape, eng));
  const PureState phi = random_state(shape, eng);
  const SeparablePOVM povm = projective_povm(phi, basis);

  const auto branches = protocol_from_measurement(phi, basis, povm);
  REQUIRE(branches.size() == 4);
  double total = 0.0;
  for (const auto& b : branches) {
    CHECK(b.probability == doctest::Approx(0.25).epsilon(1e-12));
    CHECK(std::norm(inner(basis.state(b.outcome), b.output)) > 1.0 - 1e-10);
    CHECK(b.output_impurity < 1e-7);
    total += b.probability;
  }
  CHECK(total == doctest::Approx(1.0).epsilon(1e-12));

  // total success probability 1 forces the inconclusive element to kill the
  // prepared resource-plus-MES vector
  const Eigen::MatrixXcd inc_root =
      HermitianOperator(povm.shape(), povm.inconclusive().conjugate()).sqrt_psd();
  const auto perm = pairing_permutation(phi.shape(), basis.shape());
  const std::int64_t d = shape.total_dim();
  Eigen::MatrixXcd grouped = Eigen::MatrixXcd::Zero(povm.shape().total_dim(), d);
  for (std::int64_t a = 0; a < d; ++a) {
    for (std::int64_t h = 0; h < d; ++h) {
      grouped(perm[static_cast<std::size_t>(a * d + h)], h) =
          std::conj(phi.amp(a)) / std::sqrt(static_cast<double>(d));
    }
  }
  CHECK((inc_root * grouped).norm() < 1e-10);
}

TEST_CASE("scaling the conclusive elements scales every branch probability") {
  auto eng = seeded_engine(82);
  const SystemShape shape({2, 2});
  const BasisSet basis(random_orthonormal_basis(shape, eng));
  const PureState phi = random_state(shape, eng);
  const SeparablePOVM povm = projective_povm(phi, basis);
  const SeparablePOVM halved = povm.rescaled(0.5);

  const auto full = protocol_from_measurement(phi, basis, povm);
  const auto half = protocol_from_measurement(phi, basis, halved);
  for (std::size_t i = 0; i < full.size(); ++i) {
    CHECK(half[i].probability == doctest::Approx(0.5 * full[i].probability).epsilon(1e-12));
  }
}

TEST_CASE("round trip through a non-orthogonal basis hits the exact rate") {
  const SystemShape shape({2, 2});
  auto eng = seeded_engine(83);
  const BasisSet basis(random_independent_basis(shape, eng));
  const PureState phi = random_state(shape, eng);
  const DualBasis duals = dual_basis(basis);
  const PureState phi_conj = conjugate(phi);

  std::vector<ProductOperator> ms;
  for (int i = 0; i < basis.size(); ++i) {
    AlsOptions opts;
    opts.seed = 8300 + static_cast<std::uint64_t>(i);
    const TransformSearch r = find_transform(phi_conj, duals.duals[static_cast<std::size_t>(i)], opts);
    REQUIRE(r.found);
    ms.push_back(*r.op);
  }
  const SeparablePOVM povm = build_unambiguous_povm(phi, basis, ms);
  const UnambiguityTable table = check_unambiguous(povm, phi, basis);
  REQUIRE(table.pass);

  const auto branches = protocol_from_measurement(phi, basis, povm);
  const double d = static_cast<double>(shape.total_dim());
  double total = 0.0;
  for (const auto& b : branches) {
    const double c2 =
        std::norm(inner(duals.duals[static_cast<std::size_t>(b.outcome)], basis.state(b.outcome)));
    const double predicted = table.eps(b.outcome) / (d * c2);
    CHECK(b.probability == doctest::Approx(predicted).epsilon(1e-9));
    CHECK(b.probability + 1e-12 >= table.eps(b.outcome) / d);  // the lower bound
    CHECK(std::norm(inner(duals.duals[static_cast<std::size_t>(b.outcome)], b.output)) >
          1.0 - 1e-9);
    total += b.probability;
  }
  CHECK(total <= 1.0 + 1e-10);
}

TEST_CASE("three-qubit round trip with a generic resource and skew basis") {
  const SystemShape shape = SystemShape::qubits(3);
  auto eng = seeded_engine(86);
  const BasisSet basis(random_independent_basis(shape, eng));
  const PureState phi = random_state(shape, eng);
  const DualBasis duals = dual_basis(basis);
  const PureState phi_conj = conjugate(phi);

  std::vector<ProductOperator> ms;
  for (int i = 0; i < basis.size(); ++i) {
    AlsOptions opts;
    opts.seed = 8600 + static_cast<std::uint64_t>(i);
    const TransformSearch r = find_transform(phi_conj, duals.duals[static_cast<std::size_t>(i)], opts);
    REQUIRE(r.found);
    ms.push_back(*r.op);
  }
  const SeparablePOVM povm = build_unambiguous_povm(phi, basis, ms);
  const UnambiguityTable table = check_unambiguous(povm, phi, basis);
  REQUIRE(table.pass);

  const auto branches = protocol_from_measurement(phi, basis, povm);
  double total = 0.0;
  for (const auto& b : branches) {
    const double c2 =
        std::norm(inner(duals.duals[static_cast<std::size_t>(b.outcome)], basis.state(b.outcome)));
    CHECK(b.probability + 1e-12 >= table.eps(b.outcome) / 8.0);
    CHECK(b.probability ==
          doctest::Approx(table.eps(b.outcome) / (8.0 * c2)).epsilon(1e-8));
    CHECK(std::norm(inner(duals.duals[static_cast<std::size_t>(b.outcome)], b.output)) >
          1.0 - 1e-9);
    total += b.probability;
  }
  CHECK(total <= 1.0 + 1e-10);
}

TEST_CASE("positivity kills cross branches for exact measurements") {
  auto eng = seeded_engine(84);
  const SystemShape shape({2, 2});
  const BasisSet basis(random_orthonormal_basis(shape, eng));
  const PureState phi = random_state(shape, eng);
  const SeparablePOVM povm = projective_povm(phi, basis);

  for (int x = 0; x < basis.size(); ++x) {
    const Eigen::MatrixXcd root =
        HermitianOperator(povm.shape(), povm.element(x).conjugate()).sqrt_psd();
    for (int j = 0; j < basis.size(); ++j) {
      if (j == x) continue;
      const PureState probe =
          conjugate(tensor_product(phi, basis.state(j), TensorMode::kPairParties));
      CHECK((root * probe.amps()).norm() < 1e-10);
    }
  }
}

TEST_CASE("the forward protocol rejects measurements that fail the check") {
  auto eng = seeded_engine(85);
  const SystemShape shape({2, 2});
  const BasisSet basis(random_orthonormal_basis(shape, eng));
  const BasisSet other(random_orthonormal_basis(shape, eng));
  const PureState phi = random_state(shape, eng);
  const SeparablePOVM povm = projective_povm(phi, basis);
  CHECK_THROWS_AS(protocol_from_measurement(phi, other, povm), PreconditionError);
}
