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

#include "entkit/dual_basis.hpp"
#include "entkit/errors.hpp"
#include "entkit/named_states.hpp"
#include "entkit/random.hpp"
#include "entkit/tensor_ops.hpp"

using namespace entkit;

namespace {

std::vector<PureState> computational_basis(const SystemShape& shape) {
  std::vector<PureState> out;
  for (std::int64_t i = 0; i < shape.total_dim(); ++i) {
    out.push_back(PureState::basis_state(shape, i));
  }
  return out;
}

}  // namespace

TEST_CASE("orthonormal bases are self-dual") {
  auto eng = seeded_engine(31);
  const BasisSet basis(random_orthonormal_basis(SystemShape({2, 2}), eng));
  const DualBasis dual = dual_basis(basis);
  for (int i = 0; i < basis.size(); ++i) {
    CHECK((dual.duals[static_cast<std::size_t>(i)].amps() - basis.state(i).amps()).norm() < 1e-13);
    CHECK(std::abs(dual.overlaps[static_cast<std::size_t>(i)] - Complex(1, 0)) < 1e-13);
  }
}

TEST_CASE("single-qubit dual pair by hand") {
  const SystemShape q(std::vector<int>{2});
  Eigen::VectorXcd plus(2);
  plus << 1.0 / std::sqrt(2.0), 1.0 / std::sqrt(2.0);
  const BasisSet basis({PureState::basis_state(q, 0), PureState::normalized(q, plus)});
  const DualBasis dual = dual_basis(basis);

  Eigen::VectorXcd minus(2);
  minus << 1.0 / std::sqrt(2.0), -1.0 / std::sqrt(2.0);
  CHECK((dual.duals[0].amps() - minus).norm() < 1e-14);
  Eigen::VectorXcd one(2);
  one << 0.0, 1.0;
  CHECK((dual.duals[1].amps() - one).norm() < 1e-14);
  CHECK(std::abs(dual.overlaps[0] - Complex(1.0 / std::sqrt(2.0), 0)) < 1e-14);
  CHECK(std::abs(dual.overlaps[1] - Complex(1.0 / std::sqrt(2.0), 0)) < 1e-14);
}

TEST_CASE("rank-deficient bases are refused") {
  const SystemShape q(std::vector<int>{2});
  const BasisSet repeated({PureState::basis_state(q, 0), PureState::basis_state(q, 0)});
  CHECK_THROWS_AS(dual_basis(repeated), SingularBasisError);
}

TEST_CASE("ill-conditioned bases are refused with the condition number") {
  const SystemShape q(std::vector<int>{2});
  Eigen::VectorXcd near(2);
  near << 1.0, 1e-14;
  const BasisSet basis({PureState::basis_state(q, 0), PureState::normalized(q, near)});
  try {
    dual_basis(basis);
    FAIL("expected SingularBasisError");
  } catch (const SingularBasisError& e) {
    CHECK(e.condition_number > 1e12);
  }
}

TEST_CASE("identity decomposition residuals") {
  const SystemShape shape({2, 2});
  const BasisSet comp(computational_basis(shape));
  const DualBasis comp_dual = dual_basis(comp);
  CHECK(check_identity_decomposition(comp, comp_dual) < 1e-14);

  const SystemShape q3 = SystemShape::qubits(3);
  for (int t = 0; t < 20; ++t) {
    auto eng = seeded_engine(32, static_cast<std::uint64_t>(t));
    const BasisSet basis(random_independent_basis(q3, eng));
    const DualBasis dual = dual_basis(basis);
    CHECK(check_identity_decomposition(basis, dual) < 1e-10 * 8);
    CHECK(check_mes_decomposition(basis, dual) < 1e-10 * 8);
  }
}

TEST_CASE("near-singular bases still satisfy the identity, condition reported") {
  const SystemShape q(std::vector<int>{2});
  const double delta = 2e-4;  // condition ~ 1e4
  Eigen::VectorXcd tilted(2);
  tilted << 1.0, delta;
  tilted.normalize();
  const BasisSet basis({PureState::basis_state(q, 0), PureState::normalized(q, tilted)});
  const DualBasis dual = dual_basis(basis);
  CHECK(dual.condition_number > 1e3);
  CHECK(dual.condition_number < 1e12);
  CHECK(check_identity_decomposition(basis, dual) < 1e-10 * 2);
}

TEST_CASE("MES decomposition on specific bases") {
  const SystemShape shape({2, 2});
  const BasisSet comp(computational_basis(shape));
  CHECK(check_mes_decomposition(comp, dual_basis(comp)) < 1e-14);

  // a basis of 2x2x2 holding both maximal states, completed with random
  // (non-orthogonal) directions
  auto eng = seeded_engine(33);
  std::vector<PureState> states{w_state(3), ghz_state(3, 2)};
  const auto fill = random_independent_basis(SystemShape::qubits(3), eng);
  for (std::size_t i = 0; states.size() < 8; ++i) {
    std::vector<PureState> candidate = states;
    candidate.push_back(fill[i]);
    if (BasisSet(candidate).linearly_independent()) states = std::move(candidate);
  }
  const BasisSet basis(states);
  CHECK_FALSE(basis.orthonormal());
  CHECK(check_mes_decomposition(basis, dual_basis(basis)) < 1e-10 * 8);

  // orthonormal case reduces to sum |psi_i*>|psi_i>/sqrt(D)
  auto eng2 = seeded_engine(34);
  const BasisSet ortho(random_orthonormal_basis(shape, eng2));
  const DualBasis ortho_dual = dual_basis(ortho);
  Eigen::VectorXcd direct = Eigen::VectorXcd::Zero(16);
  for (int i = 0; i < 4; ++i) {
    const Eigen::VectorXcd left = ortho.state(i).amps().conjugate();
    for (int a = 0; a < 4; ++a) {
      direct.segment(a * 4, 4) += 0.5 * left(a) * ortho.state(i).amps();
    }
  }
  CHECK((direct - max_entangled(4).amps()).norm() < 1e-12);
  CHECK(check_mes_decomposition(ortho, ortho_dual) < 1e-12);
}

TEST_CASE("biorthogonality up to D = 16") {
  for (const auto& dims : {std::vector<int>{4, 4}, std::vector<int>{2, 2, 2, 2}}) {
    auto eng = seeded_engine(35, dims.size());
    const BasisSet basis(random_independent_basis(SystemShape(dims), eng));
    const DualBasis dual = dual_basis(basis);
    double worst = 0.0;
    for (int i = 0; i < basis.size(); ++i) {
      for (int j = 0; j < basis.size(); ++j) {
        if (i == j) continue;
        worst = std::max(worst,
                         std::abs(inner(dual.duals[static_cast<std::size_t>(i)], basis.state(j))));
      }
      // overlaps are real positive and never exceed one
      const Complex c = dual.overlaps[static_cast<std::size_t>(i)];
      CHECK(c.imag() == 0.0);
      CHECK(c.real() > 0.0);
      CHECK(c.real() <= 1.0 + 1e-12);
    }
    CHECK(worst < 1e-10);
  }
}

TEST_CASE("duality is an involution up to phase") {
  auto eng = seeded_engine(36);
  const BasisSet basis(random_independent_basis(SystemShape({2, 2, 2}), eng));
  const DualBasis dual = dual_basis(basis);
  const DualBasis back = dual_basis(BasisSet(dual.duals));
  for (int i = 0; i < basis.size(); ++i) {
    const double fid = std::abs(inner(back.duals[static_cast<std::size_t>(i)], basis.state(i)));
    CHECK(fid > 1.0 - 1e-10);
  }
}
