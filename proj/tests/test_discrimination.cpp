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
#include "entkit/named_states.hpp"
#include "entkit/random.hpp"
#include "entkit/tensor_ops.hpp"
#include "entkit/transform.hpp"

using namespace entkit;

namespace {

// product resource + computational basis: the no-extra-resource case
struct DuanSetup {
  PureState phi;
  BasisSet basis;
  std::vector<ProductOperator> ms;

  DuanSetup()
      : phi(PureState::basis_state(SystemShape({2, 2}), 0)),
        basis({PureState::basis_state(SystemShape({2, 2}), 0),
               PureState::basis_state(SystemShape({2, 2}), 1),
               PureState::basis_state(SystemShape({2, 2}), 2),
               PureState::basis_state(SystemShape({2, 2}), 3)}) {
    for (int i = 0; i < 4; ++i) {
      Eigen::MatrixXcd a = Eigen::MatrixXcd::Zero(2, 2);
      Eigen::MatrixXcd b = Eigen::MatrixXcd::Zero(2, 2);
      a((i >> 1) & 1, 0) = 1.0;
      b(i & 1, 0) = 1.0;
      ms.emplace_back(std::vector<Eigen::MatrixXcd>{a, b});
    }
  }
};

BasisSet random_li_basis(const SystemShape& shape, std::uint64_t seed) {
  auto eng = seeded_engine(seed);
  return BasisSet(random_independent_basis(shape, eng));
}

std::vector<ProductOperator> transforms_to_duals(const PureState& phi, const BasisSet& basis,
                                                 std::uint64_t seed) {
  const DualBasis duals = dual_basis(basis);
  const PureState phi_conj = conjugate(phi);
  std::vector<ProductOperator> ms;
  for (int i = 0; i < basis.size(); ++i) {
    AlsOptions opts;
    opts.seed = seed + static_cast<std::uint64_t>(i);
    const TransformSearch r = find_transform(phi_conj, duals.duals[static_cast<std::size_t>(i)], opts);
    REQUIRE(r.found);
    ms.push_back(*r.op);
  }
  return ms;
}

}  // namespace

TEST_CASE("product resource with a product basis reduces to the no-resource case") {
  DuanSetup setup;
  const SeparablePOVM povm = build_unambiguous_povm(setup.phi, setup.basis, setup.ms);
  const UnambiguityTable table = check_unambiguous(povm, setup.phi, setup.basis);
  CHECK(table.pass);
  CHECK(table.eps.minCoeff() > 1e-12);
  CHECK(table.offdiag_max < 1e-10);
  CHECK(povm.has_factorizations());
  CHECK(HermitianOperator(povm.shape(), povm.inconclusive()).positive_semidefinite());
}

TEST_CASE("build rejects matrices that do not reach the duals") {
  DuanSetup setup;
  std::vector<ProductOperator> wrong = setup.ms;
  std::swap(wrong[0], wrong[1]);
  CHECK_THROWS_AS(build_unambiguous_povm(setup.phi, setup.basis, wrong), PreconditionError);
}

TEST_CASE("eps follows the transported-overlap formula") {
  const SystemShape shape({2, 2});
  const BasisSet basis = random_li_basis(shape, 61);
  auto eng = seeded_engine(62);
  const PureState phi = random_state(shape, eng);
  const std::vector<ProductOperator> ms = transforms_to_duals(phi, basis, 63);

  const SeparablePOVM povm = build_unambiguous_povm(phi, basis, ms);
  const UnambiguityTable table = check_unambiguous(povm, phi, basis);
  REQUIRE(table.pass);

  // eps_i = c |<psi_i|dual_i>|^2 ||M_i conj(phi)||^2 / D' with the
  // trace-D' rescaling applied to each M_i
  const DualBasis duals = dual_basis(basis);
  const PureState phi_conj = conjugate(phi);
  const double dp = static_cast<double>(shape.total_dim());
  for (int i = 0; i < basis.size(); ++i) {
    const ProductOperator scaled = ms[static_cast<std::size_t>(i)].with_gram_trace(dp);
    const double image_norm = apply_product(scaled, phi_conj, false).norm;
    const double overlap =
        std::norm(inner(basis.state(i), duals.duals[static_cast<std::size_t>(i)]));
    const double predicted = povm.scale() * overlap * image_norm * image_norm / dp;
    CHECK(table.eps(i) == doctest::Approx(predicted).epsilon(1e-9));
  }
}

TEST_CASE("global projectors give unit eps and zero cross terms") {
  auto eng = seeded_engine(64);
  const SystemShape shape({2, 2});
  const BasisSet basis(random_orthonormal_basis(shape, eng));
  const PureState phi = random_state(shape, eng);
  const SystemShape paired = phi.shape().paired_with(shape);

  std::vector<Eigen::MatrixXcd> projectors;
  for (int i = 0; i < basis.size(); ++i) {
    const PureState p = tensor_product(phi, basis.state(i), TensorMode::kPairParties);
    projectors.push_back(p.amps() * p.amps().adjoint());
  }
  const SeparablePOVM povm = SeparablePOVM::from_conclusive(paired, std::move(projectors));
  const UnambiguityTable table = check_unambiguous(povm, phi, basis);
  CHECK(table.pass);
  for (int i = 0; i < basis.size(); ++i) {
    CHECK(table.eps(i) == doctest::Approx(1.0).epsilon(1e-12));
  }
  CHECK(table.offdiag_max < 1e-12);
}

TEST_CASE("permuted outcome labels break the delta pattern") {
  DuanSetup setup;
  const SeparablePOVM povm = build_unambiguous_povm(setup.phi, setup.basis, setup.ms);
  std::vector<Eigen::MatrixXcd> shuffled;
  for (int i = 0; i < povm.conclusive_count(); ++i) {
    shuffled.push_back(povm.element((i + 1) % povm.conclusive_count()));
  }
  shuffled.push_back(povm.inconclusive());
  const SeparablePOVM wrong(povm.shape(), std::move(shuffled));
  const UnambiguityTable table = check_unambiguous(wrong, setup.phi, setup.basis);
  CHECK_FALSE(table.pass);
}

TEST_CASE("delta pattern is invariant under global phases") {
  const SystemShape shape({2, 2});
  const BasisSet basis = random_li_basis(shape, 65);
  auto eng = seeded_engine(66);
  const PureState phi = random_state(shape, eng);
  const std::vector<ProductOperator> ms = transforms_to_duals(phi, basis, 67);
  const SeparablePOVM povm = build_unambiguous_povm(phi, basis, ms);
  const UnambiguityTable base = check_unambiguous(povm, phi, basis);

  std::uniform_real_distribution<double> angle(0.0, 6.28);
  std::vector<PureState> rephased;
  for (int i = 0; i < basis.size(); ++i) {
    rephased.push_back(PureState::normalized(
        shape, std::polar(1.0, angle(eng)) * basis.state(i).amps()));
  }
  const PureState phi2 = PureState::normalized(shape, std::polar(1.0, angle(eng)) * phi.amps());
  const UnambiguityTable shifted = check_unambiguous(povm, phi2, BasisSet(rephased));
  CHECK(shifted.pass == base.pass);
  CHECK((shifted.eps - base.eps).cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("conjugating a POVM preserves positivity and completeness") {
  const SystemShape shape({2, 2});
  const BasisSet basis = random_li_basis(shape, 68);
  auto eng = seeded_engine(69);
  const PureState phi = random_state(shape, eng);
  const SeparablePOVM povm =
      build_unambiguous_povm(phi, basis, transforms_to_duals(phi, basis, 70));
  const SeparablePOVM conj = povm.conjugated();
  CHECK(conj.completeness_residual() < 1e-10 * conj.conclusive_count());
  CHECK(conj.min_element_eigenvalue() > -tol::kPsd);
}

TEST_CASE("hub discrimination distinguishes computational and random bases") {
  const SystemShape pair({2, 2});
  std::vector<PureState> comp;
  for (int i = 0; i < 4; ++i) comp.push_back(PureState::basis_state(pair, i));
  const BellDiscriminationResult r = perfect_discrimination_bell(BasisSet(comp));
  CHECK(r.pass);
  CHECK(r.min_success >= 1.0 - 1e-12);

  auto eng = seeded_engine(71);
  const BellDiscriminationResult r3 =
      perfect_discrimination_bell(BasisSet(random_orthonormal_basis(SystemShape::qubits(3), eng)));
  CHECK(r3.pass);
  CHECK(r3.min_success >= 1.0 - 1e-9);
  CHECK(r3.success_probability.rows() == 8);
  CHECK(r3.success_probability.cols() == 16);
}

TEST_CASE("hub discrimination handles a basis holding both maximal states") {
  auto eng = seeded_engine(72);
  std::vector<PureState> states{w_state(3), ghz_state(3, 2)};
  const auto fill = random_orthonormal_basis(SystemShape::qubits(3), eng);
  for (std::size_t i = 0; states.size() < 8; ++i) {
    // Gram-Schmidt the random orthonormal directions against W and GHZ
    Eigen::VectorXcd v = fill[i].amps();
    for (const auto& s : states) {
      v -= s.amps() * s.amps().dot(v);
    }
    if (v.norm() > 0.3) {
      states.push_back(PureState::normalized(SystemShape::qubits(3), v));
    }
  }
  REQUIRE(states.size() == 8);
  const BasisSet basis(states);
  REQUIRE(basis.orthonormal());
  const BellDiscriminationResult r = perfect_discrimination_bell(basis);
  CHECK(r.pass);
  CHECK(r.min_success >= 1.0 - 1e-9);
}

TEST_CASE("hub discrimination rejects non-orthonormal bases") {
  const BasisSet skew = random_li_basis(SystemShape({2, 2}), 73);
  REQUIRE_FALSE(skew.orthonormal());
  CHECK_THROWS_AS(perfect_discrimination_bell(skew), PreconditionError);
}
