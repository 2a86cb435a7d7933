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

#include "entkit/classify.hpp"
#include "entkit/errors.hpp"
#include "entkit/named_states.hpp"
#include "entkit/random.hpp"
#include "entkit/tensor_ops.hpp"
#include "entkit/tensor_rank.hpp"
#include "entkit/transform.hpp"
#include "entkit/universality.hpp"

using namespace entkit;

namespace {

const double kInvSqrt2 = 1.0 / std::sqrt(2.0);
const double kInvSqrt3 = 1.0 / std::sqrt(3.0);

// Independent 3-tangle route: residual tangle of party A after subtracting
// both pairwise concurrences (sigma-y spin-flip construction).
double tangle_via_concurrences(const PureState& s) {
  Eigen::Matrix2cd sy;
  sy << Complex(0, 0), Complex(0, -1), Complex(0, 1), Complex(0, 0);
  Eigen::MatrixXcd yy = Eigen::MatrixXcd::Zero(4, 4);
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b)
      for (int c = 0; c < 2; ++c)
        for (int d = 0; d < 2; ++d) yy(2 * a + c, 2 * b + d) = sy(a, b) * sy(c, d);

  const auto pair_concurrence = [&](const std::vector<int>& keep) {
    const Eigen::MatrixXcd rho = partial_trace(s, keep).matrix();
    const Eigen::MatrixXcd rho_tilde = yy * rho.conjugate() * yy;
    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(rho * rho_tilde);
    Eigen::Vector4d lambda;
    for (int i = 0; i < 4; ++i) {
      lambda(i) = std::sqrt(std::max(0.0, es.eigenvalues()(i).real()));
    }
    std::sort(lambda.data(), lambda.data() + 4, std::greater<double>());
    return std::max(0.0, lambda(0) - lambda(1) - lambda(2) - lambda(3));
  };

  const double c_a_bc_sq = 4.0 * partial_trace(s, {0}).matrix().determinant().real();
  const double c_ab = pair_concurrence({0, 1});
  const double c_ac = pair_concurrence({0, 2});
  return c_a_bc_sq - c_ab * c_ab - c_ac * c_ac;
}

}  // namespace

TEST_CASE("named states have the documented amplitudes") {
  const PureState ghz = ghz_state(3, 2);
  CHECK(ghz.amp(0).real() == doctest::Approx(kInvSqrt2));
  CHECK(ghz.amp(7).real() == doctest::Approx(kInvSqrt2));
  CHECK(ghz.amps().cwiseAbs().sum() == doctest::Approx(2.0 * kInvSqrt2));

  const PureState ghz33 = ghz_state(3, 3);
  CHECK(ghz33.shape() == SystemShape({3, 3, 3}));
  CHECK(ghz33.amp(0).real() == doctest::Approx(kInvSqrt3));
  CHECK(ghz33.amp(13).real() == doctest::Approx(kInvSqrt3));
  CHECK(ghz33.amp(26).real() == doctest::Approx(kInvSqrt3));

  const PureState w = w_state(3);
  CHECK(w.amp(1).real() == doctest::Approx(kInvSqrt3));
  CHECK(w.amp(2).real() == doctest::Approx(kInvSqrt3));
  CHECK(w.amp(4).real() == doctest::Approx(kInvSqrt3));

  const PureState res = universal_resource_322();
  CHECK(res.shape() == SystemShape({3, 2, 2}));
  CHECK(res.amp(0).real() == doctest::Approx(kInvSqrt3));
  CHECK(res.amp(6).real() == doctest::Approx(kInvSqrt3));
  CHECK(res.amp(9).real() == doctest::Approx(kInvSqrt3));

  // hub resource for three qubits: four equal terms of 1/2 in a 2x2x4 system
  const PureState hub = bell_hub_state(SystemShape::qubits(3));
  CHECK(hub.shape() == SystemShape({2, 2, 4}));
  for (int i = 0; i < 4; ++i) {
    CHECK(hub.amp(i * 4 + i).real() == doctest::Approx(0.5));
  }
  // and it is exactly a pair of MES pairs shared with the hub party
  CHECK(cut_entropy(hub, {0}) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(cut_entropy(hub, {1}) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(cut_entropy(hub, {2}) == doctest::Approx(2.0).epsilon(1e-12));

  CHECK_THROWS_AS(ghz_state(1, 2), ShapeError);
  CHECK_THROWS_AS(ghz_state(3, 1), ShapeError);
  CHECK_THROWS_AS(w_state(1), ShapeError);
  CHECK_THROWS_AS(make_named("nope"), ShapeError);
  CHECK((make_named("ghz", 3, 2).amps() - ghz.amps()).norm() == 0.0);
}

TEST_CASE("schmidt measure certifies the canonical ranks") {
  AlsOptions opts;
  opts.seed = 91;

  auto eng = seeded_engine(92);
  const PureState prod = tensor_product(
      random_state(SystemShape({2}), eng),
      tensor_product(random_state(SystemShape({2}), eng), random_state(SystemShape({2}), eng)));
  const RankResult rp = schmidt_measure(prod, 2, opts);
  CHECK(rp.certified);
  CHECK(rp.rank == 1);
  CHECK(rp.schmidt_measure_bits == doctest::Approx(0.0));

  const RankResult rg = schmidt_measure(ghz_state(3, 2), 4, opts);
  CHECK(rg.certified);
  CHECK(rg.rank == 2);
  CHECK(rg.flattening_lower_bound == 2);

  const RankResult rw = schmidt_measure(w_state(3), 4, opts);
  CHECK(rw.certified);
  CHECK(rw.rank == 3);
  CHECK(rw.schmidt_measure_bits == doctest::Approx(std::log2(3.0)));
  CHECK(rw.border_rank_flag);
  bool escape_at_2 = false;
  for (const auto& f : rw.fits) {
    if (f.rank == 2) escape_at_2 = f.escape;
  }
  CHECK(escape_at_2);

  const RankResult rr = schmidt_measure(universal_resource_322(), 4, opts);
  CHECK(rr.certified);
  CHECK(rr.rank == 3);
  CHECK(rr.flattening_lower_bound == 3);  // the C^3 flattening rules out rank 2

  const RankResult rrand = schmidt_measure(random_state(SystemShape::qubits(3), eng), 3, opts);
  CHECK(rrand.certified);
  CHECK(rrand.rank == 2);

  // flattening bound never exceeds a certified rank
  for (const RankResult* r : {&rp, &rg, &rw, &rr, &rrand}) {
    CHECK(r->rank >= r->flattening_lower_bound);
  }
}

TEST_CASE("classify3 separates all six classes") {
  const Slocc3Class ghz = classify3(ghz_state(3, 2));
  CHECK(ghz.tag == Slocc3Tag::kGHZ);
  CHECK(ghz.tangle == doctest::Approx(1.0).epsilon(1e-12));

  const Slocc3Class w = classify3(w_state(3));
  CHECK(w.tag == Slocc3Tag::kW);
  CHECK(w.tangle < 1e-14);
  CHECK(w.local_ranks == std::array<int, 3>{2, 2, 2});

  const SystemShape q(std::vector<int>{2});
  const PureState zero = PureState::basis_state(q, 0);
  const PureState bc = tensor_product(zero, max_entangled(2));
  const Slocc3Class bisep_a = classify3(bc);
  CHECK(bisep_a.tag == Slocc3Tag::kBisepA);
  CHECK(bisep_a.local_ranks == std::array<int, 3>{1, 2, 2});

  const PureState ab = permute_parties(bc, {1, 2, 0});
  CHECK(classify3(ab).tag == Slocc3Tag::kBisepC);

  const PureState prod = tensor_product(zero, tensor_product(zero, zero));
  CHECK(classify3(prod).tag == Slocc3Tag::kProduct);

  CHECK_THROWS_AS(classify3(universal_resource_322()), ShapeError);
}

TEST_CASE("hyperdeterminant route agrees with the concurrence route") {
  auto eng = seeded_engine(93);
  for (int t = 0; t < 20; ++t) {
    const PureState s = random_state(SystemShape::qubits(3), eng);
    // the concurrence route takes square roots of near-zero eigenvalues,
    // which limits its own accuracy to ~1e-8
    CHECK(std::abs(three_tangle(s) - tangle_via_concurrences(s)) < 1e-7);
  }
}

TEST_CASE("classification is invariant under local unitaries") {
  auto eng = seeded_engine(94);
  for (int t = 0; t < 10; ++t) {
    const PureState s = t % 2 == 0 ? w_state(3) : random_state(SystemShape::qubits(3), eng);
    const ProductOperator u = random_local_unitary(s.shape(), eng);
    const PureState rotated = apply_product(u, s, true).state;
    CHECK(std::abs(three_tangle(rotated) - three_tangle(s)) < 1e-9);
    CHECK(classify3(rotated).tag == classify3(s).tag);
  }
}

TEST_CASE("reachability is the documented partial order") {
  CHECK_FALSE(reachable(Slocc3Tag::kGHZ, Slocc3Tag::kW));
  CHECK_FALSE(reachable(Slocc3Tag::kW, Slocc3Tag::kGHZ));
  CHECK(reachable(Slocc3Tag::kGHZ, Slocc3Tag::kProduct));
  CHECK(reachable(Slocc3Tag::kW, Slocc3Tag::kBisepB));
  CHECK(reachable(Slocc3Tag::kBisepA, Slocc3Tag::kProduct));
  CHECK_FALSE(reachable(Slocc3Tag::kBisepA, Slocc3Tag::kBisepB));
  CHECK_FALSE(reachable(Slocc3Tag::kProduct, Slocc3Tag::kBisepC));
  for (const auto t : {Slocc3Tag::kProduct, Slocc3Tag::kBisepA, Slocc3Tag::kW, Slocc3Tag::kGHZ}) {
    CHECK(reachable(t, t));
  }
}

TEST_CASE("the 322 resource is universal, certified by the explicit matrices") {
  const PureState phi = universal_resource_322();
  const std::vector<PureState> reps = maximal_reps_qubits3();  // {GHZ, W}
  const std::vector<std::optional<ProductOperator>> certs = {ghz_extraction_322(),
                                                             w_extraction_322()};
  const UniversalityVerdict v = universality_unambiguous(phi, reps, {}, certs);
  CHECK(v.universal);
  CHECK(v.reps[0].from_certificate);
  CHECK(v.reps[1].from_certificate);

  // and the search alone confirms it
  AlsOptions opts;
  opts.seed = 95;
  const UniversalityVerdict searched = universality_unambiguous(phi, reps, opts);
  CHECK(searched.universal);
  for (std::size_t i = 0; i < reps.size(); ++i) {
    const auto& r = searched.reps[i];
    CHECK(r.reachable);
    REQUIRE(r.witness.has_value());
    CHECK(verify_transform(conjugate(phi), reps[i], *r.witness).ok);
  }
}

TEST_CASE("the level-3 GHZ state is universal for three qubits") {
  AlsOptions opts;
  opts.seed = 96;
  const UniversalityVerdict v =
      universality_unambiguous(ghz_state(3, 3), maximal_reps_qubits3(), opts);
  CHECK(v.universal);
}

TEST_CASE("no three-qubit state is universal for three qubits") {
  const std::vector<PureState> reps = maximal_reps_qubits3();
  for (int t = 0; t < 3; ++t) {
    auto eng = seeded_engine(97, static_cast<std::uint64_t>(t));
    const PureState phi = random_state(SystemShape::qubits(3), eng);
    AlsOptions opts;
    opts.seed = 9700 + static_cast<std::uint64_t>(t);
    const UniversalityVerdict v = universality_unambiguous(phi, reps, opts);
    CHECK_FALSE(v.universal);
    // the obstruction matches the classifier: a GHZ-class state misses W
    const Slocc3Class cls = classify3(phi);
    if (cls.tag == Slocc3Tag::kGHZ) {
      CHECK(v.reps[0].reachable);
      CHECK_FALSE(v.reps[1].reachable);
    }
  }
}

TEST_CASE("schmidt rank never increases along accepted transforms") {
  AlsOptions opts;
  opts.seed = 98;
  const PureState phi = universal_resource_322();
  const RankResult r_phi = schmidt_measure(phi, 4, opts);
  for (const PureState& target : {w_state(3), ghz_state(3, 2)}) {
    const TransformSearch search = find_transform(phi, target, opts);
    REQUIRE(search.found);
    const RankResult r_target = schmidt_measure(target, 4, opts);
    CHECK(r_target.rank <= r_phi.rank);
  }
}

TEST_CASE("GHZ-level construction reconstructs states from decompositions") {
  AlsOptions opts;
  opts.seed = 99;

  // exact 2-term decomposition of GHZ, levels = 2
  const PureState ghz = ghz_state(3, 2);
  const RankResult rg = schmidt_measure(ghz, 2, opts);
  REQUIRE(rg.certified);
  const ProductOperator a2 = ghz_rank_construction(ghz, rg.decomposition, 2);
  const ApplyResult img2 = apply_product(a2, ghz_state(3, 2), false);
  CHECK((std::sqrt(2.0) * img2.state.amps() - ghz.amps()).norm() < 1e-9);

  // closed-form 3-term decomposition of W, levels = 3
  const PureState w = w_state(3);
  CpDecomposition wd;
  wd.shape = w.shape();
  const Eigen::Vector2cd e0(1.0, 0.0);
  const Eigen::Vector2cd e1(0.0, 1.0);
  const double c = 1.0 / std::sqrt(3.0);
  wd.terms.push_back({Complex(c, 0), {e1, e0, e0}});
  wd.terms.push_back({Complex(c, 0), {e0, e1, e0}});
  wd.terms.push_back({Complex(c, 0), {e0, e0, e1}});
  const ProductOperator a3 = ghz_rank_construction(w, wd, 3);
  const ApplyResult img3 = apply_product(a3, ghz_state(3, 3), false);
  CHECK((std::sqrt(3.0) * img3.state.amps() - w.amps()).norm() < 1e-9);

  // a generic rank-2 state padded into levels = 3
  auto eng = seeded_engine(100);
  const PureState s = random_state(SystemShape::qubits(3), eng);
  const RankResult rs = schmidt_measure(s, 3, opts);
  REQUIRE(rs.certified);
  const ProductOperator a = ghz_rank_construction(s, rs.decomposition, 3);
  const ApplyResult img = apply_product(a, ghz_state(3, 3), false);
  CHECK((std::sqrt(3.0) * img.state.amps() - s.amps()).norm() < 1e-9);

  // a decomposition that does not reconstruct the state is rejected
  CpDecomposition bogus = wd;
  bogus.terms[0].weight = Complex(1.0, 0);
  CHECK_THROWS_AS(ghz_rank_construction(w, bogus, 3), PreconditionError);
  // too many terms for the level count
  CHECK_THROWS_AS(ghz_rank_construction(w, wd, 2), PreconditionError);
}

TEST_CASE("generalized-W rank bound") {
  CHECK(rank_lower_bound_w(3, 2) == 3);
  CHECK(rank_lower_bound_w(4, 2) == 4);
  CHECK(rank_lower_bound_w(3, 4) == 7);
  CHECK_THROWS_AS(rank_lower_bound_w(3, 3), ShapeError);
  CHECK_THROWS_AS(rank_lower_bound_w(1, 2), ShapeError);
}
