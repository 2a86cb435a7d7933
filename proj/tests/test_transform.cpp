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

#include "entkit/errors.hpp"
#include "entkit/named_states.hpp"
#include "entkit/random.hpp"
#include "entkit/tensor_ops.hpp"
#include "entkit/transform.hpp"

using namespace entkit;

TEST_CASE("verify_transform accepts the explicit extraction matrices") {
  const PureState phi = universal_resource_322();

  const TransformCheck w = verify_transform(phi, w_state(3), w_extraction_322());
  CHECK(w.ok);
  CHECK(std::abs(w.mu - Complex(1, 0)) < 1e-12);
  CHECK(w.residual < 1e-12);

  const TransformCheck g = verify_transform(phi, ghz_state(3, 2), ghz_extraction_322());
  CHECK(g.ok);
  CHECK(std::abs(g.mu - Complex(std::sqrt(1.5), 0)) < 1e-12);
  CHECK(g.residual < 1e-12);
}

TEST_CASE("verify_transform identity and mismatch") {
  auto eng = seeded_engine(41);
  const PureState s = random_state(SystemShape({2, 2, 2}), eng);
  const TransformCheck id = verify_transform(s, s, ProductOperator::identity(s.shape()));
  CHECK(id.ok);
  CHECK(std::abs(id.mu - Complex(1, 0)) < 1e-12);

  // the W matrix does not map the resource onto GHZ
  const TransformCheck bad =
      verify_transform(universal_resource_322(), ghz_state(3, 2), w_extraction_322());
  CHECK_FALSE(bad.ok);
  CHECK(bad.residual > 0.3);
}

TEST_CASE("verify_transform rejects zero images") {
  const SystemShape q(std::vector<int>{2});
  const ProductOperator zero({Eigen::MatrixXcd::Zero(2, 2)});
  CHECK_THROWS_AS(verify_transform(PureState::basis_state(q, 0), PureState::basis_state(q, 0), zero),
                  PreconditionError);
}

TEST_CASE("find_transform finds the identity-like map") {
  auto eng = seeded_engine(42);
  const PureState s = random_state(SystemShape({2, 2, 2}), eng);
  AlsOptions opts;
  opts.seed = 5;
  const TransformSearch r = find_transform(s, s, opts);
  CHECK(r.found);
  CHECK(r.residual < 1e-12);
}

TEST_CASE("find_transform reaches both maximal states from the 322 resource") {
  const PureState phi = universal_resource_322();
  AlsOptions opts;
  opts.seed = 6;

  const TransformSearch to_w = find_transform(phi, w_state(3), opts);
  CHECK(to_w.found);
  CHECK(verify_transform(phi, w_state(3), *to_w.op).ok);

  const TransformSearch to_ghz = find_transform(phi, ghz_state(3, 2), opts);
  CHECK(to_ghz.found);
  CHECK(verify_transform(phi, ghz_state(3, 2), *to_ghz.op).ok);
}

TEST_CASE("find_transform separates the two maximal classes") {
  AlsOptions opts;
  opts.seed = 7;
  const TransformSearch g2w = find_transform(ghz_state(3, 2), w_state(3), opts);
  CHECK_FALSE(g2w.found);
  CHECK(g2w.border_rank_escape);  // approached only with growing factors
  CHECK(g2w.residual > 1e-9);
  CHECK(g2w.residual < 0.2);

  const TransformSearch w2g = find_transform(w_state(3), ghz_state(3, 2), opts);
  CHECK_FALSE(w2g.found);
  CHECK_FALSE(w2g.border_rank_escape);  // hard plateau, no blow-up
  CHECK(w2g.residual > 0.3);
}

TEST_CASE("find_transform is deterministic for a fixed seed") {
  const PureState phi = universal_resource_322();
  AlsOptions opts;
  opts.seed = 8;
  const TransformSearch a = find_transform(phi, ghz_state(3, 2), opts);
  const TransformSearch b = find_transform(phi, ghz_state(3, 2), opts);
  REQUIRE(a.found);
  REQUIRE(b.found);
  CHECK(a.residual == b.residual);
  for (int k = 0; k < a.op->party_count(); ++k) {
    CHECK((a.op->factor(k) - b.op->factor(k)).norm() == 0.0);
  }
}

TEST_CASE("sweep residuals are non-increasing") {
  AlsOptions opts;
  opts.seed = 9;
  opts.restarts = 2;
  const TransformSearch r = find_transform(ghz_state(3, 2), w_state(3), opts);
  const auto& traj = r.residual_trajectory;
  REQUIRE(traj.size() > 10);
  for (std::size_t i = 1; i < traj.size(); ++i) {
    CHECK(traj[i] <= traj[i - 1] + 1e-12);
  }
}

TEST_CASE("search results verify whenever the search succeeds") {
  auto eng = seeded_engine(43);
  const SystemShape shape({2, 2, 2});
  for (int t = 0; t < 5; ++t) {
    const PureState phi = random_state(shape, eng);
    const PureState target = random_state(shape, eng);
    AlsOptions opts;
    opts.seed = 100 + static_cast<std::uint64_t>(t);
    const TransformSearch r = find_transform(phi, target, opts);
    REQUIRE(r.found);  // generic pairs live in the dominant class
    CHECK(verify_transform(phi, target, *r.op).ok);
    CHECK(r.op->max_factor_norm() <= tol::kNormCap);
  }
}

TEST_CASE("composition realizes transitive reachability") {
  // 322 resource -> GHZ by the explicit matrix, GHZ -> generic target by
  // search; the per-party product carries the composite transform
  auto eng = seeded_engine(45);
  const PureState target = random_state(SystemShape({2, 2, 2}), eng);
  AlsOptions opts;
  opts.seed = 46;
  const TransformSearch leg = find_transform(ghz_state(3, 2), target, opts);
  REQUIRE(leg.found);
  const ProductOperator m = compose(*leg.op, ghz_extraction_322());
  CHECK(verify_transform(universal_resource_322(), target, m).ok);

  CHECK_THROWS_AS(compose(ghz_extraction_322(), ghz_extraction_322()), ShapeError);
}

TEST_CASE("find_transform rejects mismatched party counts") {
  auto eng = seeded_engine(44);
  const PureState a = random_state(SystemShape({2, 2}), eng);
  const PureState b = random_state(SystemShape({2, 2, 2}), eng);
  CHECK_THROWS_AS(find_transform(a, b, {}), ShapeError);
}
