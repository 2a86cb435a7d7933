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

#include <benchmark/benchmark.h>

#include "entkit/classify.hpp"
#include "entkit/discrimination.hpp"
#include "entkit/dual_basis.hpp"
#include "entkit/named_states.hpp"
#include "entkit/protocol.hpp"
#include "entkit/random.hpp"
#include "entkit/tensor_ops.hpp"
#include "entkit/transform.hpp"

using namespace entkit;

static void BM_PairingTensorProduct(benchmark::State& state) {
  auto eng = seeded_engine(1);
  const PureState a = random_state(SystemShape({3, 2, 2}), eng);
  const PureState b = random_state(SystemShape({2, 2, 2}), eng);
  for (auto _ : state) {
    benchmark::DoNotOptimize(tensor_product(a, b, TensorMode::kPairParties));
  }
}
BENCHMARK(BM_PairingTensorProduct);

static void BM_PartialTrace(benchmark::State& state) {
  auto eng = seeded_engine(2);
  const PureState s = random_state(SystemShape({4, 4, 4}), eng);
  for (auto _ : state) {
    benchmark::DoNotOptimize(partial_trace(s, {0, 2}));
  }
}
BENCHMARK(BM_PartialTrace);

static void BM_CutEntropy(benchmark::State& state) {
  auto eng = seeded_engine(3);
  const PureState s = random_state(SystemShape({4, 4, 4}), eng);
  for (auto _ : state) {
    benchmark::DoNotOptimize(cut_entropy(s, {1}));
  }
}
BENCHMARK(BM_CutEntropy);

static void BM_DualBasis(benchmark::State& state) {
  const auto dim = static_cast<int>(state.range(0));
  auto eng = seeded_engine(4);
  const BasisSet basis(random_independent_basis(SystemShape({dim, dim}), eng));
  for (auto _ : state) {
    benchmark::DoNotOptimize(dual_basis(basis));
  }
}
BENCHMARK(BM_DualBasis)->Arg(2)->Arg(4);

static void BM_ThreeTangle(benchmark::State& state) {
  auto eng = seeded_engine(5);
  const PureState s = random_state(SystemShape::qubits(3), eng);
  for (auto _ : state) {
    benchmark::DoNotOptimize(three_tangle(s));
  }
}
BENCHMARK(BM_ThreeTangle);

static void BM_VerifyTransform(benchmark::State& state) {
  const PureState phi = universal_resource_322();
  const PureState w = w_state(3);
  const ProductOperator op = w_extraction_322();
  for (auto _ : state) {
    benchmark::DoNotOptimize(verify_transform(phi, w, op));
  }
}
BENCHMARK(BM_VerifyTransform);

static void BM_FindTransformExact(benchmark::State& state) {
  const PureState phi = universal_resource_322();
  const PureState ghz = ghz_state(3, 2);
  AlsOptions opts;
  opts.seed = 6;
  opts.restarts = 4;
  for (auto _ : state) {
    benchmark::DoNotOptimize(find_transform(phi, ghz, opts));
  }
}
BENCHMARK(BM_FindTransformExact);

static void BM_ForwardProtocolBipartite(benchmark::State& state) {
  auto eng = seeded_engine(7);
  const SystemShape shape({2, 2});
  const BasisSet basis(random_orthonormal_basis(shape, eng));
  const PureState phi = random_state(shape, eng);
  std::vector<Eigen::MatrixXcd> projectors;
  for (int i = 0; i < basis.size(); ++i) {
    const PureState p = tensor_product(phi, basis.state(i), TensorMode::kPairParties);
    projectors.push_back(p.amps() * p.amps().adjoint());
  }
  const SeparablePOVM povm =
      SeparablePOVM::from_conclusive(shape.paired_with(shape), std::move(projectors));
  for (auto _ : state) {
    benchmark::DoNotOptimize(protocol_from_measurement(phi, basis, povm));
  }
}
BENCHMARK(BM_ForwardProtocolBipartite);

BENCHMARK_MAIN();
