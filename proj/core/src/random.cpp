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

#include "entkit/random.hpp"

#include <cmath>

#include "entkit/errors.hpp"

namespace entkit {

namespace {

// splitmix64 finalizer; decorrelates (seed, stream) pairs.
std::uint64_t mix(std::uint64_t z) {
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

Eigen::MatrixXcd gaussian_matrix(int rows, int cols, std::mt19937_64& eng) {
  std::normal_distribution<double> dist(0.0, 1.0);
  Eigen::MatrixXcd m(rows, cols);
  for (int r = 0; r < rows; ++r) {
    for (int c = 0; c < cols; ++c) {
      const double re = dist(eng);
      const double im = dist(eng);
      m(r, c) = Complex(re, im);
    }
  }
  return m;
}

}  // namespace

std::mt19937_64 seeded_engine(std::uint64_t seed, std::uint64_t stream) {
  return std::mt19937_64(mix(mix(seed) ^ mix(stream * 0x9e3779b97f4a7c15ULL + 1)));
}

PureState random_state(const SystemShape& shape, std::mt19937_64& eng) {
  Eigen::VectorXcd v = gaussian_matrix(static_cast<int>(shape.total_dim()), 1, eng).col(0);
  return PureState::normalized(shape, std::move(v));
}

Eigen::MatrixXcd random_unitary(int d, std::mt19937_64& eng) {
  Eigen::MatrixXcd g = gaussian_matrix(d, d, eng);
  Eigen::HouseholderQR<Eigen::MatrixXcd> qr(g);
  Eigen::MatrixXcd q = qr.householderQ() * Eigen::MatrixXcd::Identity(d, d);
  Eigen::MatrixXcd r = qr.matrixQR().triangularView<Eigen::Upper>();
  // fix phases so the distribution is Haar
  for (int i = 0; i < d; ++i) {
    const Complex rii = r(i, i);
    const double a = std::abs(rii);
    q.col(i) *= (a > 0.0) ? rii / a : Complex(1, 0);
  }
  return q;
}

std::vector<PureState> random_orthonormal_basis(const SystemShape& shape, std::mt19937_64& eng) {
  const int d = static_cast<int>(shape.total_dim());
  Eigen::MatrixXcd u = random_unitary(d, eng);
  std::vector<PureState> out;
  out.reserve(static_cast<std::size_t>(d));
  for (int i = 0; i < d; ++i) {
    out.push_back(PureState::normalized(shape, u.col(i)));
  }
  return out;
}

std::vector<PureState> random_independent_basis(const SystemShape& shape, std::mt19937_64& eng,
                                                double max_condition) {
  const int d = static_cast<int>(shape.total_dim());
  for (int attempt = 0; attempt < 256; ++attempt) {
    Eigen::MatrixXcd g = gaussian_matrix(d, d, eng);
    g.colwise().normalize();
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(g);
    const auto& sv = svd.singularValues();
    if (sv(sv.size() - 1) > 0.0 && sv(0) / sv(sv.size() - 1) <= max_condition) {
      std::vector<PureState> out;
      out.reserve(static_cast<std::size_t>(d));
      for (int i = 0; i < d; ++i) {
        out.push_back(PureState::normalized(shape, g.col(i)));
      }
      return out;
    }
  }
  throw PreconditionError("could not sample a well-conditioned basis");
}

ProductOperator random_local_unitary(const SystemShape& shape, std::mt19937_64& eng) {
  std::vector<Eigen::MatrixXcd> fs;
  fs.reserve(static_cast<std::size_t>(shape.party_count()));
  for (int k = 0; k < shape.party_count(); ++k) {
    fs.push_back(random_unitary(shape.dim(k), eng));
  }
  return ProductOperator(std::move(fs));
}

}  // namespace entkit
