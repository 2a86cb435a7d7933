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

#include "entkit/shape.hpp"

#include <sstream>

#include "entkit/errors.hpp"

namespace entkit {

SystemShape::SystemShape(std::vector<int> dims) : dims_(std::move(dims)) {
  if (dims_.empty()) {
    throw ShapeError("SystemShape needs at least one party");
  }
  total_ = 1;
  for (int d : dims_) {
    if (d < 1) {
      throw ShapeError("party dimension must be >= 1, got " + std::to_string(d));
    }
    total_ *= d;
  }
}

SystemShape SystemShape::qubits(int n) {
  return SystemShape(std::vector<int>(static_cast<std::size_t>(n), 2));
}

int SystemShape::dim(int party) const {
  if (party < 0 || party >= party_count()) {
    throw ShapeError("party index " + std::to_string(party) + " out of range for " + str());
  }
  return dims_[static_cast<std::size_t>(party)];
}

SystemShape SystemShape::paired_with(const SystemShape& inner) const {
  if (party_count() != inner.party_count()) {
    throw ShapeError("party-wise pairing needs equal party counts: " + str() + " vs " + inner.str());
  }
  std::vector<int> out(dims_.size());
  for (std::size_t k = 0; k < dims_.size(); ++k) {
    out[k] = dims_[k] * inner.dims_[k];
  }
  return SystemShape(std::move(out));
}

SystemShape SystemShape::concat(const SystemShape& other) const {
  std::vector<int> out = dims_;
  out.insert(out.end(), other.dims_.begin(), other.dims_.end());
  return SystemShape(std::move(out));
}

SystemShape SystemShape::subshape(const std::vector<int>& parties) const {
  std::vector<int> out;
  out.reserve(parties.size());
  for (int p : parties) {
    out.push_back(dim(p));
  }
  return SystemShape(std::move(out));
}

std::int64_t SystemShape::stride(int party) const {
  std::int64_t s = 1;
  for (int k = party + 1; k < party_count(); ++k) {
    s *= dims_[static_cast<std::size_t>(k)];
  }
  return s;
}

std::int64_t SystemShape::flat_index(const std::vector<int>& multi) const {
  if (static_cast<int>(multi.size()) != party_count()) {
    throw ShapeError("multi-index length mismatch");
  }
  std::int64_t flat = 0;
  for (int k = 0; k < party_count(); ++k) {
    const int m = multi[static_cast<std::size_t>(k)];
    if (m < 0 || m >= dims_[static_cast<std::size_t>(k)]) {
      throw ShapeError("multi-index component out of range");
    }
    flat = flat * dims_[static_cast<std::size_t>(k)] + m;
  }
  return flat;
}

std::vector<int> SystemShape::multi_index(std::int64_t flat) const {
  std::vector<int> multi(static_cast<std::size_t>(party_count()));
  for (int k = party_count() - 1; k >= 0; --k) {
    const int d = dims_[static_cast<std::size_t>(k)];
    multi[static_cast<std::size_t>(k)] = static_cast<int>(flat % d);
    flat /= d;
  }
  return multi;
}

std::string SystemShape::str() const {
  std::ostringstream os;
  for (std::size_t k = 0; k < dims_.size(); ++k) {
    if (k > 0) os << 'x';
    os << dims_[k];
  }
  return os.str();
}

}  // namespace entkit
