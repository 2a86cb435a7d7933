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

#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace entkit {

/// Ordered list of local dimensions (d_1, ..., d_N) of a multipartite system.
///
/// Index convention used throughout the library and all file formats:
/// flat index i <-> multi-index (i_1, ..., i_N) in row-major order with
/// party 1 most significant, i.e. i = ((i_1 * d_2 + i_2) * d_3 + i_3) ...
class SystemShape {
 public:
  SystemShape() = default;
  explicit SystemShape(std::vector<int> dims);

  /// N qubits: (2, 2, ..., 2).
  static SystemShape qubits(int n);

  int party_count() const { return static_cast<int>(dims_.size()); }
  int dim(int party) const;
  const std::vector<int>& dims() const { return dims_; }
  std::int64_t total_dim() const { return total_; }

  bool operator==(const SystemShape& other) const { return dims_ == other.dims_; }
  bool operator!=(const SystemShape& other) const { return !(*this == other); }

  /// Party-wise composition: (d'_k) paired with (d_k) gives dims (d'_k * d_k).
  /// Within a paired party the outer (this) index is most significant.
  SystemShape paired_with(const SystemShape& inner) const;

  /// Plain concatenation of party lists.
  SystemShape concat(const SystemShape& other) const;

  /// Shape restricted to the given parties, in the given order.
  SystemShape subshape(const std::vector<int>& parties) const;

  /// Product of dims of parties after `party` (the row-major stride).
  std::int64_t stride(int party) const;

  std::int64_t flat_index(const std::vector<int>& multi) const;
  std::vector<int> multi_index(std::int64_t flat) const;

  /// Rendered as "3x2x2".
  std::string str() const;

 private:
  std::vector<int> dims_;
  std::int64_t total_ = 0;
};

}  // namespace entkit
