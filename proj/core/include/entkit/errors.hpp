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

#include <stdexcept>
#include <string>

namespace entkit {

/// Party counts, dimensions or index layouts do not line up.
class ShapeError : public std::invalid_argument {
 public:
  explicit ShapeError(const std::string& what) : std::invalid_argument(what) {}
};

/// A file could not be parsed into a valid state/operator/POVM.
class ParseError : public std::runtime_error {
 public:
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

/// A basis is rank-deficient or too ill-conditioned to invert.
class SingularBasisError : public std::runtime_error {
 public:
  SingularBasisError(const std::string& what, double condition)
      : std::runtime_error(what), condition_number(condition) {}
  double condition_number;
};

/// A documented operation precondition does not hold at runtime
/// (e.g. a POVM handed to the forward protocol fails the unambiguity check).
class PreconditionError : public std::runtime_error {
 public:
  explicit PreconditionError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace entkit
