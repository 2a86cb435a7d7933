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

#include <string>
#include <vector>

#include "entkit/cp_decomposition.hpp"
#include "entkit/povm.hpp"
#include "entkit/product_operator.hpp"
#include "entkit/state.hpp"

namespace entkit {

// JSON documents; amplitudes are [re, im] pairs in the global index order
// (party 1 most significant, row-major). Parsers reject length mismatches
// and non-finite entries with ParseError.
//
//   state:    {"shape": [3,2,2], "amps": [[re,im], ...], "label": "..."}
//   states:   {"shape": [...], "states": [{"amps": [...], "label": ...}, ...]}
//   operator: {"factors": [{"rows": r, "cols": c, "entries": [[re,im] x r*c]}], "label": ...}
//   povm:     {"shape": [...], "scale": c, "elements": [{"matrix": [[re,im] x dim^2]}, ...],
//              "factors": [[[ [re,im] x d_k ] per party] per conclusive element]}
//   cp:       {"shape": [...], "terms": [{"weight": [re,im], "factors": [[...], ...]}]}

PureState state_from_json(const std::string& text);
std::string state_to_json(const PureState& s);

std::vector<PureState> states_from_json(const std::string& text);
std::string states_to_json(const std::vector<PureState>& states);

ProductOperator operator_from_json(const std::string& text);
std::string operator_to_json(const ProductOperator& op, const std::string& label = {});

SeparablePOVM povm_from_json(const std::string& text);
std::string povm_to_json(const SeparablePOVM& povm);

CpDecomposition decomposition_from_json(const std::string& text);
std::string decomposition_to_json(const CpDecomposition& decomposition);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

PureState read_state_file(const std::string& path);
void write_state_file(const std::string& path, const PureState& s);

/// One multi-state document, or a list of single-state files.
std::vector<PureState> read_states(const std::vector<std::string>& paths);

ProductOperator read_operator_file(const std::string& path);
SeparablePOVM read_povm_file(const std::string& path);

}  // namespace entkit
