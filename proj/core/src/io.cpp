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

#include "entkit/io.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "entkit/errors.hpp"

namespace entkit {

namespace {

using nlohmann::json;

json parse(const std::string& text) {
  json j = json::parse(text, nullptr, /*allow_exceptions=*/false);
  if (j.is_discarded()) {
    throw ParseError("malformed JSON document");
  }
  return j;
}

Complex complex_from(const json& j) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number()) {
    throw ParseError("complex entries must be [re, im] number pairs");
  }
  const double re = j[0].get<double>();
  const double im = j[1].get<double>();
  if (!std::isfinite(re) || !std::isfinite(im)) {
    throw ParseError("non-finite entry in input");
  }
  return {re, im};
}

json complex_to(const Complex& z) { return json::array({z.real(), z.imag()}); }

SystemShape shape_from(const json& j) {
  if (!j.is_array() || j.empty()) {
    throw ParseError("\"shape\" must be a nonempty integer list");
  }
  std::vector<int> dims;
  for (const auto& e : j) {
    if (!e.is_number_integer()) {
      throw ParseError("\"shape\" must be a nonempty integer list");
    }
    dims.push_back(e.get<int>());
  }
  try {
    return SystemShape(dims);
  } catch (const ShapeError& e) {
    throw ParseError(std::string("invalid shape: ") + e.what());
  }
}

Eigen::VectorXcd amps_from(const json& j, std::int64_t expected) {
  if (!j.is_array()) {
    throw ParseError("\"amps\" must be a list of [re, im] pairs");
  }
  if (static_cast<std::int64_t>(j.size()) != expected) {
    throw ParseError("amplitude list has length " + std::to_string(j.size()) + ", expected " +
                     std::to_string(expected));
  }
  Eigen::VectorXcd v(expected);
  for (std::int64_t i = 0; i < expected; ++i) {
    v(i) = complex_from(j[static_cast<std::size_t>(i)]);
  }
  return v;
}

json amps_to(const Eigen::VectorXcd& v) {
  json a = json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    a.push_back(complex_to(v(i)));
  }
  return a;
}

PureState state_from(const json& j, const SystemShape& shape) {
  if (!j.contains("amps")) {
    throw ParseError("state document is missing \"amps\"");
  }
  Eigen::VectorXcd v = amps_from(j["amps"], shape.total_dim());
  std::string label;
  if (j.contains("label")) {
    if (!j["label"].is_string()) throw ParseError("\"label\" must be a string");
    label = j["label"].get<std::string>();
  }
  try {
    return PureState::normalized(shape, std::move(v), std::move(label));
  } catch (const ShapeError& e) {
    throw ParseError(std::string("invalid state: ") + e.what());
  }
}

}  // namespace

PureState state_from_json(const std::string& text) {
  json j = parse(text);
  if (!j.contains("shape")) throw ParseError("state document is missing \"shape\"");
  return state_from(j, shape_from(j["shape"]));
}

std::string state_to_json(const PureState& s) {
  json j;
  j["shape"] = s.shape().dims();
  j["amps"] = amps_to(s.amps());
  if (!s.label().empty()) j["label"] = s.label();
  return j.dump(1) + "\n";
}

std::vector<PureState> states_from_json(const std::string& text) {
  json j = parse(text);
  if (j.contains("states")) {
    if (!j.contains("shape")) throw ParseError("states document is missing \"shape\"");
    const SystemShape shape = shape_from(j["shape"]);
    if (!j["states"].is_array() || j["states"].empty()) {
      throw ParseError("\"states\" must be a nonempty list");
    }
    std::vector<PureState> out;
    for (const auto& e : j["states"]) {
      out.push_back(state_from(e, shape));
    }
    return out;
  }
  return {state_from_json(text)};
}

std::string states_to_json(const std::vector<PureState>& states) {
  if (states.empty()) throw ShapeError("states_to_json needs at least one state");
  json j;
  j["shape"] = states[0].shape().dims();
  json arr = json::array();
  for (const auto& s : states) {
    if (s.shape() != states[0].shape()) {
      throw ShapeError("states_to_json: mixed shapes");
    }
    json e;
    e["amps"] = amps_to(s.amps());
    if (!s.label().empty()) e["label"] = s.label();
    arr.push_back(std::move(e));
  }
  j["states"] = std::move(arr);
  return j.dump(1) + "\n";
}

ProductOperator operator_from_json(const std::string& text) {
  json j = parse(text);
  if (!j.contains("factors") || !j["factors"].is_array() || j["factors"].empty()) {
    throw ParseError("operator document needs a nonempty \"factors\" list");
  }
  std::vector<Eigen::MatrixXcd> factors;
  for (const auto& f : j["factors"]) {
    if (!f.contains("rows") || !f.contains("cols") || !f.contains("entries")) {
      throw ParseError("factor needs \"rows\", \"cols\" and \"entries\"");
    }
    const int rows = f["rows"].get<int>();
    const int cols = f["cols"].get<int>();
    if (rows < 1 || cols < 1) throw ParseError("factor dimensions must be positive");
    const auto& entries = f["entries"];
    if (!entries.is_array() || static_cast<int>(entries.size()) != rows * cols) {
      throw ParseError("factor entry count does not match rows*cols");
    }
    Eigen::MatrixXcd m(rows, cols);
    for (int r = 0; r < rows; ++r) {
      for (int c = 0; c < cols; ++c) {
        m(r, c) = complex_from(entries[static_cast<std::size_t>(r * cols + c)]);
      }
    }
    factors.push_back(std::move(m));
  }
  return ProductOperator(std::move(factors));
}

std::string operator_to_json(const ProductOperator& op, const std::string& label) {
  json j;
  json arr = json::array();
  for (const auto& f : op.factors()) {
    json e;
    e["rows"] = static_cast<int>(f.rows());
    e["cols"] = static_cast<int>(f.cols());
    json entries = json::array();
    for (Eigen::Index r = 0; r < f.rows(); ++r) {
      for (Eigen::Index c = 0; c < f.cols(); ++c) {
        entries.push_back(complex_to(f(r, c)));
      }
    }
    e["entries"] = std::move(entries);
    arr.push_back(std::move(e));
  }
  j["factors"] = std::move(arr);
  if (!label.empty()) j["label"] = label;
  return j.dump(1) + "\n";
}

SeparablePOVM povm_from_json(const std::string& text) {
  json j = parse(text);
  if (!j.contains("shape") || !j.contains("elements")) {
    throw ParseError("povm document needs \"shape\" and \"elements\"");
  }
  const SystemShape shape = shape_from(j["shape"]);
  const std::int64_t dim = shape.total_dim();
  if (!j["elements"].is_array() || j["elements"].size() < 2) {
    throw ParseError("povm needs at least two elements (conclusive + inconclusive)");
  }
  std::vector<Eigen::MatrixXcd> elements;
  for (const auto& e : j["elements"]) {
    if (!e.contains("matrix") || !e["matrix"].is_array() ||
        static_cast<std::int64_t>(e["matrix"].size()) != dim * dim) {
      throw ParseError("povm element matrix must have dim^2 entries");
    }
    Eigen::MatrixXcd m(dim, dim);
    for (std::int64_t r = 0; r < dim; ++r) {
      for (std::int64_t c = 0; c < dim; ++c) {
        m(r, c) = complex_from(e["matrix"][static_cast<std::size_t>(r * dim + c)]);
      }
    }
    elements.push_back(std::move(m));
  }
  double scale = 1.0;
  if (j.contains("scale")) scale = j["scale"].get<double>();
  std::vector<std::vector<Eigen::VectorXcd>> factors;
  if (j.contains("factors")) {
    for (const auto& row : j["factors"]) {
      std::vector<Eigen::VectorXcd> vecs;
      if (!row.is_array() || static_cast<int>(row.size()) != shape.party_count()) {
        throw ParseError("povm factorization party count mismatch");
      }
      for (int k = 0; k < shape.party_count(); ++k) {
        const auto& ve = row[static_cast<std::size_t>(k)];
        if (!ve.is_array() || static_cast<int>(ve.size()) != shape.dim(k)) {
          throw ParseError("povm factorization vector length mismatch");
        }
        Eigen::VectorXcd v(shape.dim(k));
        for (int i = 0; i < shape.dim(k); ++i) {
          v(i) = complex_from(ve[static_cast<std::size_t>(i)]);
        }
        vecs.push_back(std::move(v));
      }
      factors.push_back(std::move(vecs));
    }
  }
  try {
    return SeparablePOVM(shape, std::move(elements), std::move(factors), scale);
  } catch (const std::exception& e) {
    throw ParseError(std::string("invalid POVM: ") + e.what());
  }
}

std::string povm_to_json(const SeparablePOVM& povm) {
  json j;
  j["shape"] = povm.shape().dims();
  j["scale"] = povm.scale();
  json els = json::array();
  for (int i = 0; i <= povm.conclusive_count(); ++i) {
    const auto& m = povm.element(i);
    json e;
    json entries = json::array();
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
      for (Eigen::Index c = 0; c < m.cols(); ++c) {
        entries.push_back(complex_to(m(r, c)));
      }
    }
    e["matrix"] = std::move(entries);
    els.push_back(std::move(e));
  }
  j["elements"] = std::move(els);
  if (povm.has_factorizations()) {
    json rows = json::array();
    for (const auto& vecs : povm.factor_vectors()) {
      json row = json::array();
      for (const auto& v : vecs) {
        row.push_back(amps_to(v));
      }
      rows.push_back(std::move(row));
    }
    j["factors"] = std::move(rows);
  }
  return j.dump(1) + "\n";
}

CpDecomposition decomposition_from_json(const std::string& text) {
  json j = parse(text);
  if (!j.contains("shape") || !j.contains("terms")) {
    throw ParseError("decomposition document needs \"shape\" and \"terms\"");
  }
  CpDecomposition out;
  out.shape = shape_from(j["shape"]);
  if (!j["terms"].is_array() || j["terms"].empty()) {
    throw ParseError("\"terms\" must be a nonempty list");
  }
  for (const auto& t : j["terms"]) {
    if (!t.contains("weight") || !t.contains("factors")) {
      throw ParseError("decomposition term needs \"weight\" and \"factors\"");
    }
    CpTerm term;
    term.weight = complex_from(t["weight"]);
    if (!t["factors"].is_array() || static_cast<int>(t["factors"].size()) != out.shape.party_count()) {
      throw ParseError("decomposition term party count mismatch");
    }
    for (int k = 0; k < out.shape.party_count(); ++k) {
      term.factors.push_back(amps_from(t["factors"][static_cast<std::size_t>(k)], out.shape.dim(k)));
    }
    out.terms.push_back(std::move(term));
  }
  return out;
}

std::string decomposition_to_json(const CpDecomposition& decomposition) {
  json j;
  j["shape"] = decomposition.shape.dims();
  json terms = json::array();
  for (const auto& t : decomposition.terms) {
    json e;
    e["weight"] = complex_to(t.weight);
    json fs = json::array();
    for (const auto& f : t.factors) {
      fs.push_back(amps_to(f));
    }
    e["factors"] = std::move(fs);
    terms.push_back(std::move(e));
  }
  j["terms"] = std::move(terms);
  return j.dump(1) + "\n";
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw ParseError("cannot open file: " + path);
  }
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw ParseError("cannot write file: " + path);
  }
  out << text;
}

PureState read_state_file(const std::string& path) { return state_from_json(read_text_file(path)); }

void write_state_file(const std::string& path, const PureState& s) {
  write_text_file(path, state_to_json(s));
}

std::vector<PureState> read_states(const std::vector<std::string>& paths) {
  if (paths.empty()) {
    throw ParseError("no input files given");
  }
  if (paths.size() == 1) {
    return states_from_json(read_text_file(paths[0]));
  }
  std::vector<PureState> out;
  out.reserve(paths.size());
  for (const auto& p : paths) {
    out.push_back(read_state_file(p));
  }
  return out;
}

ProductOperator read_operator_file(const std::string& path) {
  return operator_from_json(read_text_file(path));
}

SeparablePOVM read_povm_file(const std::string& path) { return povm_from_json(read_text_file(path)); }

}  // namespace entkit
