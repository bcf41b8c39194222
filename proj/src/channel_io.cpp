// Copyright 2026 The qcop authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qcop/channel_io.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "qcop/json_writer.hpp"

namespace qcop::io {

namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& origin, const std::string& path, const std::string& message) {
  throw ParseError(origin + ": " + (path.empty() ? "" : path + ": ") + message);
}

double read_finite(const json& j, const std::string& origin, const std::string& path) {
  if (!j.is_number()) fail(origin, path, "expected a number");
  const double v = j.get<double>();
  if (!std::isfinite(v)) fail(origin, path, "non-finite number rejected");
  return v;
}

Complex read_complex(const json& j, const std::string& origin, const std::string& path) {
  if (!j.is_array() || j.size() != 2) fail(origin, path, "expected a [re, im] pair");
  return {read_finite(j[0], origin, path + "[0]"), read_finite(j[1], origin, path + "[1]")};
}

Matrix read_matrix(const json& j, const std::string& origin, const std::string& path, int rows, int cols) {
  if (!j.is_array() || static_cast<int>(j.size()) != rows) {
    fail(origin, path, "expected a matrix with " + std::to_string(rows) + " rows");
  }
  Matrix m(rows, cols);
  for (int r = 0; r < rows; ++r) {
    const json& row = j[static_cast<size_t>(r)];
    const std::string row_path = path + "[" + std::to_string(r) + "]";
    if (!row.is_array() || static_cast<int>(row.size()) != cols) {
      fail(origin, row_path, "expected a row of " + std::to_string(cols) + " entries");
    }
    for (int c = 0; c < cols; ++c) {
      m(r, c) = read_complex(row[static_cast<size_t>(c)], origin, row_path + "[" + std::to_string(c) + "]");
    }
  }
  return m;
}

Vector read_vector(const json& j, const std::string& origin, const std::string& path, int size) {
  if (!j.is_array() || static_cast<int>(j.size()) != size) {
    fail(origin, path, "expected a vector of " + std::to_string(size) + " entries");
  }
  Vector v(size);
  for (int i = 0; i < size; ++i) {
    v(i) = read_complex(j[static_cast<size_t>(i)], origin, path + "[" + std::to_string(i) + "]");
  }
  return v;
}

const json& require_field(const json& j, const std::string& origin, const std::string& path, const std::string& name) {
  if (!j.contains(name)) fail(origin, path, "missing field \"" + name + "\"");
  return j.at(name);
}

int read_dimension(const json& j, const std::string& origin, const std::string& path) {
  const json& d = require_field(j, origin, path, "d");
  if (!d.is_number_integer()) fail(origin, path + "/d", "expected an integer dimension");
  const int value = d.get<int>();
  if (value < 2) fail(origin, path + "/d", "dimension must be >= 2");
  return value;
}

QuantumChannel parse_channel_object(const json& j, const std::string& origin, const std::string& path) {
  if (!j.is_object()) fail(origin, path, "expected a channel object");
  const int d = read_dimension(j, origin, path);
  const json& kind_field = require_field(j, origin, path, "kind");
  if (!kind_field.is_string()) fail(origin, path + "/kind", "expected a string");
  const std::string kind = kind_field.get<std::string>();

  if (kind == "kraus") {
    const json& ks = require_field(j, origin, path, "kraus");
    if (!ks.is_array() || ks.empty()) fail(origin, path + "/kraus", "expected a nonempty array of matrices");
    std::vector<Matrix> kraus;
    for (size_t i = 0; i < ks.size(); ++i) {
      kraus.push_back(read_matrix(ks[i], origin, path + "/kraus[" + std::to_string(i) + "]", d, d));
    }
    return QuantumChannel::from_kraus(std::move(kraus));
  }
  if (kind == "choi") {
    return QuantumChannel::from_choi(read_matrix(require_field(j, origin, path, "choi"), origin, path + "/choi", d * d, d * d));
  }
  if (kind == "identity") {
    return QuantumChannel::identity(d);
  }
  if (kind == "unitary") {
    return QuantumChannel::unitary(read_matrix(require_field(j, origin, path, "u"), origin, path + "/u", d, d));
  }
  if (kind == "cloning") {
    return QuantumChannel::cloning(d, read_finite(require_field(j, origin, path, "c"), origin, path + "/c"));
  }
  if (kind == "transpose_cloning") {
    return QuantumChannel::transpose_cloning(d, read_finite(require_field(j, origin, path, "c"), origin, path + "/c"));
  }
  if (kind == "semi_classical") {
    const json& povm = require_field(j, origin, path, "povm");
    const json& basis = require_field(j, origin, path, "basis");
    if (!povm.is_array() || povm.empty()) fail(origin, path + "/povm", "expected a nonempty array of matrices");
    if (!basis.is_array() || basis.size() != povm.size()) {
      fail(origin, path + "/basis", "expected one output ket per POVM element");
    }
    std::vector<Matrix> elements;
    std::vector<Vector> kets;
    for (size_t i = 0; i < povm.size(); ++i) {
      elements.push_back(read_matrix(povm[i], origin, path + "/povm[" + std::to_string(i) + "]", d, d));
      kets.push_back(read_vector(basis[i], origin, path + "/basis[" + std::to_string(i) + "]", d));
    }
    return QuantumChannel::semi_classical(std::move(elements), std::move(kets));
  }
  if (kind == "hamiltonian") {
    return QuantumChannel::hamiltonian(read_matrix(require_field(j, origin, path, "h"), origin, path + "/h", d, d));
  }
  if (kind == "mixture") {
    const double p = read_finite(require_field(j, origin, path, "p"), origin, path + "/p");
    QuantumChannel first = parse_channel_object(require_field(j, origin, path, "ch1"), origin, path + "/ch1");
    QuantumChannel second = parse_channel_object(require_field(j, origin, path, "ch2"), origin, path + "/ch2");
    if (first.dim() != d || second.dim() != d) {
      fail(origin, path, "mixture components must match the outer dimension");
    }
    return QuantumChannel::mixture(p, first, second);
  }
  fail(origin, path + "/kind", "unknown channel kind \"" + kind + "\"");
}

json parse_text(const std::string& text, const std::string& origin) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    size_t line = 1, column = 1;
    const size_t stop = std::min(text.size(), e.byte > 0 ? static_cast<size_t>(e.byte) - 1 : 0);
    for (size_t i = 0; i < stop; ++i) {
      if (text[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    throw ParseError(origin + ":" + std::to_string(line) + ":" + std::to_string(column) + ": " + e.what());
  } catch (const json::exception& e) {
    // e.g. number overflow: no byte offset available.
    throw ParseError(origin + ": " + e.what());
  }
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError(path + ": cannot open file");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void append_matrix(JsonWriter& w, const Matrix& m) {
  w.begin_array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    w.begin_array();
    for (Eigen::Index c = 0; c < m.cols(); ++c) {
      w.begin_array().value(m(r, c).real()).value(m(r, c).imag()).end_array();
    }
    w.end_array();
  }
  w.end_array();
}

}  // namespace

QuantumChannel parse_channel(const std::string& text, const std::string& origin) {
  return parse_channel_object(parse_text(text, origin), origin, "");
}

QuantumChannel load_channel(const std::string& path) {
  return parse_channel(read_file(path), path);
}

std::string channel_to_json(const QuantumChannel& ch) {
  JsonWriter w;
  w.begin_object();
  w.key("d").value(ch.dim());
  if (ch.has_kraus()) {
    w.key("kind").value("kraus");
    w.key("kraus").begin_array();
    for (const Matrix& k : ch.kraus()) append_matrix(w, k);
    w.end_array();
  } else {
    w.key("kind").value("choi");
    w.key("choi");
    append_matrix(w, ch.choi());
  }
  w.end_object();
  return w.str();
}

BipartiteState parse_state(const std::string& text, const std::string& origin) {
  const json j = parse_text(text, origin);
  if (!j.is_object()) fail(origin, "", "expected a state object");

  if (j.contains("pauli_r")) {
    const json& r = j.at("pauli_r");
    if (!r.is_array() || r.size() != 4) fail(origin, "/pauli_r", "expected a 4x4 real matrix");
    Eigen::Matrix4d coeffs;
    for (int a = 0; a < 4; ++a) {
      const json& row = r[static_cast<size_t>(a)];
      if (!row.is_array() || row.size() != 4) {
        fail(origin, "/pauli_r[" + std::to_string(a) + "]", "expected a row of 4 numbers");
      }
      for (int b = 0; b < 4; ++b) {
        coeffs(a, b) = read_finite(row[static_cast<size_t>(b)], origin,
                                   "/pauli_r[" + std::to_string(a) + "][" + std::to_string(b) + "]");
      }
    }
    return BipartiteState::from_pauli_r(coeffs);
  }

  if (!j.contains("dA") || !j.contains("dB")) {
    fail(origin, "", "expected either \"pauli_r\" or \"dA\"/\"dB\"/\"rho\" fields");
  }
  if (!j.at("dA").is_number_integer() || !j.at("dB").is_number_integer()) {
    fail(origin, "/dA", "expected integer dimensions");
  }
  const int d_a = j.at("dA").get<int>();
  const int d_b = j.at("dB").get<int>();
  if (d_a < 2 || d_b < 2) fail(origin, "/dA", "dimensions must be >= 2");
  const Matrix rho = read_matrix(require_field(j, origin, "", "rho"), origin, "/rho", d_a * d_b, d_a * d_b);
  return BipartiteState::from_density(d_a, d_b, rho);
}

BipartiteState load_state(const std::string& path) {
  return parse_state(read_file(path), path);
}

}  // namespace qcop::io
