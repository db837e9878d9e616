// Copyright 2026 The sicfid Authors
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

#include "sicfid/io.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace sicfid {

using nlohmann::json;

namespace {

std::string format_double(double v) {
  if (!std::isfinite(v)) return "null";
  char buf[40];
  // '#' keeps trailing zeros, so every value shows 17 digits and a point.
  std::snprintf(buf, sizeof buf, "%#.17g", v);
  std::string s(buf);
  if (s.back() == '.') s += '0';
  return s;
}

bool is_scalar(const json& v) { return !v.is_object() && !v.is_array(); }

void dump(const json& v, int indent, int depth, std::string& out) {
  const std::string pad(static_cast<size_t>(indent * (depth + 1)), ' ');
  const std::string close_pad(static_cast<size_t>(indent * depth), ' ');
  if (v.is_number_float()) {
    out += format_double(v.get<double>());
  } else if (v.is_object()) {
    if (v.empty()) {
      out += "{}";
      return;
    }
    out += "{\n";
    bool first = true;
    for (auto it = v.begin(); it != v.end(); ++it) {
      if (!first) out += ",\n";
      first = false;
      out += pad + json(it.key()).dump() + ": ";
      dump(it.value(), indent, depth + 1, out);
    }
    out += "\n" + close_pad + "}";
  } else if (v.is_array()) {
    if (v.empty()) {
      out += "[]";
      return;
    }
    const bool flat = std::all_of(v.begin(), v.end(), is_scalar);
    out += flat ? "[" : "[\n";
    bool first = true;
    for (const auto& e : v) {
      if (!first) out += flat ? ", " : ",\n";
      first = false;
      if (!flat) out += pad;
      dump(e, indent, depth + 1, out);
    }
    out += flat ? "]" : "\n" + close_pad + "]";
  } else {
    out += v.dump();
  }
}

int read_dim(const json& j) {
  if (!j.is_object()) throw FormatError("expected a JSON object");
  if (!j.contains("dim") || !j["dim"].is_number_integer()) {
    throw FormatError("missing or non-integer field 'dim'");
  }
  return j["dim"].get<int>();
}

double read_number(const json& v, const std::string& where) {
  if (!v.is_number()) throw FormatError(where + " is not a number");
  return v.get<double>();
}

}  // namespace

std::string dump_json(const json& value, int indent) {
  std::string out;
  dump(value, indent, 0, out);
  out += "\n";
  return out;
}

json parse_json(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw FormatError(std::string("malformed JSON: ") + e.what());
  }
}

json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw FormatError("cannot open " + path.string());
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_json(ss.str());
}

void write_json_file(const std::filesystem::path& path, const json& value) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << dump_json(value);
  if (!out) throw std::runtime_error("write failed for " + path.string());
}

json matrix_to_json(const Eigen::MatrixXd& m) {
  json rows = json::array();
  for (int i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (int c = 0; c < m.cols(); ++c) row.push_back(m(i, c));
    rows.push_back(std::move(row));
  }
  return rows;
}

json to_json(const PhaseVector& phases) {
  return {{"dim", phases.dim().value()}, {"alpha", matrix_to_json(phases.angles())}};
}

json to_json(const StateVector& phi) {
  json amps = json::array();
  for (const auto& a : phi.amplitudes()) amps.push_back({a.real(), a.imag()});
  return {{"dim", phi.dim().value()}, {"amplitudes", std::move(amps)}};
}

json to_json(const ProbabilityTable& probs) {
  return {{"dim", probs.dim.value()}, {"p", matrix_to_json(probs.p)}};
}

PhaseVector phase_vector_from_json(const json& j) {
  const int d = read_dim(j);
  if (!is_prime(d) || d % 2 == 0) {
    throw FormatError("phase table dimension must be an odd prime, got " + std::to_string(d));
  }
  const int rows = d + 1;
  const int cols = (d - 1) / 2;
  if (!j.contains("alpha") || !j["alpha"].is_array()) {
    throw FormatError("missing array field 'alpha'");
  }
  const json& alpha = j["alpha"];
  if (static_cast<int>(alpha.size()) != rows) {
    throw FormatError("'alpha' must have " + std::to_string(rows) + " rows (d+1), got " +
                      std::to_string(alpha.size()));
  }
  Eigen::MatrixXd angles(rows, cols);
  for (int r = 0; r < rows; ++r) {
    const json& row = alpha[static_cast<size_t>(r)];
    if (!row.is_array() || static_cast<int>(row.size()) != cols) {
      throw FormatError("'alpha' row " + std::to_string(r) + " must have " +
                        std::to_string(cols) + " angles ((d-1)/2)");
    }
    for (int c = 0; c < cols; ++c) {
      angles(r, c) = read_number(row[static_cast<size_t>(c)],
                                 "alpha[" + std::to_string(r) + "][" + std::to_string(c) + "]");
    }
  }
  return PhaseVector(PrimeDim(d), angles);
}

StateVector state_vector_from_json(const json& j) {
  const int d = read_dim(j);
  if (!is_prime(d)) throw FormatError("dimension must be prime, got " + std::to_string(d));
  if (!j.contains("amplitudes") || !j["amplitudes"].is_array()) {
    throw FormatError("missing array field 'amplitudes'");
  }
  const json& amps = j["amplitudes"];
  if (static_cast<int>(amps.size()) != d) {
    throw FormatError("'amplitudes' has " + std::to_string(amps.size()) + " entries, expected " +
                      std::to_string(d));
  }
  Eigen::VectorXcd v(d);
  for (int i = 0; i < d; ++i) {
    const json& pair = amps[static_cast<size_t>(i)];
    const std::string where = "amplitudes[" + std::to_string(i) + "]";
    if (!pair.is_array() || pair.size() != 2) {
      throw FormatError(where + " must be a [real, imaginary] pair");
    }
    v(i) = Complex(read_number(pair[0], where), read_number(pair[1], where));
  }
  try {
    return StateVector(PrimeDim(d), std::move(v));
  } catch (const std::invalid_argument& e) {
    throw FormatError(e.what());
  }
}

}  // namespace sicfid
