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

// JSON file formats.
//
//   phase table:  {"dim": d, "alpha": [[a(0,1), ..., a(0,h)], ..., [a(d,1), ...]]}
//                 (d + 1) rows of h = (d - 1)/2 angles in radians.
//   state vector: {"dim": d, "amplitudes": [[re, im], ...]}  (d pairs)
//
// Floating-point values are written with 17 significant digits so that every
// double re-parses to the identical bit pattern.

#ifndef SICFID_IO_HPP
#define SICFID_IO_HPP

#include <filesystem>
#include <stdexcept>
#include <string>

#include <nlohmann/json.hpp>

#include "sicfid/verify.hpp"

namespace sicfid {

/// Malformed or mis-shaped input documents.
class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Serializes like nlohmann::json::dump(indent) except that floats use
/// "%.17g". Non-finite floats become null.
std::string dump_json(const nlohmann::json& value, int indent = 2);

nlohmann::json parse_json(const std::string& text);
nlohmann::json read_json_file(const std::filesystem::path& path);
void write_json_file(const std::filesystem::path& path, const nlohmann::json& value);

nlohmann::json matrix_to_json(const Eigen::MatrixXd& m);
nlohmann::json to_json(const PhaseVector& phases);
nlohmann::json to_json(const StateVector& phi);
nlohmann::json to_json(const ProbabilityTable& probs);

/// Throws FormatError naming the offending field or shape.
PhaseVector phase_vector_from_json(const nlohmann::json& j);
StateVector state_vector_from_json(const nlohmann::json& j);

}  // namespace sicfid

#endif  // SICFID_IO_HPP
