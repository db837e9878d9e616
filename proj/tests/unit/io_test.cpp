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

#include <cstring>
#include <random>

#include "gtest/gtest.h"
#include "oracles.hpp"

namespace sicfid {
namespace {

using nlohmann::json;

TEST(DumpJson, SeventeenSignificantDigits) {
  const std::string s = dump_json(json{{"x", 0.1}, {"y", 0.5}, {"n", 3}, {"s", "a\"b"}});
  EXPECT_NE(s.find("0.10000000000000001"), std::string::npos);
  EXPECT_NE(s.find("0.50000000000000000"), std::string::npos);
  EXPECT_NE(s.find("\"n\": 3"), std::string::npos);
  EXPECT_NE(s.find("\"a\\\"b\""), std::string::npos);
  EXPECT_EQ(dump_json(json(1.0)), "1.0000000000000000\n");
  EXPECT_EQ(dump_json(json(std::nan(""))), "null\n");
}

TEST(DumpJson, DoublesReparseBitExact) {
  std::mt19937_64 rng(1);
  std::uniform_real_distribution<double> u(-1e3, 1e3);
  json arr = json::array();
  std::vector<double> values{1e-300, -0.0, 5e-324, 1.7976931348623157e308};
  for (int i = 0; i < 500; ++i) values.push_back(u(rng) * std::pow(10.0, (i % 40) - 20));
  for (double v : values) arr.push_back(v);
  const json back = parse_json(dump_json(arr));
  ASSERT_EQ(back.size(), values.size());
  for (size_t i = 0; i < values.size(); ++i) {
    const double b = back[i].get<double>();
    EXPECT_EQ(std::memcmp(&b, &values[i], sizeof b), 0) << values[i];
  }
}

TEST(PhaseVectorJson, RoundTrip) {
  std::mt19937_64 rng(2);
  for (int d : {3, 5, 7, 13}) {
    const PhaseVector v = testing::random_phases(PrimeDim(d), rng);
    const json j = to_json(v);
    EXPECT_EQ(j["alpha"].size(), static_cast<size_t>(d + 1));
    EXPECT_EQ(j["alpha"][0].size(), static_cast<size_t>((d - 1) / 2));
    EXPECT_EQ(phase_vector_from_json(parse_json(dump_json(j))), v);
  }
}

TEST(PhaseVectorJson, ShapeDiagnostics) {
  EXPECT_THROW(phase_vector_from_json(parse_json(R"({"alpha": [[0]]})")), FormatError);
  EXPECT_THROW(phase_vector_from_json(parse_json(R"({"dim": 4, "alpha": []})")), FormatError);
  EXPECT_THROW(phase_vector_from_json(parse_json(R"({"dim": 3, "alpha": [[0],[0],[0]]})")),
               FormatError);
  EXPECT_THROW(phase_vector_from_json(parse_json(R"({"dim": 5, "alpha": [[0,0],[0,0],[0,0],[0,0],[0,0],[0]]})")),
               FormatError);
  EXPECT_THROW(phase_vector_from_json(parse_json(R"({"dim": 3, "alpha": [[0],[0],[0],["x"]]})")),
               FormatError);
  try {
    phase_vector_from_json(parse_json(R"({"dim": 3, "alpha": [[0],[0],[0]]})"));
  } catch (const FormatError& e) {
    EXPECT_NE(std::string(e.what()).find("rows"), std::string::npos);
  }
  EXPECT_NO_THROW(phase_vector_from_json(parse_json(R"({"dim": 3, "alpha": [[0],[1],[2],[3]]})")));
}

TEST(StateVectorJson, RoundTripAndErrors) {
  std::mt19937_64 rng(3);
  const StateVector phi(PrimeDim(5), testing::random_unit_vector(5, rng));
  EXPECT_EQ(state_vector_from_json(parse_json(dump_json(to_json(phi)))), phi);

  EXPECT_THROW(parse_json("{not json"), FormatError);
  EXPECT_THROW(state_vector_from_json(parse_json(R"({"dim": 2, "amplitudes": [[1,0]]})")),
               FormatError);
  EXPECT_THROW(state_vector_from_json(parse_json(R"({"dim": 2, "amplitudes": [[1,0],[1,0]]})")),
               FormatError);
  EXPECT_THROW(state_vector_from_json(parse_json(R"({"dim": 2, "amplitudes": [[1,0,0],[0,0]]})")),
               FormatError);
  EXPECT_NO_THROW(state_vector_from_json(parse_json(R"({"dim": 2, "amplitudes": [[1,0],[0,0]]})")));
}

}  // namespace
}  // namespace sicfid
