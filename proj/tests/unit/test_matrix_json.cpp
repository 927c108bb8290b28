// Copyright 2026 The boundent Authors
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

#include <gtest/gtest.h>

#include "boundent/errors.hpp"
#include "boundent/matrix_json.hpp"
#include "generators.hpp"

namespace boundent {
namespace {

TEST(MatrixJson, RoundTrip) {
  testing::Rng rng(41);
  const Operator h = testing::random_hermitian(rng, 8);
  const nlohmann::json j = to_json(h);
  EXPECT_EQ(j.at("dim").get<int>(), 8);
  EXPECT_EQ(j.at("re").size(), 8u);
  EXPECT_EQ(operator_from_json(nlohmann::json::parse(j.dump())).max_abs_diff(h), 0.0);
}

TEST(MatrixJson, RowMajorLayout) {
  const nlohmann::json j = to_json(Operator::basis_outer(2, 0, 1) * Complex(0.0, 2.0));
  EXPECT_EQ(j["re"][0][1].get<double>(), 0.0);
  EXPECT_EQ(j["im"][0][1].get<double>(), 2.0);
  EXPECT_EQ(j["im"][1][0].get<double>(), 0.0);
}

TEST(MatrixJson, ExtraKeysIgnored) {
  nlohmann::json j = to_json(Operator::identity(2));
  j["note"] = "x";
  EXPECT_NO_THROW(operator_from_json(j));
}

TEST(MatrixJson, MalformedInputsThrow) {
  EXPECT_THROW(operator_from_json(nlohmann::json::array()), DomainError);
  nlohmann::json j = to_json(Operator::identity(2));
  j["dim"] = 4;
  EXPECT_THROW(operator_from_json(j), DomainError);
  j = to_json(Operator::identity(2));
  j["re"][1] = nlohmann::json::array({1.0});
  EXPECT_THROW(operator_from_json(j), DomainError);
  j = to_json(Operator::identity(2));
  j["im"][0][0] = "zero";
  EXPECT_THROW(operator_from_json(j), DomainError);
  j = to_json(Operator::identity(2));
  j.erase("im");
  EXPECT_THROW(operator_from_json(j), DomainError);
}

}  // namespace
}  // namespace boundent
