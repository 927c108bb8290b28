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

#include "boundent_cli/io.hpp"

#include <cmath>
#include <fstream>
#include <iostream>

#include "boundent/errors.hpp"
#include "boundent/matrix_json.hpp"

namespace boundent::cli {

nlohmann::json read_json_file(const std::string& path) {
  try {
    if (path == "-") return nlohmann::json::parse(std::cin);
    std::ifstream in(path);
    if (!in) throw DomainError("cannot open " + path);
    return nlohmann::json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw DomainError("cannot parse " + path + ": " + e.what());
  }
}

void write_json(const nlohmann::json& doc, const std::string& path) {
  if (path.empty() || path == "-") {
    std::cout << doc.dump(2) << '\n';
    return;
  }
  std::ofstream out(path);
  if (!out) throw DomainError("cannot write " + path);
  out << doc.dump(2) << '\n';
  if (!out) throw DomainError("write failed for " + path);
}

Operator operator_from_document(const nlohmann::json& doc) {
  if (doc.is_object() && doc.contains("state")) return operator_from_json(doc.at("state"));
  return operator_from_json(doc);
}

DensityOperator read_state(const std::string& path, double tolerance) {
  return DensityOperator(operator_from_document(read_json_file(path)), tolerance, PsdCheck::kReport);
}

nlohmann::json to_json(const ParamBlob& blob) {
  nlohmann::json j{{"a1", blob.a.a1}, {"a2", blob.a.a2}, {"a3", blob.a.a3}};
  if (blob.p) j["p"] = *blob.p;
  return j;
}

namespace {

double number_field(const nlohmann::json& j, const char* key) {
  if (!j.contains(key) || !j.at(key).is_number()) {
    throw DomainError(std::string("parameter blob needs a numeric \"") + key + "\"");
  }
  return j.at(key).get<double>();
}

}  // namespace

ParamBlob param_blob_from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw DomainError("parameter blob must be a JSON object");
  ParamBlob blob;
  blob.a = {number_field(j, "a1"), number_field(j, "a2"), number_field(j, "a3")};
  if (j.contains("p")) blob.p = number_field(j, "p");
  return blob;
}

nlohmann::json to_json(const PptReport& report) {
  nlohmann::json cuts = nlohmann::json::array();
  for (const auto& c : report.cuts) {
    cuts.push_back({{"cut", c.label}, {"min_eigenvalue", c.min_eigenvalue}, {"ppt", c.ppt}});
  }
  return {{"cuts", cuts}, {"all_ppt", report.all_ppt()}};
}

}  // namespace boundent::cli
