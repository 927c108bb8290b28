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

#include <cmath>
#include <string>

#include "boundent/errors.hpp"
#include "boundent/tomography.hpp"

namespace boundent {
namespace {

std::string line_label(int line) {
  return std::string{static_cast<char>('0' + ((line >> 1) & 1)), static_cast<char>('0' + (line & 1))};
}

int parse_line(const std::string& s) {
  if (s.size() != 2 || (s[0] != '0' && s[0] != '1') || (s[1] != '0' && s[1] != '1')) {
    throw DomainError("line label must be two bits, got '" + s + "'");
  }
  return 2 * (s[0] - '0') + (s[1] - '0');
}

template <typename T>
T field(const nlohmann::json& rec, const char* key) {
  if (!rec.contains(key)) throw DomainError(std::string("tomography record missing '") + key + "'");
  try {
    return rec.at(key).get<T>();
  } catch (const nlohmann::json::exception&) {
    throw DomainError(std::string("tomography record has a bad '") + key + "'");
  }
}

}  // namespace

nlohmann::json to_json(const TomographyDataset& dataset) {
  nlohmann::json records = nlohmann::json::array();
  for (const auto& r : dataset.records) {
    records.push_back({{"setting", r.setting.id()},
                       {"detect", std::string(to_string(r.setting.detect()))},
                       {"line", line_label(r.line)},
                       {"quad", r.quad == Quadrature::kX ? "x" : "y"},
                       {"value", r.value},
                       {"sigma", r.sigma}});
  }
  return {{"records", records}};
}

TomographyDataset dataset_from_json(const nlohmann::json& j) {
  const nlohmann::json* records = &j;
  if (j.is_object()) {
    if (!j.contains("records")) throw DomainError("dataset object needs a 'records' array");
    records = &j.at("records");
  }
  if (!records->is_array()) throw DomainError("dataset records must be an array");
  TomographyDataset ds;
  for (const auto& rec : *records) {
    if (!rec.is_object()) throw DomainError("tomography record must be an object");
    const auto id = field<std::string>(rec, "setting");
    const Spin detect = rec.contains("detect") ? parse_spin(field<std::string>(rec, "detect")) : Spin::kC;
    ReadoutSetting setting = ReadoutSetting::from_id(id, detect);
    if (!setting.is_standard()) throw DomainError("unknown readout setting '" + id + "'");
    const auto quad = field<std::string>(rec, "quad");
    if (quad != "x" && quad != "y") throw DomainError("quadrature must be 'x' or 'y'");
    const double value = field<double>(rec, "value");
    const double sigma = rec.contains("sigma") ? field<double>(rec, "sigma") : 0.0;
    if (!std::isfinite(value) || !std::isfinite(sigma) || sigma < 0.0) {
      throw DomainError("tomography record value/sigma must be finite, sigma >= 0");
    }
    ds.records.push_back({setting, parse_line(field<std::string>(rec, "line")),
                          quad == "x" ? Quadrature::kX : Quadrature::kY, value, sigma});
  }
  return ds;
}

}  // namespace boundent
