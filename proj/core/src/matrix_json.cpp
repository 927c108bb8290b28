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

#include "boundent/matrix_json.hpp"

#include <string>

#include "boundent/errors.hpp"

namespace boundent {

nlohmann::json to_json(const Operator& op) {
  const int d = op.dim();
  nlohmann::json re = nlohmann::json::array();
  nlohmann::json im = nlohmann::json::array();
  for (int i = 0; i < d; ++i) {
    nlohmann::json rrow = nlohmann::json::array();
    nlohmann::json irow = nlohmann::json::array();
    for (int j = 0; j < d; ++j) {
      rrow.push_back(op(i, j).real());
      irow.push_back(op(i, j).imag());
    }
    re.push_back(std::move(rrow));
    im.push_back(std::move(irow));
  }
  return {{"dim", d}, {"re", std::move(re)}, {"im", std::move(im)}};
}

namespace {

Operator parse_operator(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("dim") || !j.contains("re") || !j.contains("im")) {
    throw DomainError("matrix JSON needs \"dim\", \"re\" and \"im\"");
  }
  const int d = j.at("dim").get<int>();
  const auto& re = j.at("re");
  const auto& im = j.at("im");
  if (d < 1 || !re.is_array() || !im.is_array() || static_cast<int>(re.size()) != d ||
      static_cast<int>(im.size()) != d) {
    throw DomainError("matrix JSON rows do not match \"dim\"");
  }
  ComplexMatrix m(d, d);
  for (int r = 0; r < d; ++r) {
    if (static_cast<int>(re[r].size()) != d || static_cast<int>(im[r].size()) != d) {
      throw DomainError("matrix JSON row " + std::to_string(r) + " has the wrong length");
    }
    for (int c = 0; c < d; ++c) m(r, c) = Complex(re[r][c].get<double>(), im[r][c].get<double>());
  }
  return Operator(std::move(m));
}

}  // namespace

Operator operator_from_json(const nlohmann::json& j) {
  try {
    return parse_operator(j);
  } catch (const nlohmann::json::exception& e) {
    throw DomainError(std::string("malformed matrix JSON: ") + e.what());
  }
}

nlohmann::json to_json(const Eigen::MatrixXd& m) {
  nlohmann::json rows = nlohmann::json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (Eigen::Index k = 0; k < m.cols(); ++k) row.push_back(m(i, k));
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace boundent
