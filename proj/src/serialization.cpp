/*
   Copyright 2026 The skewreduce authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include "skewreduce/serialization.hpp"

#include <fstream>
#include <stdexcept>

namespace skewreduce {

using nlohmann::json;

json field_to_json(const FieldContext& field) {
  json j;
  j["p"] = field.characteristic();
  j["u"] = field.subfield_exponent();
  j["m"] = field.extension_degree();
  j["modulus"] = field.modulus();
  return j;
}

FieldPtr field_from_json(const json& j) {
  const auto p = j.at("p").get<std::uint32_t>();
  const auto u = j.at("u").get<std::uint32_t>();
  const auto m = j.at("m").get<std::uint32_t>();
  std::optional<std::vector<std::uint8_t>> modulus;
  if (j.contains("modulus"))
    modulus = j.at("modulus").get<std::vector<std::uint8_t>>();
  return FieldContext::create(p, u, m, std::move(modulus));
}

json poly_to_json(const SkewPoly& p) {
  json j = json::array();
  for (int i = 0; i <= p.degree(); ++i) j.push_back(p.coeff(i).value);
  return j;
}

SkewPoly poly_from_json(const FieldPtr& field, const json& j) {
  std::vector<FieldElement> coeffs;
  coeffs.reserve(j.size());
  for (const auto& v : j) coeffs.push_back(field->from_value(v.get<std::uint64_t>()));
  return SkewPoly::from_coeffs(field, std::move(coeffs));
}

json matrix_to_json(const SkewMatrix& m) {
  json rows = json::array();
  for (int i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (int c = 0; c < m.cols(); ++c) row.push_back(poly_to_json(m.at(i, c)));
    rows.push_back(std::move(row));
  }
  return {{"schema", kMatrixSchema},
          {"field", field_to_json(*m.field())},
          {"rows", std::move(rows)}};
}

std::pair<FieldPtr, SkewMatrix> matrix_from_json(const json& j) {
  if (j.value("schema", "") != kMatrixSchema)
    throw std::invalid_argument("not a matrix file");
  FieldPtr field = field_from_json(j.at("field"));
  std::vector<SkewVector> rows;
  for (const auto& row : j.at("rows")) {
    std::vector<SkewPoly> entries;
    entries.reserve(row.size());
    for (const auto& poly : row) entries.push_back(poly_from_json(field, poly));
    rows.emplace_back(field, std::move(entries));
  }
  return {field, SkewMatrix(field, std::move(rows))};
}

json instance_to_json(const CodeParams& params,
                      const std::vector<std::vector<FieldElement>>& received) {
  json locators = json::array();
  for (const auto& g : params.locators) locators.push_back(g.value);
  json rec = json::array();
  for (const auto& row : received) {
    json r = json::array();
    for (const auto& v : row) r.push_back(v.value);
    rec.push_back(std::move(r));
  }
  return {{"schema", kInstanceSchema},
          {"field", field_to_json(*params.field)},
          {"n", params.n},
          {"ell", params.ell},
          {"k", params.k},
          {"locators", std::move(locators)},
          {"received", std::move(rec)}};
}

InstanceFile instance_from_json(const json& j) {
  if (j.value("schema", "") != kInstanceSchema)
    throw std::invalid_argument("not an instance file");
  FieldPtr field = field_from_json(j.at("field"));
  std::vector<FieldElement> locators;
  for (const auto& v : j.at("locators"))
    locators.push_back(field->from_value(v.get<std::uint64_t>()));
  CodeParams params = CodeParams::make(
      field, j.at("n").get<int>(), j.at("ell").get<int>(),
      j.at("k").get<std::vector<int>>(), std::move(locators));
  std::vector<std::vector<FieldElement>> received;
  for (const auto& row : j.at("received")) {
    std::vector<FieldElement> r;
    r.reserve(row.size());
    for (const auto& v : row) r.push_back(field->from_value(v.get<std::uint64_t>()));
    received.push_back(std::move(r));
  }
  return {std::move(params), std::move(received)};
}

json decode_result_to_json(const DecodeResult& result) {
  json j;
  j["schema"] = kDecodeSchema;
  j["status"] = result.status == DecodeResult::Status::kOk ? "ok" : "failure";
  if (result.status == DecodeResult::Status::kOk) {
    json msgs = json::array();
    for (const auto& f : result.messages) msgs.push_back(poly_to_json(f));
    j["messages"] = std::move(msgs);
  } else {
    j["reason"] = to_string(result.reason);
  }
  j["lambda_degree"] = result.lambda_degree;
  j["defect"] = result.defect;
  j["wall_time_ms"] = result.wall_time_ms;
  return j;
}

json load_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  json j;
  in >> j;
  return j;
}

void save_json(const std::string& path, const json& j) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << j.dump(2) << '\n';
}

}  // namespace skewreduce
