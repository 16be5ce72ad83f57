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

#ifndef SKEWREDUCE_SERIALIZATION_HPP
#define SKEWREDUCE_SERIALIZATION_HPP

#include <string>
#include <utility>

#include <json.hpp>

#include "skewreduce/gabidulin.hpp"

namespace skewreduce {

inline constexpr const char* kMatrixSchema = "skewreduce-matrix-1";
inline constexpr const char* kInstanceSchema = "skewreduce-instance-1";
inline constexpr const char* kDecodeSchema = "skewreduce-decode-1";

// Field spec: {"p":2,"u":1,"m":24,"modulus":[c_0,...,c_{um}]}, digits in [0,p).
nlohmann::json field_to_json(const FieldContext& field);
FieldPtr field_from_json(const nlohmann::json& j);

// Polynomials are little-endian lists of canonical integer element encodings.
nlohmann::json poly_to_json(const SkewPoly& p);
SkewPoly poly_from_json(const FieldPtr& field, const nlohmann::json& j);

// Matrix files embed the field spec next to the row-major coefficient lists.
nlohmann::json matrix_to_json(const SkewMatrix& m);
std::pair<FieldPtr, SkewMatrix> matrix_from_json(const nlohmann::json& j);

struct InstanceFile {
  CodeParams params;
  std::vector<std::vector<FieldElement>> received;
};

nlohmann::json instance_to_json(const CodeParams& params,
                                const std::vector<std::vector<FieldElement>>& received);
InstanceFile instance_from_json(const nlohmann::json& j);

nlohmann::json decode_result_to_json(const DecodeResult& result);

nlohmann::json load_json(const std::string& path);
void save_json(const std::string& path, const nlohmann::json& j);

}  // namespace skewreduce

#endif  // SKEWREDUCE_SERIALIZATION_HPP
