// Copyright 2026 The lcacode Authors
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

#ifndef LCA_TOOLS_SERIALIZE_H
#define LCA_TOOLS_SERIALIZE_H

#include <string>
#include <variant>
#include <vector>

#include "json.hpp"
#include "lca/codes.h"
#include "lca/gates.h"

namespace lca::io {

/// Insertion-ordered so that identical inputs dump to identical bytes.
using Json = nlohmann::ordered_json;

/// Every rational is a string "p/q" or "p". All parse errors throw std::invalid_argument.
Json to_json(const Rational &q);
Json to_json(const std::vector<Integer> &v);
Json to_json(const std::vector<Rational> &v);
/// Array of rows.
Json to_json(const RationalMatrix &m);
/// {"radicands": [...], "base": rows, "col_radicands": [...]}.
Json to_json(const ScaledMatrix &m);
Json to_json(const MoritaElement &g);
Json to_json(const VerifyReport &report);
Json to_json(const GaussianClifford &v);

Rational rational_from_json(const Json &j);
Integer integer_from_json(const Json &j);
std::vector<Integer> integers_from_json(const Json &j);
std::vector<Rational> rationals_from_json(const Json &j);
/// Accepts an array of rows or a MatrixFile object {"rows": [...]}. Rows must be rectangular.
RationalMatrix matrix_from_json(const Json &j);
ScaledMatrix scaled_from_json(const Json &j);
MoritaElement morita_from_json(const Json &j);

/// {"rows": [...]}.
Json matrix_file(const RationalMatrix &m);

using Code = std::variant<SimpleLcaCode, GeneralLcaCode>;

/// CodeFile with "kind": "simple" or "general". Every stored field is written; nothing is
/// recomputed on load, so a corrupted file parses and then fails verification.
Json code_to_json(const Code &code);
Code code_from_json(const Json &j);

/// Throws std::runtime_error when the file cannot be read, std::invalid_argument on bad JSON.
Json read_json_file(const std::string &path);
/// Throws std::runtime_error when the file cannot be written.
void write_text_file(const std::string &path, const std::string &text);

}  // namespace lca::io

#endif
