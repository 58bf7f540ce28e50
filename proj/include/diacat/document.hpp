/* Copyright 2026 The diacat Authors. All Rights Reserved.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *    http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 * ========================================================================= */
// JSON documents for algebras, crossed modules, cat1-objects and internal
// categories. Coefficients travel as strings; keys are emitted sorted.

#ifndef DIACAT_DOCUMENT_HPP
#define DIACAT_DOCUMENT_HPP

#include <string>
#include <variant>

#include <json.hpp>

#include "diacat/cat1.hpp"

namespace diacat {

using Json = nlohmann::json;

/// A crossed module as read from a document, not yet verified.
struct XmodData {
  Matrix mu;
  Action action;
};

using Object = std::variant<Algebra, XmodData, Cat1Object, InternalCategory>;

/// "algebra", "xmod", "cat1" or "internal".
const char *object_kind(const Object &o);

Json scalar_to_json(const Scalar &s);
Json matrix_to_json(const Matrix &m);
Json algebra_to_json(const Algebra &a);
Json xmod_to_json(const Matrix &mu, const Action &act);
Json xmod_to_json(const CrossedModule &x);
Json cat1_to_json(const Cat1Object &c);
Json internal_to_json(const InternalCategory &ic);
Json object_to_json(const Object &o);

/// Structural parsing only; axioms are left to the checkers. Errors are
/// Errc::ParseError (or Dimension/Field/FlavorMismatch) and name the JSON
/// pointer of the offending value.
Algebra algebra_from_json(const Json &j, const std::string &where = "");
XmodData xmod_from_json(const Json &j, const std::string &where = "");
Cat1Object cat1_from_json(const Json &j, const std::string &where = "");
InternalCategory internal_from_json(const Json &j, const std::string &where = "");
/// Detects the kind from the keys present.
Object object_from_json(const Json &j);
/// Parses text, then object_from_json.
Object parse_document(const std::string &text);

/// Canonical text: sorted keys, two-space indent, trailing newline.
std::string dump(const Json &j);

} // namespace diacat

#endif
