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
// The bundled corpus of small named objects used by the tests and the CLI.

#ifndef DIACAT_FIXTURES_HPP
#define DIACAT_FIXTURES_HPP

#include <string>
#include <vector>

#include "diacat/document.hpp"

namespace diacat {

struct FixtureInfo {
  std::string name;
  std::string kind; // "algebra", "xmod", "cat1" or "internal"
  std::string note; // where the object comes from
};

/// Every fixture, sorted by name.
const std::vector<FixtureInfo> &fixture_registry();
/// Names of the fixtures of one kind (all when kind is empty).
std::vector<std::string> fixture_names(const std::string &kind = "");

/// Throws Errc::UnknownName; the typed accessors also throw it on a kind
/// mismatch. Crossed modules come back verified.
Object fixture_object(const std::string &name);
Algebra fixture_algebra(const std::string &name);
CrossedModule fixture_xmod(const std::string &name);
Cat1Object fixture_cat1(const std::string &name);
InternalCategory fixture_internal(const std::string &name);

} // namespace diacat

#endif
