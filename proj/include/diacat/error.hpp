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

#ifndef DIACAT_ERROR_HPP
#define DIACAT_ERROR_HPP

#include <stdexcept>
#include <string>

namespace diacat {

enum class Errc {
  DimensionMismatch,
  FieldMismatch,
  FlavorMismatch,
  ParseError,
  NotAnIdeal,
  AxiomViolation,
  InvalidAction,
  InvalidCrossedModule,
  InvalidCat1,
  InvalidInternalCategory,
  LemmaViolation,
  NotAMorphism,
  ResourceCap,
  SearchSpaceTooLarge,
  NotFinite,
  UnknownName,
  Internal,
};

const char *errc_name(Errc code);

/// Every failure raised by the library. The code drives the C API status and
/// the CLI exit code; the message is meant for humans.
class Error : public std::runtime_error {
public:
  Error(Errc code, const std::string &what)
      : std::runtime_error(what), code_(code) {}

  Errc code() const noexcept { return code_; }

private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string &what) {
  throw Error(code, what);
}

} // namespace diacat

#endif
