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
// check / construct / verify as used by the C API and the command line.
// Every entry point returns a JSON report with sorted keys.

#ifndef DIACAT_COMMANDS_HPP
#define DIACAT_COMMANDS_HPP

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "diacat/document.hpp"
#include "diacat/verify.hpp"

namespace diacat {

struct NamedObject {
  std::string name;
  Object object;
};

struct CommandResult {
  Json report;
  bool passed = false;
  std::optional<Object> output;
};

Json report_to_json(const Report &r);

/// Flavor checker of the object (axioms, crossed-module identities plus the
/// structural lemma, cat1 or internal-category axioms).
CommandResult run_check(const Object &o);

/// Registered construction kinds, in a stable order. Parametric kinds are
/// listed as "free-dias:<g>[:Q|:<p>]" and "tensor:<g>[:Q|:<p>]".
const std::vector<std::string> &construct_kinds();
/// Errc::UnknownName for an unregistered kind, Errc::ParseError when the
/// number or type of inputs is wrong.
CommandResult run_construct(const std::string &kind, const std::vector<Object> &inputs,
                            std::size_t trunc);

/// what: square:<id>, adjunction:ud, adjunction:xud, adjunction:chain:<i>,
/// equivalence:cat1, equivalence:internal, parallelepiped or
/// property:semidirect. With no inputs the bundled battery is used;
/// adjunctions take their inputs as consecutive pairs.
CommandResult run_verify(const std::string &what, const std::vector<NamedObject> &inputs,
                         std::size_t trunc, std::uint64_t seed);

/// A random candidate over F2 for the semidirect-product criterion: valid
/// dialgebras L and D of dimension <= 2, a valid action (trivial, pulled back
/// along a morphism, ambient products on an ideal, or random tensors that
/// happen to satisfy the axioms) and an arbitrary linear mu.
struct XdiasCandidate {
  Matrix mu;
  Action action;
};
XdiasCandidate random_xdias_candidate(std::mt19937_64 &rng);

/// Every dialgebra structure of dimension n over F2 (n <= 2), in order of
/// the bit pattern of their tensors.
std::vector<Algebra> all_f2_dialgebras(std::size_t n);

} // namespace diacat

#endif
