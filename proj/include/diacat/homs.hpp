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
// Exhaustive hom-set enumeration over prime fields. Used as an oracle for the
// adjunction checks.

#ifndef DIACAT_HOMS_HPP
#define DIACAT_HOMS_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "diacat/envelope.hpp"
#include "diacat/limits.hpp"

namespace diacat {

/// Every morphism a -> b, in lexicographic order of their columns (entries
/// read as base-p digits). Throws Errc::NotFinite over Q and
/// Errc::SearchSpaceTooLarge once more than `budget` partial assignments
/// have been visited.
std::vector<Matrix> enumerate_homs(const Algebra &a, const Algebra &b,
                                   std::uint64_t budget = kHomSearchBudget);
/// Every crossed-module morphism x -> y: beta is assigned before alpha and
/// each condition is tested as soon as its columns are known.
std::vector<XmodPair> enumerate_xmod_homs(const CrossedModule &x, const CrossedModule &y,
                                          std::uint64_t budget = kHomSearchBudget);

/// First invertible entry of the enumeration, if any.
std::optional<Matrix> find_algebra_isomorphism(const Algebra &a, const Algebra &b,
                                               std::uint64_t budget = kHomSearchBudget);
std::optional<XmodPair> find_xmod_isomorphism(const CrossedModule &x, const CrossedModule &y,
                                              std::uint64_t budget = kHomSearchBudget);

} // namespace diacat

#endif
