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
// Resource caps shared by every construction.

#ifndef DIACAT_LIMITS_HPP
#define DIACAT_LIMITS_HPP

#include <cstddef>
#include <cstdint>

#include "diacat/scalar.hpp"

namespace diacat {

/// Largest ambient dimension a construction may produce: DIACAT_MAX_DIM when
/// set, else 512 over F_p and 128 over Q.
std::size_t max_dim(Field f);
/// Throws Errc::ResourceCap when dim exceeds max_dim(f).
void require_dim(Field f, std::size_t dim, const char *what);

/// Node budget of the hom enumerators.
constexpr std::uint64_t kHomSearchBudget = std::uint64_t(1) << 20;

} // namespace diacat

#endif
