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

#include "diacat/limits.hpp"

#include <cstdlib>
#include <string>

#include "diacat/error.hpp"

namespace diacat {

std::size_t max_dim(Field f) {
  if (const char *env = std::getenv("DIACAT_MAX_DIM")) {
    char *end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && v > 0)
      return static_cast<std::size_t>(v);
  }
  return f.is_rational() ? 128 : 512;
}

void require_dim(Field f, std::size_t dim, const char *what) {
  std::size_t cap = max_dim(f);
  if (dim > cap)
    fail(Errc::ResourceCap, std::string(what) + ": dimension " + std::to_string(dim) +
                                " exceeds the cap " + std::to_string(cap) +
                                " (set DIACAT_MAX_DIM to raise it)");
}

} // namespace diacat
