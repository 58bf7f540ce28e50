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
// Identity templates shared by the algebra and action checkers.

#ifndef DIACAT_IDENTITIES_HPP
#define DIACAT_IDENTITIES_HPP

#include <string>
#include <vector>

#include "diacat/algebra.hpp"

namespace diacat {

struct Identity {
  enum Kind {
    Assoc,     // (x op1 y) op2 z = x op3 (y op4 z)
    Leibniz,   // [x,[y,z]] = [[x,y],z] - [[x,z],y]
    Alternate, // [x,x] = 0
    AntiSym,   // [x,y] + [y,x] = 0
  };
  std::string name;
  Kind kind;
  std::size_t arity;
  std::size_t op1 = 0, op2 = 0, op3 = 0, op4 = 0;
};

struct Evaluated {
  Vector lhs, rhs;
  bool holds() const { return lhs == rhs; }
};

const std::vector<Identity> &identities(Flavor f);

/// Both sides on basis elements (i, j, k); unused indices are ignored.
Evaluated eval_identity(const Identity &id, const std::vector<Bilinear> &p, std::size_t i,
                        std::size_t j, std::size_t k);

} // namespace diacat

#endif
